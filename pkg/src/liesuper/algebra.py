"""Finite-dimensional Lie superalgebras over Q given by structure constants."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import IntEnum
from fractions import Fraction
from functools import cached_property
from itertools import combinations_with_replacement
from typing import Iterable, Mapping, Sequence

import numpy as np

from . import linalg
from .errors import MalformedAlgebraError, NotAnIdealError, NotGradedError


class Parity(IntEnum):
    EVEN = 0
    ODD = 1

    def __add__(self, other):
        return Parity((int(self) + int(other)) % 2)

    __radd__ = __add__

    def __str__(self):
        return self.name.lower()


@dataclass(frozen=True, order=True)
class SuperDim:
    """Superdimension ``(even | odd)``."""

    even: int
    odd: int

    def __post_init__(self):
        if self.even < 0 or self.odd < 0:
            raise ValueError(f"negative superdimension ({self.even}|{self.odd})")

    @property
    def total(self) -> int:
        return self.even + self.odd

    def __add__(self, other: "SuperDim") -> "SuperDim":
        return SuperDim(self.even + other.even, self.odd + other.odd)

    def __sub__(self, other: "SuperDim") -> "SuperDim":
        return SuperDim(self.even - other.even, self.odd - other.odd)

    def __str__(self):
        return f"({self.even}|{self.odd})"

    def as_tuple(self) -> tuple[int, int]:
        return (self.even, self.odd)


ZERO_DIM = SuperDim(0, 0)

Vector = tuple  # tuple of Fraction, one entry per basis vector


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True, eq=False)
class LieSuperalgebra:
    """Structure constants on a homogeneous basis, even vectors first.

    ``brackets`` maps ``(i, j)`` with ``i <= j`` to ``{k: c}`` meaning
    ``[e_i, e_j] = sum c e_k``.  Pairs ``i > j`` follow from graded skew
    symmetry.  Axioms are *not* checked on construction (see ``validate``);
    only index ranges are.
    """

    dim_even: int
    dim_odd: int
    brackets: Mapping[tuple[int, int], Mapping[int, Fraction]] = field(default_factory=dict)
    name: str | None = None
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        if self.dim_even < 0 or self.dim_odd < 0:
            raise MalformedAlgebraError("dimensions must be nonnegative")
        d = self.dim_even + self.dim_odd
        clean: dict[tuple[int, int], tuple[tuple[int, Fraction], ...]] = {}
        for key, coeffs in dict(self.brackets).items():
            try:
                i, j = (int(key[0]), int(key[1]))
            except (TypeError, ValueError, IndexError):
                raise MalformedAlgebraError(f"bad bracket key {key!r}") from None
            if not (0 <= i < d and 0 <= j < d):
                raise MalformedAlgebraError(f"bracket index ({i},{j}) outside 0..{d - 1}")
            if i > j:
                raise MalformedAlgebraError(f"bracket ({i},{j}) must be stored with i <= j")
            items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
            row: dict[int, Fraction] = {}
            for k, c in items:
                k = int(k)
                if not 0 <= k < d:
                    raise MalformedAlgebraError(f"coefficient index {k} outside 0..{d - 1} in ({i},{j})")
                row[k] = row.get(k, Fraction(0)) + _frac(c)
            row = {k: c for k, c in row.items() if c != 0}
            if row:
                clean[(i, j)] = tuple(sorted(row.items()))
        object.__setattr__(self, "brackets", dict(sorted(clean.items())))
        if self.labels is not None:
            if len(self.labels) != d:
                raise MalformedAlgebraError("one label per basis vector required")
            object.__setattr__(self, "labels", tuple(self.labels))

    # -- shape ---------------------------------------------------------
    @property
    def dim(self) -> int:
        return self.dim_even + self.dim_odd

    @property
    def superdim(self) -> SuperDim:
        return SuperDim(self.dim_even, self.dim_odd)

    @cached_property
    def parities(self) -> tuple[Parity, ...]:
        return (Parity.EVEN,) * self.dim_even + (Parity.ODD,) * self.dim_odd

    def basis_labels(self) -> tuple[str, ...]:
        return self.labels if self.labels is not None else tuple(f"e{i + 1}" for i in range(self.dim))

    def __repr__(self):
        nm = f" {self.name}" if self.name else ""
        return f"<LieSuperalgebra{nm} {self.superdim}, {len(self.brackets)} brackets>"

    def __eq__(self, other):
        if not isinstance(other, LieSuperalgebra):
            return NotImplemented
        return (self.dim_even, self.dim_odd, self.brackets) == (other.dim_even, other.dim_odd, other.brackets)

    def __hash__(self):
        return hash((self.dim_even, self.dim_odd, tuple(self.brackets.items())))

    # -- bracket -------------------------------------------------------
    @cached_property
    def _table(self) -> dict[tuple[int, int], dict[int, Fraction]]:
        par = self.parities
        full: dict[tuple[int, int], dict[int, Fraction]] = {}
        for (i, j), coeffs in self.brackets.items():
            full[(i, j)] = dict(coeffs)
            if i != j:
                sign = 1 if par[i] * par[j] else -1
                full[(j, i)] = {k: sign * c for k, c in coeffs}
        return full

    def basis_bracket(self, i: int, j: int) -> dict[int, Fraction]:
        return self._table.get((i, j), {})

    def structure_tensor(self) -> np.ndarray:
        """Dense ``C[i, j, k]`` with ``[e_i, e_j] = sum_k C[i, j, k] e_k``."""
        d = self.dim
        c = np.zeros((d, d, d), dtype=object)
        for (i, j), row in self._table.items():
            for k, v in row.items():
                c[i, j, k] = v
        return c

    def ad(self, i: int) -> np.ndarray:
        """Matrix whose row ``j`` is ``[e_i, e_j]``."""
        d = self.dim
        out = np.zeros((d, d), dtype=object)
        for j in range(d):
            for k, v in self.basis_bracket(i, j).items():
                out[j, k] = v
        return out

    def unit(self, i: int) -> Vector:
        return tuple(Fraction(int(k == i)) for k in range(self.dim))

    def parity_of(self, v: Sequence) -> Parity | None:
        """Parity of a homogeneous nonzero vector, else ``None``."""
        ps = {self.parities[k] for k, x in enumerate(v) if x != 0}
        return ps.pop() if len(ps) == 1 else None


def bracket(L: LieSuperalgebra, u: Sequence, v: Sequence) -> Vector:
    """Bilinear extension of the structure constants to coordinate vectors."""
    if len(u) != L.dim or len(v) != L.dim:
        raise ValueError(f"vectors must have length {L.dim}")
    out = [Fraction(0)] * L.dim
    nz_u = [(i, _frac(x)) for i, x in enumerate(u) if x != 0]
    nz_v = [(j, _frac(x)) for j, x in enumerate(v) if x != 0]
    table = L._table
    for i, a in nz_u:
        for j, b in nz_v:
            row = table.get((i, j))
            if row:
                ab = a * b
                for k, c in row.items():
                    out[k] += ab * c
    return tuple(out)


def _bracket_rows(L: LieSuperalgebra, U: np.ndarray, V: np.ndarray) -> list[Vector]:
    return [bracket(L, u, v) for u in U for v in V]


# --------------------------------------------------------------------------
# graded subspaces


@dataclass(frozen=True)
class GradedSubspace:
    """A graded subspace of a superspace, stored as its RREF rows.

    Because even coordinates precede odd ones, the RREF of a graded subspace
    consists of homogeneous rows, so equality is plain coordinate comparison.
    """

    parities: tuple[Parity, ...]
    basis: tuple[tuple[Fraction, ...], ...]

    @classmethod
    def span(cls, parities: Sequence[Parity], vectors, require_graded: bool = True) -> "GradedSubspace":
        parities = tuple(Parity(p) for p in parities)
        d = len(parities)
        rows, piv = linalg.rref(linalg.as_matrix(vectors, d)) if len(vectors) else (np.zeros((0, d)), [])
        basis = tuple(tuple(r) for r in rows)
        if require_graded:
            for r in basis:
                if len({parities[k] for k, x in enumerate(r) if x != 0}) > 1:
                    raise NotGradedError("span is not a graded subspace")
        return cls(parities, basis)

    @classmethod
    def zero(cls, parities: Sequence[Parity]) -> "GradedSubspace":
        return cls(tuple(Parity(p) for p in parities), ())

    @classmethod
    def whole(cls, parities: Sequence[Parity]) -> "GradedSubspace":
        d = len(parities)
        return cls.span(parities, [[Fraction(int(i == j)) for j in range(d)] for i in range(d)])

    @property
    def ambient_dim(self) -> int:
        return len(self.parities)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def superdim(self) -> SuperDim:
        even = sum(1 for r in self.basis if self.parities[_pivot(r)] == Parity.EVEN)
        return SuperDim(even, self.dim - even)

    @property
    def pivots(self) -> list[int]:
        return [_pivot(r) for r in self.basis]

    def matrix(self) -> np.ndarray:
        return linalg.as_matrix([list(r) for r in self.basis], self.ambient_dim)

    def contains(self, v: Sequence) -> bool:
        return linalg.contains(self.matrix(), [list(v)], self.ambient_dim)

    def __le__(self, other: "GradedSubspace") -> bool:
        if self.dim == 0:
            return True
        return linalg.contains(other.matrix(), self.matrix(), self.ambient_dim)

    def __add__(self, other: "GradedSubspace") -> "GradedSubspace":
        return GradedSubspace.span(self.parities, [list(r) for r in self.basis + other.basis])

    def intersect(self, other: "GradedSubspace") -> "GradedSubspace":
        rows = linalg.span_intersection(self.matrix(), other.matrix(), self.ambient_dim)
        return GradedSubspace.span(self.parities, [list(r) for r in rows])

    def __str__(self):
        return f"GradedSubspace{self.superdim} in dim {self.ambient_dim}"


def _pivot(row: Sequence) -> int:
    for k, x in enumerate(row):
        if x != 0:
            return k
    raise ValueError("zero row")


def superdim(x: "LieSuperalgebra | GradedSubspace") -> SuperDim:
    return x.superdim


# --------------------------------------------------------------------------
# validation


@dataclass(frozen=True)
class Violation:
    axiom: str  # "grading" | "skew-symmetry" | "jacobi"
    indices: tuple[int, ...]
    residual: Vector

    def __str__(self):
        nz = {k: str(c) for k, c in enumerate(self.residual) if c != 0}
        return f"{self.axiom} at {self.indices}: residual {nz}"


def jacobi_residual(L: LieSuperalgebra, u: Sequence, v: Sequence, w: Sequence) -> Vector:
    """Graded Jacobi sum for homogeneous ``u, v, w`` (zero iff the identity holds)."""
    pu, pv, pw = (L.parity_of(x) or 0 for x in (u, v, w))
    s1 = -1 if pu * pw else 1
    s2 = -1 if pv * pu else 1
    s3 = -1 if pw * pv else 1
    a = bracket(L, u, bracket(L, v, w))
    b = bracket(L, v, bracket(L, w, u))
    c = bracket(L, w, bracket(L, u, v))
    return tuple(s1 * x + s2 * y + s3 * z for x, y, z in zip(a, b, c))


def validate(L: LieSuperalgebra) -> list[Violation]:
    """Every violated axiom on basis elements; empty iff ``L`` is a Lie superalgebra."""
    report: list[Violation] = []
    par = L.parities
    for (i, j), coeffs in L.brackets.items():
        target = par[i] + par[j]
        wrong = {k: c for k, c in coeffs if par[k] != target}
        if wrong:
            res = tuple(wrong.get(k, Fraction(0)) for k in range(L.dim))
            report.append(Violation("grading", (i, j), res))
        if i == j and par[i] == Parity.EVEN:
            res = tuple(dict(coeffs).get(k, Fraction(0)) for k in range(L.dim))
            report.append(Violation("skew-symmetry", (i, i), res))
    for i, j, k in combinations_with_replacement(range(L.dim), 3):
        res = jacobi_residual(L, L.unit(i), L.unit(j), L.unit(k))
        if any(res):
            report.append(Violation("jacobi", (i, j, k), res))
    return report


def is_valid(L: LieSuperalgebra) -> bool:
    return not validate(L)


# --------------------------------------------------------------------------
# structure


def derived_subalgebra(L: LieSuperalgebra) -> GradedSubspace:
    rows = []
    for coeffs in L.brackets.values():
        v = [Fraction(0)] * L.dim
        for k, c in coeffs:
            v[k] = c
        rows.append(v)
    return GradedSubspace.span(L.parities, rows)


def center(L: LieSuperalgebra) -> GradedSubspace:
    """Kernel of ``u -> ([u, e_j])_j``, computed one parity block at a time."""
    d = L.dim
    rows = []
    for block in (range(L.dim_even), range(L.dim_even, d)):
        block = list(block)
        if not block:
            continue
        m = np.zeros((len(block), d * d), dtype=object)
        for r, i in enumerate(block):
            for j in range(d):
                for k, c in L.basis_bracket(i, j).items():
                    m[r, j * d + k] = c
        for y in linalg.left_nullspace(m):
            v = [Fraction(0)] * d
            for r, i in enumerate(block):
                v[i] = Fraction(int(y[r]))
            rows.append(v)
    return GradedSubspace.span(L.parities, rows)


def bracket_subspaces(L: LieSuperalgebra, U: GradedSubspace, V: GradedSubspace) -> GradedSubspace:
    rows = _bracket_rows(L, U.matrix(), V.matrix())
    return GradedSubspace.span(L.parities, [list(r) for r in rows if any(r)])


def lower_central_series(L: LieSuperalgebra) -> list[GradedSubspace]:
    """``[gamma_1 = L, gamma_2, ...]`` ending at zero or at the first repeat."""
    whole = GradedSubspace.whole(L.parities)
    series = [whole]
    while series[-1].dim:
        nxt = bracket_subspaces(L, series[-1], whole)
        if nxt == series[-1]:
            break
        series.append(nxt)
    return series


def nilpotency_class(L: LieSuperalgebra) -> int | None:
    """Class ``c`` with ``gamma_{c+1} = 0``; ``None`` when not nilpotent."""
    series = lower_central_series(L)
    if series[-1].dim:
        return None
    return len(series) - 1


def is_nilpotent(L: LieSuperalgebra) -> bool:
    return nilpotency_class(L) is not None


def is_graded_ideal(L: LieSuperalgebra, U: GradedSubspace) -> bool:
    if U.dim == 0:
        return True
    whole = GradedSubspace.whole(L.parities)
    return bracket_subspaces(L, U, whole) <= U


# --------------------------------------------------------------------------
# constructions


def direct_sum(L: LieSuperalgebra, K: LieSuperalgebra, name: str | None = None) -> LieSuperalgebra:
    """Block sum, re-sorted so that all even vectors come first."""
    # new index of each old basis vector
    mL = list(range(L.dim_even)) + [L.dim_even + K.dim_even + i for i in range(L.dim_odd)]
    mK = [L.dim_even + i for i in range(K.dim_even)] + [
        L.dim_even + K.dim_even + L.dim_odd + i for i in range(K.dim_odd)
    ]
    brackets: dict[tuple[int, int], dict[int, Fraction]] = {}
    for alg, idx in ((L, mL), (K, mK)):
        for (i, j), coeffs in alg.brackets.items():
            a, b = idx[i], idx[j]
            # re-sorting never changes relative order within one summand
            brackets[(a, b)] = {idx[k]: c for k, c in coeffs}
    labels = [""] * (L.dim + K.dim)
    ln, kn = L.name or "L", K.name or "K"
    if ln == kn:
        ln, kn = ln + "#1", kn + "#2"
    for alg, idx, nm in ((L, mL, ln), (K, mK, kn)):
        for old, lab in enumerate(alg.basis_labels()):
            labels[idx[old]] = f"{nm}.{lab}"
    if name is None:
        name = f"{L.name or 'L'}+{K.name or 'K'}"
    return LieSuperalgebra(L.dim_even + K.dim_even, L.dim_odd + K.dim_odd, brackets, name, tuple(labels))


@dataclass(frozen=True)
class QuotientData:
    algebra: LieSuperalgebra
    complement: tuple[int, ...]  # basis indices of L kept as the quotient basis
    projection: np.ndarray  # row j = image of e_j in quotient coordinates


def quotient_data(L: LieSuperalgebra, I: GradedSubspace, name: str | None = None, check: bool = True) -> QuotientData:
    if I.parities != L.parities:
        raise ValueError("subspace does not live in this algebra")
    if check and not is_graded_ideal(L, I):
        raise NotAnIdealError("subspace is not a graded ideal")
    piv = I.pivots
    comp = tuple(k for k in range(L.dim) if k not in set(piv))
    pos = {k: a for a, k in enumerate(comp)}
    proj = np.zeros((L.dim, len(comp)), dtype=object)
    proj[:, :] = Fraction(0)
    for k in comp:
        proj[k, pos[k]] = Fraction(1)
    for r, p in zip(I.basis, piv):
        for k in comp:
            proj[p, pos[k]] = -r[k]
    brackets: dict[tuple[int, int], dict[int, Fraction]] = {}
    for a, i in enumerate(comp):
        for b in range(a, len(comp)):
            j = comp[b]
            coeffs = L.basis_bracket(i, j)
            if not coeffs:
                continue
            img = [Fraction(0)] * len(comp)
            for k, c in coeffs.items():
                for t in range(len(comp)):
                    if proj[k, t]:
                        img[t] += c * proj[k, t]
            brackets[(a, b)] = {t: x for t, x in enumerate(img) if x}
    ne = sum(1 for k in comp if L.parities[k] == Parity.EVEN)
    labels = tuple(L.basis_labels()[k] for k in comp)
    Q = LieSuperalgebra(ne, len(comp) - ne, brackets, name or (f"{L.name}/I" if L.name else None), labels)
    return QuotientData(Q, comp, proj)


def quotient(L: LieSuperalgebra, I: GradedSubspace, name: str | None = None) -> LieSuperalgebra:
    """``L/I`` on the basis vectors of ``L`` that are not pivots of ``I``."""
    return quotient_data(L, I, name).algebra


def change_basis(L: LieSuperalgebra, M, name: str | None = None) -> LieSuperalgebra:
    """Rewrite ``L`` on the basis ``f_a = sum_i M[a, i] e_i``.

    ``M`` must be invertible and parity preserving (block diagonal with respect
    to the even/odd split).
    """
    M = linalg.to_fractions(M)
    d = L.dim
    if M.shape != (d, d):
        raise ValueError("change of basis must be square")
    par = L.parities
    for a in range(d):
        for i in range(d):
            if M[a, i] != 0 and par[a] != par[i]:
                raise ValueError("change of basis mixes parities")
    if linalg.rank(M) != d:
        raise ValueError("change of basis is singular")
    coords = linalg.Coordinates(M)
    rows = []
    pairs = []
    for a in range(d):
        for b in range(a, d):
            rows.append(list(bracket(L, list(M[a]), list(M[b]))))
            pairs.append((a, b))
    cs = coords(rows)
    brackets = {}
    for (a, b), c in zip(pairs, cs):
        nz = {k: x for k, x in enumerate(c) if x}
        if nz:
            brackets[(a, b)] = nz
    return LieSuperalgebra(L.dim_even, L.dim_odd, brackets, name or L.name)


def vectors_in_span(U: GradedSubspace, vectors: Iterable[Sequence]) -> bool:
    vs = [list(v) for v in vectors]
    if not vs:
        return True
    return linalg.contains(U.matrix(), vs, U.ambient_dim)
