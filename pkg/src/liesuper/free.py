"""Truncated free Lie superalgebras.

The free Lie superalgebra on graded generators embeds in the free associative
superalgebra through ``[a, b] = ab - (-1)^{|a||b|} ba`` (char 0).  Degree by
degree we expand the left-normed candidates ``[g, w]`` there, keep a maximal
independent subset as basis, and read off structure constants by solving in
the associative coordinates.  Per-degree dimensions are checked against the
PBW count ``T(V) = S(L_even) ⊗ Λ(L_odd)``, which never looks at the basis.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Sequence, Union

import numpy as np
from scipy import sparse

from . import linalg
from ._kernels import gauss_jordan, lcm_all
from .algebra import LieSuperalgebra, Parity
from .errors import OracleLimitError

# a bracket word: generator index, or a pair (left, right) meaning [left, right]
Word = Union[int, tuple]
Poly = dict  # associative word (tuple of generator indices) -> int


def default_limits() -> dict[str, int]:
    """Oracle size limits, overridable through the environment."""
    return {
        "max_generators": int(os.environ.get("LIESUPER_MAX_GENERATORS", 8)),
        "max_class": int(os.environ.get("LIESUPER_MAX_CLASS", 5)),
        "max_free_dim": int(os.environ.get("LIESUPER_MAX_FREE_DIM", 1500)),
    }


def render(word: Word, labels: Sequence[str]) -> str:
    if isinstance(word, int):
        return labels[word]
    return f"[{render(word[0], labels)},{render(word[1], labels)}]"


def word_degree(word: Word) -> int:
    return 1 if isinstance(word, int) else word_degree(word[0]) + word_degree(word[1])


def _word_parity(w: tuple, par: Sequence[int]) -> int:
    return sum(par[g] for g in w) % 2


def supercommutator(a: Poly, pa: int, b: Poly, pb: int) -> Poly:
    sign = 1 if pa * pb else -1  # -(-1)^{|a||b|}
    out: dict[tuple, int] = {}
    for wa, ca in a.items():
        for wb, cb in b.items():
            k = wa + wb
            out[k] = out.get(k, 0) + ca * cb
            k = wb + wa
            out[k] = out.get(k, 0) + sign * ca * cb
    return {k: v for k, v in out.items() if v}


# --------------------------------------------------------------------------
# independent dimension count


def _series_mul(a: dict, b: dict, top: int) -> dict:
    out: dict[tuple[int, int], int] = {}
    for (i, j), x in a.items():
        for (k, l), y in b.items():
            if i + j + k + l <= top:
                out[(i + k, j + l)] = out.get((i + k, j + l), 0) + x * y
    return out


def pbw_dimensions(n_even: int, n_odd: int, top: int) -> dict[int, tuple[int, int]]:
    """``{d: (even, odd)}`` dimensions of the free Lie superalgebra, d = 1..top.

    Solves ``1/(1 - p x - q y) = prod (1 - x^i y^j)^(-a_ij) (1 + x^i y^j)^(a_ij)``
    (first factor for j even, second for j odd) one total degree at a time.
    """
    target = {(i, d - i): comb(d, i) * n_even**i * n_odd ** (d - i) for d in range(top + 1) for i in range(d + 1)}
    a: dict[tuple[int, int], int] = {}
    prod: dict[tuple[int, int], int] = {(0, 0): 1}
    for d in range(1, top + 1):
        new = {}
        for i in range(d + 1):
            j = d - i
            new[(i, j)] = target[(i, j)] - prod.get((i, j), 0)
        a.update(new)
        for (i, j), mult in new.items():
            if mult == 0:
                continue
            factor = {(0, 0): 1}
            k = 1
            while k * d <= top:
                if j % 2 == 0:
                    c = comb(mult + k - 1, k)
                else:
                    c = comb(mult, k)
                if c:
                    factor[(k * i, k * j)] = c
                k += 1
            prod = _series_mul(prod, factor, top)
    out = {}
    for d in range(1, top + 1):
        ev = sum(a[(i, d - i)] for i in range(d + 1) if (d - i) % 2 == 0)
        od = sum(a[(i, d - i)] for i in range(d + 1) if (d - i) % 2 == 1)
        out[d] = (ev, od)
    return out


def free_dimension(parities: Sequence[int], class_bound: int) -> int:
    p = sum(1 for x in parities if x == 0)
    dims = pbw_dimensions(p, len(parities) - p, class_bound)
    return sum(e + o for e, o in dims.values())


# --------------------------------------------------------------------------
# construction


@dataclass(frozen=True, eq=False)
class TruncatedFreeAlgebra:
    """Free nilpotent Lie superalgebra of class ``class_bound``.

    ``algebra`` is the underlying ``LieSuperalgebra`` (even basis first);
    ``degree[i]`` and ``words[i]`` give the bracket length and left-normed
    bracket word of basis vector ``i``; ``generator_index[g]`` is the basis
    position of generator ``g``.
    """

    generators: tuple[tuple[str, Parity], ...]
    class_bound: int
    algebra: LieSuperalgebra
    degree: tuple[int, ...]
    words: tuple[Word, ...]
    generator_index: tuple[int, ...]
    _ad: tuple  # integer-scaled ad(g) per generator, scipy CSR int64
    _ad_scale: tuple[int, ...]

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(lab for lab, _ in self.generators)

    def word_label(self, i: int) -> str:
        return render(self.words[i], self.labels)

    def degree_dims(self) -> dict[int, tuple[int, int]]:
        out: dict[int, list[int]] = {}
        for d, p in zip(self.degree, self.algebra.parities):
            out.setdefault(d, [0, 0])[int(p)] += 1
        return {d: tuple(v) for d, v in sorted(out.items())}

    def derived_mask(self) -> np.ndarray:
        """Boolean mask of basis vectors of degree >= 2 (they span F')."""
        return np.array([d >= 2 for d in self.degree])

    def ad_generator(self, g: int):
        """``(A, s)`` with sparse integer ``A`` and ``v @ A / s = [g, v]``."""
        return self._ad[g], self._ad_scale[g]

    def evaluate(self, word: Word) -> np.ndarray:
        """Coordinates of a bracket word (or generator index) in the basis."""
        if isinstance(word, int):
            v = np.zeros(self.dim, dtype=object)
            v[:] = Fraction(0)
            v[self.generator_index[word]] = Fraction(1)
            return v
        a = self.evaluate(word[0])
        b = self.evaluate(word[1])
        return np.array(_bracket_vec(self.algebra, a, b), dtype=object)


def _bracket_vec(L: LieSuperalgebra, a, b):
    from .algebra import bracket

    return bracket(L, list(a), list(b))


@lru_cache(maxsize=64)
def _build(parities: tuple[int, ...], class_bound: int):
    ngen = len(parities)
    # per degree: list of (word, poly, parity)
    levels: list[list[tuple[Word, Poly, int]]] = []
    levels.append([(g, {(g,): 1}, parities[g]) for g in range(ngen)])
    for d in range(2, class_bound + 1):
        cands: list[tuple[Word, Poly, int]] = []
        for g in range(ngen):
            for w, poly, pw in levels[-1]:
                exp = supercommutator({(g,): 1}, parities[g], poly, pw)
                if exp:
                    cands.append(((g, w), exp, (parities[g] + pw) % 2))
        if not cands:
            levels.append([])
            continue
        cols: dict[tuple, int] = {}
        for _, poly, _ in cands:
            for k in poly:
                cols.setdefault(k, len(cols))
        mat = np.zeros((len(cols), len(cands)), dtype=np.int64)
        for c, (_, poly, _) in enumerate(cands):
            for k, v in poly.items():
                mat[cols[k], c] = v
        _, piv = gauss_jordan(mat)
        levels.append([cands[c] for c in piv])

    flat = [(d + 1, w, poly, p) for d, lev in enumerate(levels) for (w, poly, p) in lev]
    order = sorted(range(len(flat)), key=lambda i: (flat[i][3], i))
    flat = [flat[i] for i in order]
    n = len(flat)
    n_even = sum(1 for f in flat if f[3] == 0)
    degree = tuple(f[0] for f in flat)
    words = tuple(f[1] for f in flat)
    gen_index = tuple(next(i for i, f in enumerate(flat) if f[0] == 1 and f[1] == g) for g in range(ngen))

    # coordinate solvers per degree
    by_deg: dict[int, list[int]] = {}
    for i, d in enumerate(degree):
        by_deg.setdefault(d, []).append(i)
    solvers = {}
    for d, idx in by_deg.items():
        cols: dict[tuple, int] = {}
        for i in idx:
            for k in flat[i][2]:
                cols.setdefault(k, len(cols))
        basis = np.zeros((len(idx), len(cols)), dtype=np.int64)
        for r, i in enumerate(idx):
            for k, v in flat[i][2].items():
                basis[r, cols[k]] = v
        solvers[d] = (idx, cols, linalg.Coordinates(basis))

    brackets: dict[tuple[int, int], dict[int, Fraction]] = {}
    pending: dict[int, list[tuple[tuple[int, int], Poly]]] = {}
    for a in range(n):
        for b in range(a, n):
            d = degree[a] + degree[b]
            if d > class_bound:
                continue
            exp = supercommutator(flat[a][2], flat[a][3], flat[b][2], flat[b][3])
            if exp:
                pending.setdefault(d, []).append(((a, b), exp))
    for d, items in pending.items():
        idx, cols, solve = solvers[d]
        vec = np.zeros((len(items), len(cols)), dtype=np.int64)
        for r, (_, exp) in enumerate(items):
            for k, v in exp.items():
                if k not in cols:
                    raise ArithmeticError("bracket leaves the span of the chosen basis")
                vec[r, cols[k]] = v
        coords = solve(vec)
        for ((a, b), _), c in zip(items, coords):
            nz = {idx[t]: x for t, x in enumerate(c) if x}
            if nz:
                brackets[(a, b)] = nz
    return n_even, n - n_even, brackets, degree, words, gen_index


def free_nilpotent(generators: Sequence[tuple[str, int]], class_bound: int, limits: dict | None = None) -> TruncatedFreeAlgebra:
    """Free nilpotent Lie superalgebra of class ``class_bound`` on ``generators``.

    ``generators`` is a sequence of ``(label, parity)``.
    """
    lim = default_limits() | (limits or {})
    if not generators:
        raise ValueError("at least one generator is required")
    if len(generators) > lim["max_generators"]:
        raise OracleLimitError(f"{len(generators)} generators exceed the limit {lim['max_generators']}")
    if class_bound < 1 or class_bound > lim["max_class"]:
        raise OracleLimitError(f"class bound {class_bound} outside 1..{lim['max_class']}")
    parities = tuple(int(p) for _, p in generators)
    expected = pbw_dimensions(sum(1 for p in parities if p == 0), sum(parities), class_bound)
    size = sum(e + o for e, o in expected.values())
    if size > lim["max_free_dim"]:
        raise OracleLimitError(f"free algebra of dimension {size} exceeds the limit {lim['max_free_dim']}")
    ne, no, brackets, degree, words, gen_index = _build(parities, class_bound)
    labels = tuple(lab for lab, _ in generators)
    word_labels = tuple(render(w, labels) for w in words)
    alg = LieSuperalgebra(ne, no, brackets, "F", word_labels)
    out = TruncatedFreeAlgebra(
        tuple((lab, Parity(p)) for lab, p in generators),
        class_bound,
        alg,
        degree,
        words,
        gen_index,
        *_ad_matrices(alg, gen_index),
    )
    got = out.degree_dims()
    for d in range(1, class_bound + 1):
        if got.get(d, (0, 0)) != expected[d]:
            raise ArithmeticError(f"degree {d}: built {got.get(d)} but PBW count gives {expected[d]}")
    return out


def _ad_matrices(alg: LieSuperalgebra, gen_index: Sequence[int]):
    mats, scales = [], []
    table = alg._table
    for gi in gen_index:
        entries = [(j, k, c) for j in range(alg.dim) for k, c in table.get((gi, j), {}).items()]
        s = lcm_all(c.denominator for _, _, c in entries)
        rows = [j for j, _, _ in entries]
        cols = [k for _, k, _ in entries]
        vals = [int(c * s) for _, _, c in entries]
        mats.append(sparse.csr_matrix((np.array(vals, dtype=np.int64), (rows, cols)), shape=(alg.dim, alg.dim)))
        scales.append(int(s))
    return tuple(mats), tuple(scales)
