"""Brute-force ground truth from free presentations.

For ``0 -> R -> F -> L -> 0`` with ``F`` free:

    M(L)     = (F' ∩ R) / [F, R]
    L ∧ L    = F' / [F, R]
    Z*(L)    = image in L of the centre of F / [F, R]

``F`` is replaced by the free nilpotent algebra of class ``c``.  This is
harmless as long as ``gamma_c(F) ⊆ R`` (the presented algebra has class at
most ``c - 1``): then ``gamma_{c+1}(F) = [F, gamma_c(F)] ⊆ [F, R]`` and every
quotient above is unchanged.  The condition is checked on every call and a
``ClassBoundError`` is raised when it fails; ``stable=True`` additionally
recomputes one class higher and compares.

All subspaces of ``F`` are handled as primitive integer echelon rows.  The
free basis is homogeneous in degree and parity, so ``F'`` is "degree >= 2"
and echelon rows of graded subspaces are homogeneous.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Sequence

import numpy as np

from . import linalg
from ._kernels import gauss_jordan, int_matmul, lcm_all, sparse_int_matmul
from .algebra import (
    GradedSubspace,
    LieSuperalgebra,
    Parity,
    SuperDim,
    bracket,
    derived_subalgebra,
    nilpotency_class,
    quotient_data,
)
from .errors import ClassBoundError, FormatError, NotNilpotentError
from .free import TruncatedFreeAlgebra, Word, default_limits, free_nilpotent, render

ZERO = SuperDim(0, 0)
Relator = tuple  # ((word, Fraction), ...) sorted, nonzero coefficients

_LABEL = re.compile(r"[A-Za-z_][A-Za-z0-9_']*")


# --------------------------------------------------------------------------
# presentations


def _word_parity(word: Word, parities: Sequence[int]) -> int:
    if isinstance(word, int):
        return int(parities[word])
    return (_word_parity(word[0], parities) + _word_parity(word[1], parities)) % 2


def _normalize_relator(terms: Mapping[Word, Fraction] | Sequence) -> Relator:
    items = terms.items() if isinstance(terms, Mapping) else terms
    acc: dict = {}
    for w, c in items:
        acc[w] = acc.get(w, Fraction(0)) + Fraction(c)
    return tuple(sorted(((w, c) for w, c in acc.items() if c), key=lambda t: repr(t[0])))


@dataclass(frozen=True)
class FreePresentation:
    """Graded generators, relators and the truncation class.

    A relator is a linear combination of bracket words, given as a mapping
    ``word -> coefficient`` where a word is a generator index or a pair
    ``(left, right)``.  ``target``/``images`` optionally record the algebra
    the presentation was read off and where each generator goes; the
    epicenter is then reported inside ``target``.
    """

    generators: tuple[tuple[str, Parity], ...]
    relators: tuple[Relator, ...]
    class_bound: int
    target: LieSuperalgebra | None = field(default=None, compare=False)
    images: tuple[tuple[Fraction, ...], ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        gens = tuple((str(lab), Parity(p)) for lab, p in self.generators)
        object.__setattr__(self, "generators", gens)
        if self.class_bound < 2:
            raise ValueError("class_bound must be at least 2")
        labels = [lab for lab, _ in gens]
        if len(set(labels)) != len(labels):
            raise ValueError("generator labels must be distinct")
        rels = tuple(_normalize_relator(r) for r in self.relators)
        par = [int(p) for _, p in gens]
        for r in rels:
            for w, _ in r:
                _check_word(w, len(gens))
            if len({_word_parity(w, par) for w, _ in r}) > 1:
                raise ValueError(f"relator {self.render_relator(r)} is not homogeneous")
        object.__setattr__(self, "relators", tuple(r for r in rels if r))

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(lab for lab, _ in self.generators)

    @property
    def parities(self) -> tuple[int, ...]:
        return tuple(int(p) for _, p in self.generators)

    def with_class_bound(self, c: int) -> "FreePresentation":
        return replace(self, class_bound=c)

    def render_relator(self, r: Relator) -> str:
        labels = [lab for lab, _ in self.generators]
        return format_combination(((render(w, labels), c) for w, c in r))


def _check_word(w: Word, n: int) -> None:
    if isinstance(w, int):
        if not 0 <= w < n:
            raise ValueError(f"generator index {w} out of range")
        return
    if not (isinstance(w, tuple) and len(w) == 2):
        raise ValueError(f"bad bracket word {w!r}")
    _check_word(w[0], n)
    _check_word(w[1], n)


def format_combination(terms) -> str:
    out = []
    for lab, c in terms:
        c = Fraction(c)
        mag = abs(c)
        body = lab if mag == 1 else f"{mag}*{lab}"
        if not out:
            out.append(body if c > 0 else "-" + body)
        else:
            out.append(("+ " if c > 0 else "- ") + body)
    return " ".join(out) if out else "0"


# --------------------------------------------------------------------------
# relator text syntax:  expr := term (('+'|'-') term)*
#                       term := [rational '*'] atom | rational
#                       atom := label | '[' expr ',' expr ']' | '(' expr ')'

_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|([A-Za-z_][A-Za-z0-9_']*)|(.))")


def parse_relator(text: str, labels: Sequence[str]) -> dict:
    """Parse a relator such as ``"[x,[x,y]] - 2*z"`` into ``{word: coeff}``.

    Brackets are expanded bilinearly, so ``[x+y, z]`` is accepted.  Errors
    raise ``FormatError`` with the 1-based column.
    """
    index = {lab: i for i, lab in enumerate(labels)}
    toks: list[tuple[str, str, int]] = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            break
        col = m.start(m.lastindex) + 1 if m.lastindex else m.end()
        if m.group(1):
            toks.append(("num", m.group(1), col))
        elif m.group(2):
            toks.append(("id", m.group(2), col))
        elif m.group(3):
            toks.append(("op", m.group(3), col))
        pos = m.end()
    toks.append(("end", "", len(text) + 1))
    k = 0

    def peek():
        return toks[k]

    def take(kind=None, value=None):
        nonlocal k
        t = toks[k]
        if (kind and t[0] != kind) or (value is not None and t[1] != value):
            want = value or kind
            got = t[1] or "end of input"
            raise FormatError(f"expected {want!r}, found {got!r} in relator {text!r}", column=t[2])
        k += 1
        return t

    def expr() -> dict:
        sign = 1
        if peek()[:2] in (("op", "-"), ("op", "+")):
            sign = -1 if take()[1] == "-" else 1
        acc = _scale(term(), sign)
        while peek()[:2] in (("op", "+"), ("op", "-")):
            s = -1 if take()[1] == "-" else 1
            acc = _add(acc, _scale(term(), s))
        return acc

    def term() -> dict:
        t = peek()
        if t[0] == "num":
            take()
            c = Fraction(t[1])
            if peek()[:2] == ("op", "*"):
                take()
                return _scale(atom(), c)
            raise FormatError(f"bare constant in relator {text!r}", column=t[2])
        return atom()

    def atom() -> dict:
        t = peek()
        if t[0] == "id":
            take()
            if t[1] not in index:
                raise FormatError(f"unknown generator {t[1]!r}", column=t[2])
            return {index[t[1]]: Fraction(1)}
        if t[:2] == ("op", "["):
            take()
            a = expr()
            take("op", ",")
            b = expr()
            take("op", "]")
            return {(u, v): x * y for u, x in a.items() for v, y in b.items()}
        if t[:2] == ("op", "("):
            take()
            a = expr()
            take("op", ")")
            return a
        got = t[1] or "end of input"
        raise FormatError(f"unexpected {got!r} in relator {text!r}", column=t[2])

    out = expr()
    if peek()[0] != "end":
        t = peek()
        raise FormatError(f"trailing {t[1]!r} in relator {text!r}", column=t[2])
    return {w: c for w, c in out.items() if c}


def _scale(a: dict, c) -> dict:
    return {w: c * x for w, x in a.items()}


def _add(a: dict, b: dict) -> dict:
    out = dict(a)
    for w, x in b.items():
        out[w] = out.get(w, Fraction(0)) + x
    return out


def presentation(generators: Sequence[tuple[str, int]], relators: Sequence[str], class_bound: int) -> FreePresentation:
    """Build a presentation from relator strings."""
    labels = [lab for lab, _ in generators]
    for lab in labels:
        if not _LABEL.fullmatch(lab):
            raise FormatError(f"generator label {lab!r} is not an identifier")
    rels = tuple(_normalize_relator(parse_relator(r, labels)) for r in relators)
    return FreePresentation(tuple(generators), rels, class_bound)


def _safe_labels(L: LieSuperalgebra, idx: Sequence[int]) -> list[str]:
    labels = [L.basis_labels()[i] for i in idx]
    if all(_LABEL.fullmatch(x) for x in labels) and len(set(labels)) == len(labels):
        return labels
    return [f"e{i + 1}" for i in idx]


def presentation_of(L: LieSuperalgebra, class_bound: int | None = None, minimal: bool = False) -> FreePresentation:
    """A free presentation of a nilpotent ``L``.

    Default: one generator per basis vector and one relator
    ``[e_i, e_j] - sum c e_k`` per pair ``i <= j`` (the even diagonal is
    automatic).  ``minimal=True`` uses generators lifting a basis of
    ``L/L'`` and takes the relators to be a basis of the kernel of the
    induced map from the free nilpotent algebra, which is much smaller.
    """
    c = nilpotency_class(L)
    if c is None:
        raise NotNilpotentError(f"{L.name or 'algebra'} is not nilpotent")
    cb = class_bound if class_bound is not None else max(c + 1, 2)
    if cb < max(c + 1, 2):
        raise ClassBoundError(f"class_bound {cb} is below class + 1 = {c + 1}")
    par = L.parities
    if not minimal:
        idx = list(range(L.dim))
        labels = _safe_labels(L, idx)
        gens = tuple((labels[i], par[i]) for i in idx)
        rels = []
        for i in range(L.dim):
            for j in range(i, L.dim):
                if i == j and par[i] == Parity.EVEN:
                    continue
                r = {(i, j): Fraction(1)}
                for k, v in L.basis_bracket(i, j).items():
                    r[k] = r.get(k, Fraction(0)) - v
                rels.append(r)
        images = tuple(L.unit(i) for i in idx)
        return FreePresentation(gens, tuple(rels), cb, L, images)

    D = derived_subalgebra(L)
    idx = [k for k in range(L.dim) if k not in set(D.pivots)]
    labels = _safe_labels(L, idx)
    gens = tuple((labels[a], par[i]) for a, i in enumerate(idx))
    images = tuple(L.unit(i) for i in idx)
    if not gens:
        return FreePresentation((), (), cb, L, ())
    lim = default_limits()
    lim["max_class"] = max(lim["max_class"], cb)
    F = free_nilpotent(gens, cb, lim)
    pi = _projection(F, L, images)
    ker = linalg.left_nullspace(linalg.integer_rows(pi)) if F.dim else np.zeros((0, 0), dtype=object)
    rels = []
    for row in ker:
        rels.append({F.words[k]: Fraction(int(x)) for k, x in enumerate(row) if x})
    return FreePresentation(gens, tuple(rels), cb, L, images)


def _projection(F: TruncatedFreeAlgebra, L: LieSuperalgebra, images: Sequence[Sequence]) -> np.ndarray:
    """Row ``k`` = image in ``L`` of free basis vector ``k``."""
    memo: dict = {}

    def img(w):
        if w in memo:
            return memo[w]
        if isinstance(w, int):
            v = tuple(Fraction(x) for x in images[w])
        else:
            v = bracket(L, img(w[0]), img(w[1]))
        memo[w] = v
        return v

    out = np.zeros((F.dim, L.dim), dtype=object)
    out[:, :] = Fraction(0)
    for k, w in enumerate(F.words):
        out[k] = list(img(w))
    return out


# --------------------------------------------------------------------------
# integer subspace helpers


def _ech(rows: np.ndarray, n: int) -> np.ndarray:
    if rows.shape[0] == 0:
        return np.zeros((0, n), dtype=object)
    e, piv = gauss_jordan(rows)
    return np.asarray(e[: len(piv)], dtype=object)


def _pivots(e: np.ndarray) -> list[int]:
    return [int(np.flatnonzero(r)[0]) for r in e]


def _sdim(e: np.ndarray, parities: Sequence[Parity]) -> SuperDim:
    ev = sum(1 for p in _pivots(e) if parities[p] == Parity.EVEN)
    return SuperDim(ev, e.shape[0] - ev)


def _rank(rows: np.ndarray) -> int:
    if rows.shape[0] == 0:
        return 0
    return len(gauss_jordan(rows)[1])


def _ad_images(F: TruncatedFreeAlgebra, rows: np.ndarray) -> np.ndarray:
    """Rows ``[g, r]`` (up to positive scalars) for every generator ``g``."""
    if rows.shape[0] == 0:
        return np.zeros((0, F.dim), dtype=object)
    parts = [sparse_int_matmul(rows, F.ad_generator(g)[0]) for g in range(len(F.generators))]
    return np.vstack(parts)


def _closure(F: TruncatedFreeAlgebra, seeds: np.ndarray) -> np.ndarray:
    n = F.dim
    cur = _ech(seeds, n)
    frontier = cur
    while frontier.shape[0]:
        new = _ad_images(F, frontier)
        nxt = _ech(np.vstack([cur, new]), n)
        if nxt.shape[0] == cur.shape[0]:
            break
        # only the bracket images of the enlarged part can be new, but the
        # echelon rows are recombined, so feed the whole basis again
        frontier = nxt
        cur = nxt
    return cur


def ideal_closure(F: TruncatedFreeAlgebra, seeds) -> GradedSubspace:
    """Smallest ideal of ``F`` containing ``seeds`` (coordinate rows)."""
    seeds = linalg.as_matrix(seeds, F.dim)
    rows = _closure(F, linalg.integer_rows(seeds) if seeds.shape[0] else seeds)
    return GradedSubspace.span(F.algebra.parities, [list(r) for r in rows])


# --------------------------------------------------------------------------
# the computation


@dataclass(frozen=True, eq=False)
class _Hopf:
    free: TruncatedFreeAlgebra | None
    R: np.ndarray
    FR: np.ndarray  # [F, R]
    derived_R: np.ndarray  # F' ∩ R
    center_pre: np.ndarray  # preimage of Z(F/[F,R])
    derived_dim: SuperDim  # superdim of F'
    parities: tuple


def _relator_rows(P: FreePresentation, F: TruncatedFreeAlgebra) -> np.ndarray:
    rows = []
    for r in P.relators:
        v = np.zeros(F.dim, dtype=object)
        v[:] = Fraction(0)
        for w, c in r:
            v = v + c * F.evaluate(w)
        if any(v):
            rows.append(list(v))
    if not rows:
        return np.zeros((0, F.dim), dtype=object)
    return linalg.integer_rows(linalg.as_matrix(rows, F.dim))


@lru_cache(maxsize=256)
def _hopf(P: FreePresentation, limits_key: tuple) -> _Hopf:
    limits = dict(limits_key)
    if not P.generators:
        z = np.zeros((0, 0), dtype=object)
        return _Hopf(None, z, z, z, z, ZERO, ())
    F = free_nilpotent(P.generators, P.class_bound, limits)
    n = F.dim
    par = F.algebra.parities
    R = _closure(F, _relator_rows(P, F))

    top = [k for k, d in enumerate(F.degree) if d == P.class_bound]
    if top:
        units = np.zeros((len(top), n), dtype=object)
        for a, k in enumerate(top):
            units[a, k] = 1
        if _rank(np.vstack([R, units])) != R.shape[0]:
            raise ClassBoundError(
                f"class_bound {P.class_bound} is too small: the presented algebra has class >= {P.class_bound}"
            )

    FR = _ech(_ad_images(F, R), n)

    deg1 = [k for k, d in enumerate(F.degree) if d == 1]
    if R.shape[0]:
        y = linalg.left_nullspace(R[:, deg1]) if deg1 else np.eye(R.shape[0], dtype=object)
        DR = _ech(int_matmul(y, R), n) if y.shape[0] else np.zeros((0, n), dtype=object)
    else:
        DR = R

    # f is central mod [F,R] iff [g, f] in [F,R] for every generator g
    piv = _pivots(FR)
    free_cols = [c for c in range(n) if c not in set(piv)]
    q = _quotient_matrix(FR, piv, free_cols, n)
    blocks = [sparse_int_matmul(q.T, F.ad_generator(g)[0].T.tocsr()).T for g in range(len(F.generators))]
    big = np.hstack(blocks) if free_cols else np.zeros((n, 0), dtype=object)
    if big.shape[1] == 0:
        Z = _ech(np.eye(n, dtype=object), n)
    else:
        Z = _ech(linalg.int_nullspace(big.T), n)

    nd = sum(1 for k, d in enumerate(F.degree) if d >= 2 and par[k] == Parity.EVEN)
    nder = sum(1 for d in F.degree if d >= 2)
    return _Hopf(F, R, FR, DR, Z, SuperDim(nd, nder - nd), par)


def _quotient_matrix(E: np.ndarray, piv: list[int], free_cols: list[int], n: int) -> np.ndarray:
    """Integer ``Q`` with ``v @ Q`` = (a positive multiple of) ``v`` mod rowspace(E)."""
    q = np.zeros((n, len(free_cols)), dtype=object)
    if not free_cols:
        return q
    diag = [int(E[i, c]) for i, c in enumerate(piv)]
    lcm = 1
    for d in diag:
        lcm = lcm * d // np.gcd(lcm, d)
    pos = {c: a for a, c in enumerate(free_cols)}
    for c in free_cols:
        q[c, pos[c]] = lcm
    for i, c in enumerate(piv):
        f = lcm // diag[i]
        q[c] = [-f * int(E[i, k]) for k in free_cols]
    return q


def _run(P: FreePresentation, limits: dict | None, stable: bool) -> _Hopf:
    lim = default_limits() | (limits or {})
    h = _hopf(P, tuple(sorted(lim.items())))
    if stable and P.generators and P.class_bound + 1 <= lim["max_class"]:
        h2 = _hopf(P.with_class_bound(P.class_bound + 1), tuple(sorted(lim.items())))
        a = (_mult_dim(h), _ext_dim(h), _epi_dim(h))
        b = (_mult_dim(h2), _ext_dim(h2), _epi_dim(h2))
        if a != b:
            raise ClassBoundError(f"results change from class {P.class_bound} to {P.class_bound + 1}: {a} vs {b}")
    return h


def _mult_dim(h: _Hopf) -> SuperDim:
    if h.free is None:
        return ZERO
    return _sdim(h.derived_R, h.parities) - _sdim(h.FR, h.parities)


def _ext_dim(h: _Hopf) -> SuperDim:
    if h.free is None:
        return ZERO
    return h.derived_dim - _sdim(h.FR, h.parities)


def _epi_dim(h: _Hopf) -> SuperDim:
    if h.free is None:
        return ZERO
    return _sdim(h.center_pre, h.parities) - _sdim(h.R, h.parities)


@dataclass(frozen=True)
class MultiplierResult:
    superdim: SuperDim
    representatives: tuple[str, ...]  # one bracket expression per basis element of M(L)
    class_bound: int


def hopf_multiplier(P: FreePresentation, limits: dict | None = None, stable: bool = False) -> MultiplierResult:
    """``M(L) = (F' ∩ R)/[F, R]`` with representatives for a basis.

    Representatives are single free basis words whenever possible, taken in
    order of increasing length.
    """
    h = _run(P, limits, stable)
    sd = _mult_dim(h)
    if sd.total == 0:
        return MultiplierResult(sd, (), P.class_bound)
    F = h.free
    n = F.dim
    chosen: list = []
    span = h.FR

    def single_entry(E: np.ndarray) -> set[int]:
        out = set()
        for r in E:
            nz = np.flatnonzero(r)
            if len(nz) == 1:
                out.add(int(nz[0]))
        return out

    in_dr = single_entry(h.derived_R)
    for k in sorted(in_dr, key=lambda k: (F.degree[k], k)):
        if len(chosen) == sd.total:
            break
        if k in single_entry(span):
            continue
        u = np.zeros((1, n), dtype=object)
        u[0, k] = 1
        span = _ech(np.vstack([span, u]), n)
        chosen.append(F.word_label(k))
    if len(chosen) < sd.total:
        for r in h.derived_R:
            if len(chosen) == sd.total:
                break
            bigger = _ech(np.vstack([span, r[None, :]]), n)
            if bigger.shape[0] > span.shape[0]:
                span = bigger
                chosen.append(format_combination((F.word_label(k), int(r[k])) for k in np.flatnonzero(r)))
    return MultiplierResult(sd, tuple(chosen), P.class_bound)


def exterior_square_oracle(P: FreePresentation, limits: dict | None = None, stable: bool = False) -> SuperDim:
    """Superdimension of ``F'/[F, R]``."""
    return _ext_dim(_run(P, limits, stable))


@dataclass(frozen=True)
class EpicenterResult:
    superdim: SuperDim
    ideal: GradedSubspace  # inside ``algebra``
    algebra: LieSuperalgebra


def presented_algebra(P: FreePresentation, limits: dict | None = None) -> LieSuperalgebra:
    """``F/R`` on a complement of ``R`` in the free basis."""
    h = _run(P, limits, False)
    if h.free is None:
        return LieSuperalgebra(0, 0, {}, "F/R")
    return _presented(h).algebra


def _presented(h: _Hopf):
    Rs = GradedSubspace.span(h.parities, [list(r) for r in h.R])
    return quotient_data(h.free.algebra, Rs, name="F/R", check=False)


def epicenter_oracle(P: FreePresentation, limits: dict | None = None, stable: bool = False) -> EpicenterResult:
    """``Z*(L)``: the centre of ``F/[F, R]`` pushed down to ``L = F/R``.

    The ideal is expressed in ``P.target`` when the presentation carries
    one, otherwise in ``presented_algebra(P)``.
    """
    h = _run(P, limits, stable)
    sd = _epi_dim(h)
    if h.free is None:
        L = P.target if P.target is not None else LieSuperalgebra(0, 0, {}, "F/R")
        return EpicenterResult(ZERO, GradedSubspace.zero(L.parities), L)
    if P.target is not None and P.images is not None:
        L = P.target
        pi = _projection(h.free, L, P.images)
    else:
        qd = _presented(h)
        L, pi = qd.algebra, qd.projection
    # one common scale keeps the spans intact
    scale = lcm_all(x.denominator for x in pi.flat if x.denominator != 1)
    pi_int = np.array([[int(x * scale) for x in row] for row in pi], dtype=object).reshape(pi.shape)
    imgs = int_matmul(h.center_pre, pi_int) if h.center_pre.shape[0] else np.zeros((0, L.dim), dtype=object)
    rows = [[Fraction(int(x)) for x in r] for r in imgs if any(x != 0 for x in r)]
    ideal = GradedSubspace.span(L.parities, rows) if rows else GradedSubspace.zero(L.parities)
    if ideal.superdim != sd:
        raise ArithmeticError(f"epicenter image {ideal.superdim} disagrees with the count {sd}")
    return EpicenterResult(sd, ideal, L)


@dataclass(frozen=True)
class OracleReport:
    multiplier: SuperDim
    exterior_square: SuperDim
    epicenter: SuperDim
    derived: SuperDim  # (F' + R)/R = L'
    class_bound: int
    free_dim: int


def oracle_report(P: FreePresentation, limits: dict | None = None, stable: bool = False) -> OracleReport:
    h = _run(P, limits, stable)
    if h.free is None:
        return OracleReport(ZERO, ZERO, ZERO, ZERO, P.class_bound, 0)
    # L' = F'/(F' ∩ R)
    der = h.derived_dim - _sdim(h.derived_R, h.parities)
    return OracleReport(_mult_dim(h), _ext_dim(h), _epi_dim(h), der, P.class_bound, h.free.dim)


def central_extension_check(P: FreePresentation, limits: dict | None = None) -> bool:
    """``R/[F,R]`` is central in ``F/[F,R]`` and ``(F/[F,R])/(R/[F,R])`` has the size of ``F/R``."""
    h = _run(P, limits, False)
    if h.free is None:
        return True
    n = h.free.dim
    central = _rank(np.vstack([h.center_pre, h.R])) == h.center_pre.shape[0] if h.R.shape[0] else True
    size = (n - h.FR.shape[0]) - (h.R.shape[0] - h.FR.shape[0]) == n - h.R.shape[0]
    return bool(central and size)
