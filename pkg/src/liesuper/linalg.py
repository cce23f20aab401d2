"""Exact linear algebra over the rationals.

Matrices are numpy ``object`` arrays holding ``int`` or ``fractions.Fraction``
entries.  Reductions are delegated to the integer kernels after scaling each
row to integers, so nothing here ever touches floating point.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

import numpy as np

from ._kernels import gauss_jordan, int_matmul, lcm_all

_ZERO = Fraction(0)


def as_matrix(rows, ncols: int | None = None) -> np.ndarray:
    """Coerce ``rows`` to a 2-d array (an empty list needs ``ncols``).

    Integer ndarrays are passed through; everything else becomes ``object``.
    """
    if isinstance(rows, np.ndarray) and rows.dtype.kind in "iu" and rows.ndim == 2:
        return rows
    a = np.array(rows, dtype=object)
    if a.size == 0:
        if ncols is None:
            ncols = a.shape[1] if a.ndim == 2 else 0
        return np.zeros((0, ncols), dtype=object)
    if a.ndim == 1:
        a = a.reshape(1, -1)
    return a


def integer_rows(a: np.ndarray) -> np.ndarray:
    """Scale every row by the lcm of its denominators; same row space."""
    a = as_matrix(a)
    if a.dtype != object:
        return a.astype(object)
    if not any(type(x) is Fraction and x.denominator != 1 for x in a.flat):
        return np.array([[int(x) for x in row] for row in a], dtype=object).reshape(a.shape)
    out = np.empty(a.shape, dtype=object)
    for i, row in enumerate(a):
        dens = [x.denominator for x in row if type(x) is Fraction and x.denominator != 1]
        if dens:
            lcm = lcm_all(dens)
            out[i] = [int(x * lcm) for x in row]
        else:
            out[i] = [int(x) for x in row]
    return out


def echelon(a) -> tuple[np.ndarray, list[int]]:
    """Primitive integer RREF rows (zero rows dropped) and pivot columns."""
    a = as_matrix(a)
    if a.shape[0] == 0:
        return np.zeros((0, a.shape[1]), dtype=object), []
    e, piv = gauss_jordan(integer_rows(a))
    return e[: len(piv)].astype(object), piv


def rref(a) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form with Fraction entries (pivots equal 1)."""
    e, piv = echelon(a)
    out = np.empty(e.shape, dtype=object)
    for i, c in enumerate(piv):
        p = int(e[i, c])
        out[i] = [Fraction(int(x), p) for x in e[i]]
    return out, piv


def rank(a) -> int:
    return len(echelon(a)[1])


def nullspace(a, ncols: int | None = None) -> np.ndarray:
    """Integer basis (rows) of ``{x : a @ x = 0}``."""
    return int_nullspace(integer_rows(as_matrix(a, ncols)))


def int_nullspace(a: np.ndarray) -> np.ndarray:
    """``nullspace`` for a matrix already known to hold integers (any int dtype)."""
    a = np.asarray(a)
    m = a.shape[1]
    if a.shape[0] == 0:
        return np.eye(m, dtype=np.int64).astype(object)
    e, piv = gauss_jordan(a)
    e = e[: len(piv)].astype(object)
    free = [c for c in range(m) if c not in set(piv)]
    if not free:
        return np.zeros((0, m), dtype=object)
    lcm = lcm_all(int(e[i, c]) for i, c in enumerate(piv)) if piv else 1
    out = np.zeros((len(free), m), dtype=object)
    for k, f in enumerate(free):
        out[k, f] = lcm
        for i, c in enumerate(piv):
            out[k, c] = -int(e[i, f]) * (lcm // int(e[i, c]))
    return _primitive(out)


def _primitive(a: np.ndarray) -> np.ndarray:
    if a.shape[0] == 0:
        return a
    g = np.gcd.reduce(a, axis=1)
    g[g == 0] = 1
    return a // g[:, None]


def left_nullspace(a, nrows: int | None = None) -> np.ndarray:
    """Integer basis of ``{y : y @ a = 0}``."""
    a = as_matrix(a)
    if a.shape[0] == 0:
        return np.zeros((0, 0), dtype=object)
    return nullspace(a.T)


def stack(*blocks: np.ndarray, ncols: int) -> np.ndarray:
    parts = [as_matrix(b, ncols) for b in blocks if as_matrix(b, ncols).shape[0]]
    if not parts:
        return np.zeros((0, ncols), dtype=object)
    return np.vstack(parts)


def span_sum(u, v, ncols: int) -> np.ndarray:
    return echelon(stack(u, v, ncols=ncols))[0]


def span_intersection(u, v, ncols: int) -> np.ndarray:
    """Echelon basis of rowspace(u) ∩ rowspace(v)."""
    u = echelon(as_matrix(u, ncols))[0]
    v = echelon(as_matrix(v, ncols))[0]
    if u.shape[0] == 0 or v.shape[0] == 0:
        return np.zeros((0, ncols), dtype=object)
    k = left_nullspace(np.vstack([u, -v]))
    if k.shape[0] == 0:
        return np.zeros((0, ncols), dtype=object)
    return echelon(int_matmul(k[:, : u.shape[0]], u))[0]


def contains(basis, vectors, ncols: int) -> bool:
    """True iff every row of ``vectors`` lies in the row space of ``basis``."""
    base = rank(as_matrix(basis, ncols)) if as_matrix(basis, ncols).shape[0] else 0
    return rank(stack(basis, vectors, ncols=ncols)) == base


class Coordinates:
    """Solve ``c @ basis = v`` for vectors known to lie in the row space.

    ``basis`` must have independent rows.  The reduction of ``[basis | I]``
    is computed once; each query is then one integer matrix product.
    """

    def __init__(self, basis: np.ndarray):
        basis = integer_rows(as_matrix(basis))
        k, m = basis.shape
        self.k, self.m = k, m
        if k == 0:
            self._piv: list[int] = []
            return
        aug = np.hstack([basis, np.eye(k, dtype=np.int64).astype(object)])
        e, piv = gauss_jordan(aug)
        if len(piv) != k or piv[-1] >= m:
            raise ValueError("basis rows are linearly dependent")
        self._piv = piv
        diag = [int(e[i, c]) for i, c in enumerate(piv)]
        self._lcm = lcm_all(diag)
        # rows of t satisfy e[:, :m] = t @ basis, pre-scaled so one division finishes
        scale = np.array([self._lcm // d for d in diag], dtype=object)
        self._t = (e[:k, m:] * scale[:, None]).astype(object)

    def __call__(self, vectors, check: bool = False, basis: np.ndarray | None = None) -> np.ndarray:
        v = vectors if isinstance(vectors, np.ndarray) and vectors.ndim == 2 else as_matrix(vectors, self.m)
        if self.k == 0:
            return np.zeros((v.shape[0], 0), dtype=object)
        vi = integer_rows(v)
        rowscale = [1] * v.shape[0] if v.dtype != object else [_row_denominator_lcm(row) for row in v]
        num = int_matmul(vi[:, self._piv], self._t)
        out = np.full(num.shape, _ZERO, dtype=object)
        for i, j in zip(*np.nonzero(num)):
            out[i, j] = Fraction(int(num[i, j]), self._lcm * rowscale[i])
        if check and basis is not None:
            back = out.dot(as_matrix(basis))
            if not np.array_equal(back, v):
                raise ArithmeticError("vector outside the spanned subspace")
        return out


def _row_denominator_lcm(row: Sequence) -> int:
    dens = [x.denominator for x in row if type(x) is Fraction and x.denominator != 1]
    return lcm_all(dens) if dens else 1


def to_fractions(a) -> np.ndarray:
    a = as_matrix(a)
    out = np.empty(a.shape, dtype=object)
    for idx, x in np.ndenumerate(a):
        out[idx] = Fraction(x)
    return out
