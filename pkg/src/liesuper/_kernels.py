"""Integer elimination kernels.

Every hot loop in the package is an exact row reduction of an integer
matrix.  Two implementations live here:

* ``_gauss_jordan_i64``: a numba ``@njit`` loop on ``int64`` data that bails
  out (status 1) as soon as an entry leaves the range where the next update
  could overflow;
* ``_gauss_jordan_obj``: the same algorithm vectorised with numpy over
  ``dtype=object`` arrays of Python ints, so it is exact for any size.

``gauss_jordan`` dispatches: numba first when enabled and the input fits,
the object path otherwise or after an overflow bail-out.  Setting the
environment variable ``LIESUPER_DISABLE_NUMBA=1`` forces the pure-numpy
path (read at import time; ``set_numba_enabled`` switches at runtime).

Rows are kept primitive (content 1) after every update, which is what keeps
coefficients small on the sparse, nearly unimodular matrices the free-algebra
oracle produces.
"""

from __future__ import annotations

import os
from math import gcd

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False

_INT64_SAFE = (1 << 31) - 1
_numba_enabled = HAVE_NUMBA and os.environ.get("LIESUPER_DISABLE_NUMBA", "") in ("", "0")


def numba_enabled() -> bool:
    return _numba_enabled


def set_numba_enabled(flag: bool) -> None:
    """Toggle the numba path (used by the benchmark and the kernel tests)."""
    global _numba_enabled
    _numba_enabled = bool(flag) and HAVE_NUMBA


if HAVE_NUMBA:

    @njit(cache=True)
    def _gcd64(a, b):
        a = abs(a)
        b = abs(b)
        while b:
            a, b = b, a % b
        return a

    @njit(cache=True)
    def _normalize_row64(a, i):
        m = a.shape[1]
        g = 0
        for j in range(m):
            if a[i, j] != 0:
                g = _gcd64(g, a[i, j])
                if g == 1:
                    break
        if g > 1:
            for j in range(m):
                a[i, j] //= g
        for j in range(m):
            if a[i, j] > _INT64_SAFE or -a[i, j] > _INT64_SAFE:
                return False
        return True

    @njit(cache=True)
    def _gauss_jordan_i64(a):
        # status 0 = done, 1 = coefficient growth would overflow int64
        n, m = a.shape
        pivots = np.empty(min(n, m), dtype=np.int64)
        for i in range(n):
            if not _normalize_row64(a, i):
                return 1, 0, pivots
        r = 0
        for c in range(m):
            if r == n:
                break
            best = -1
            bv = 0
            for i in range(r, n):
                v = abs(a[i, c])
                if v != 0 and (best < 0 or v < bv):
                    best = i
                    bv = v
            if best < 0:
                continue
            if best != r:
                for j in range(m):
                    t = a[r, j]
                    a[r, j] = a[best, j]
                    a[best, j] = t
            if a[r, c] < 0:
                for j in range(m):
                    a[r, j] = -a[r, j]
            p = a[r, c]
            for i in range(n):
                if i == r:
                    continue
                f = a[i, c]
                if f == 0:
                    continue
                g = _gcd64(p, f)
                pp = p // g
                ff = f // g
                for j in range(m):
                    a[i, j] = pp * a[i, j] - ff * a[r, j]
                if not _normalize_row64(a, i):
                    return 1, 0, pivots
            pivots[r] = c
            r += 1
        return 0, r, pivots


def _primitive_rows(a: np.ndarray, rows: np.ndarray) -> None:
    if rows.size == 0:
        return
    g = np.gcd.reduce(a[rows], axis=1)
    g[g == 0] = 1
    a[rows] = a[rows] // g[:, None]


def _gauss_jordan_obj(a: np.ndarray) -> tuple[np.ndarray, list[int]]:
    n, m = a.shape
    _primitive_rows(a, np.arange(n))
    pivots: list[int] = []
    r = 0
    for c in range(m):
        if r == n:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        best = r + int(nz[np.argmin(np.abs(a[r + nz, c]).astype(object))])
        if best != r:
            a[[r, best]] = a[[best, r]]
        if a[r, c] < 0:
            a[r] = -a[r]
        p = a[r, c]
        rows = np.flatnonzero(a[:, c])
        rows = rows[rows != r]
        if rows.size:
            f = a[rows, c]
            g = np.gcd(f, p)
            a[rows] = (p // g)[:, None] * a[rows] - (f // g)[:, None] * a[r][None, :]
            _primitive_rows(a, rows)
        pivots.append(c)
        r += 1
    return a, pivots


def _fits_int64(a: np.ndarray) -> bool:
    if a.size == 0:
        return True
    if a.dtype != object:
        return True
    return max(abs(int(a.max())), abs(int(a.min()))) <= _INT64_SAFE


def gauss_jordan(a: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Fraction-free reduced row echelon form of an integer matrix.

    Returns ``(E, pivots)`` where the first ``len(pivots)`` rows of ``E`` are
    primitive, have a positive entry in their pivot column and zeros in every
    other pivot column; the remaining rows are zero.  ``E`` is a fresh array
    (``int64`` or ``object``); the input is not modified.
    """
    a = np.asarray(a)
    if a.ndim != 2:
        raise ValueError("gauss_jordan expects a 2-d array")
    if _numba_enabled and a.size and _fits_int64(a):
        work = np.array(a, dtype=np.int64)
        status, rank, piv = _gauss_jordan_i64(work)
        if status == 0:
            return work, [int(c) for c in piv[:rank]]
    return _gauss_jordan_obj(np.array(a, dtype=object))


def int_matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Exact integer matrix product; int64 when a bound proves it safe."""
    a = np.asarray(a)
    b = np.asarray(b)
    if a.size == 0 or b.size == 0:
        return np.zeros((a.shape[0], b.shape[1]), dtype=object)
    ma = max(abs(int(a.max())), abs(int(a.min())))
    mb = max(abs(int(b.max())), abs(int(b.min())))
    if ma * mb * a.shape[1] < (1 << 62):
        return (a.astype(np.int64) @ b.astype(np.int64)).astype(object)
    return a.astype(object) @ b.astype(object)


def sparse_int_matmul(a: np.ndarray, s) -> np.ndarray:
    """Exact ``a @ s`` for a dense integer ``a`` and a scipy sparse ``int64`` ``s``.

    Runs in ``int64`` when ``max|a| * max|s| * (max nonzeros per column of s)``
    stays below ``2**62``, else falls back to a dense object product.
    """
    a = np.asarray(a)
    if a.shape[0] == 0 or s.shape[1] == 0:
        return np.zeros((a.shape[0], s.shape[1]), dtype=object)
    if s.nnz == 0:
        return np.zeros((a.shape[0], s.shape[1]), dtype=object)
    ma = max(abs(int(a.max())), abs(int(a.min())))
    ms = int(abs(s.data).max())
    per_col = int(np.diff(s.tocsc().indptr).max())
    if ma * ms * per_col < (1 << 62):
        return np.asarray(a.astype(np.int64) @ s).astype(object)
    return a.astype(object) @ s.toarray().astype(object)


def lcm_all(values) -> int:
    out = 1
    for v in values:
        out = out * v // gcd(out, v)
    return out
