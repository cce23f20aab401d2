"""Closed-form superdimension formulas.

Everything here is integer arithmetic on parameters and ``SuperDim`` values;
nothing inspects structure constants.  ``capability`` holds the adapters that
derive the parameters from an actual algebra.

Source tags (``MultiplierDim.source`` and the CLI reports) name the rule that
produced a number, e.g. ``"multiplier:heisenberg-even"``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import SuperDim


@dataclass(frozen=True)
class MultiplierDim:
    value: SuperDim
    source: str

    @property
    def total(self) -> int:
        return self.value.total


def multiplier_bound(m: int, n: int) -> int:
    """Upper bound ``((m+n)^2 + (n-m)) / 2`` on ``dim M(L)`` for ``dim L = (m|n)``."""
    if m < 0 or n < 0:
        raise ValueError("dimensions must be nonnegative")
    twice = (m + n) ** 2 + (n - m)
    # (m+n)^2 and n-m have the parity of m+n, so the sum is even
    return twice // 2


def multiplier_abelian(m: int, n: int) -> SuperDim:
    if m < 0 or n < 0:
        raise ValueError("dimensions must be nonnegative")
    return SuperDim((m * m + n * n + n - m) // 2, m * n)


def multiplier_heisenberg_even(m: int, n: int) -> SuperDim:
    if m < 0 or n < 0 or m + n < 1:
        raise ValueError("H(m,n) needs m+n >= 1")
    if m + n >= 2:
        # n(n+1) is always even
        return SuperDim(2 * m * m - m + n * (n + 1) // 2 - 1, 2 * m * n)
    if m == 0:
        return SuperDim(0, 0)
    return SuperDim(2, 0)


def multiplier_heisenberg_odd(m: int) -> SuperDim:
    if m < 1:
        raise ValueError("H_m needs m >= 1")
    if m == 1:
        return SuperDim(1, 1)
    return SuperDim(m * m, m * m - 1)


def graded_tensor_dim(a: SuperDim, b: SuperDim) -> SuperDim:
    """Superdimension of ``A ⊗ B``: parities add."""
    return SuperDim(a.even * b.even + a.odd * b.odd, a.even * b.odd + a.odd * b.even)


def multiplier_direct_sum(mH: SuperDim, mK: SuperDim, abH: SuperDim, abK: SuperDim) -> SuperDim:
    """``M(H ⊕ K)`` from the multipliers and the abelianizations ``H/H'``, ``K/K'``."""
    return mH + mK + graded_tensor_dim(abH, abK)


def corank(dim: SuperDim, mult: SuperDim) -> int:
    t = multiplier_bound(dim.even, dim.odd) - mult.total
    if t < 0:
        raise ValueError(f"multiplier {mult} exceeds the bound for {dim}")
    return t


def corank_heisenberg(kind: str, m: int, n: int = 0) -> int:
    """Closed forms ``t(H(m,n)) = 2m+n+1`` (m+n >= 2) and ``t(H_m) = 2m+2`` (m >= 2)."""
    if kind == "heisenberg_even":
        if m < 0 or n < 0 or m + n < 2:
            raise ValueError("closed form needs m+n >= 2")
        return 2 * m + n + 1
    if kind == "heisenberg_odd":
        if m < 2:
            raise ValueError("closed form needs m >= 2")
        return 2 * m + 2
    raise ValueError(f"unknown family {kind!r}")


def corank_direct_sum(tL: int, tK: int, dimL: SuperDim, dimK: SuperDim, abL: SuperDim, abK: SuperDim) -> int:
    return tL + tK + dimL.total * dimK.total - graded_tensor_dim(abL, abK).total


def exterior_square_dim(mult: SuperDim, derived: SuperDim) -> SuperDim:
    """``L ∧ L`` is a central extension of ``L'`` by ``M(L)``."""
    return mult + derived


def exterior_square_direct_sum_dim(extH: SuperDim, extK: SuperDim, abH: SuperDim, abK: SuperDim) -> SuperDim:
    return extH + extK + graded_tensor_dim(abH, abK)
