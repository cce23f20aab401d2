"""Recognition of nilpotent algebras with ``dim L' <= 1`` and capability.

A nilpotent ``L`` with one-dimensional derived algebra ``span{z}`` is
central in ``L`` and carries the form ``B(u, v) = coefficient of z in [u, v]``.
Its radical is ``Z(L)``, so on any complement of the centre ``B`` is
nondegenerate and its blocks give the Heisenberg parameters:

* ``z`` even: ``B`` is skew on the even part (rank ``2m``) and symmetric on
  the odd part (rank ``n``), giving ``H(m, n) + A(r|s)``;
* ``z`` odd: ``B`` pairs the even and odd parts (rank ``m``), giving
  ``H_m + A(r|s)``.

Over the rationals the odd block is only equivalent to a sum of squares up
to square classes, so recognition is at the level of parameters.  That is
all the capability decision needs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import catalog, formulas, linalg
from .algebra import (
    LieSuperalgebra,
    Parity,
    SuperDim,
    center,
    derived_subalgebra,
    is_nilpotent,
    validate,
)
from .errors import MalformedAlgebraError, NotNilpotentError
from .formulas import MultiplierDim

ZERO = SuperDim(0, 0)


@dataclass(frozen=True)
class FamilyDescriptor:
    """``kind`` is one of ``abelian`` ``(m, n)``, ``heisenberg_even`` ``(m, n, r, s)``,
    ``heisenberg_odd`` ``(m, r, s)`` or ``unrecognized`` (with ``reason``)."""

    kind: str
    params: tuple[int, ...] = ()
    reason: str = ""

    def __str__(self):
        if self.kind == "abelian":
            return "A({}|{})".format(*self.params)
        if self.kind == "heisenberg_even":
            m, n, r, s = self.params
            base = f"H({m},{n})"
        elif self.kind == "heisenberg_odd":
            m, r, s = self.params
            base = f"H_{m}"
        else:
            return f"unrecognized ({self.reason})"
        return base if r == s == 0 else f"{base}+A({r}|{s})"

    @property
    def recognized(self) -> bool:
        return self.kind != "unrecognized"

    def construct(self) -> LieSuperalgebra:
        if self.kind == "abelian":
            return catalog.abelian(*self.params)
        if self.kind == "heisenberg_even":
            m, n, r, s = self.params
            return catalog.with_abelian(catalog.heisenberg_even(m, n), r, s)
        if self.kind == "heisenberg_odd":
            m, r, s = self.params
            return catalog.with_abelian(catalog.heisenberg_odd(m), r, s)
        raise ValueError("cannot construct an unrecognized algebra")

    def superdim(self) -> SuperDim:
        if self.kind == "abelian":
            return SuperDim(*self.params)
        if self.kind == "heisenberg_even":
            m, n, r, s = self.params
            return SuperDim(2 * m + 1 + r, n + s)
        if self.kind == "heisenberg_odd":
            m, r, s = self.params
            return SuperDim(m + r, m + 1 + s)
        raise ValueError("unrecognized algebra has no family superdimension")


def _require_valid(L: LieSuperalgebra) -> None:
    bad = validate(L)
    if bad:
        raise MalformedAlgebraError(f"not a Lie superalgebra: {bad[0]}")


def _form_blocks(L: LieSuperalgebra, zrow, zpiv: int, Z) -> tuple[np.ndarray, list[int], list[int]]:
    """``B`` on the basis vectors outside the pivots of ``Z(L)``."""
    comp = [k for k in range(L.dim) if k not in set(Z.pivots)]
    scale = zrow[zpiv]
    B = np.zeros((len(comp), len(comp)), dtype=object)
    B[:, :] = Fraction(0)
    for a, i in enumerate(comp):
        for b, j in enumerate(comp):
            B[a, b] = L.basis_bracket(i, j).get(zpiv, Fraction(0)) / scale
    ev = [a for a, i in enumerate(comp) if L.parities[i] == Parity.EVEN]
    od = [a for a, i in enumerate(comp) if L.parities[i] == Parity.ODD]
    return B, ev, od


def _rank(B: np.ndarray, rows: list[int], cols: list[int]) -> int:
    if not rows or not cols:
        return 0
    return linalg.rank(B[np.ix_(rows, cols)])


def recognize(L: LieSuperalgebra, check: bool = True) -> FamilyDescriptor:
    """Family and parameters of ``L`` when ``dim L' <= 1``."""
    if check:
        _require_valid(L)
    if not is_nilpotent(L):
        return FamilyDescriptor("unrecognized", reason="not nilpotent")
    D = derived_subalgebra(L)
    if D.dim == 0:
        return FamilyDescriptor("abelian", (L.dim_even, L.dim_odd))
    if D.dim >= 2:
        return FamilyDescriptor("unrecognized", reason="dim L' >= 2")
    zrow = D.basis[0]
    zpiv = D.pivots[0]
    Z = center(L)
    B, ev, od = _form_blocks(L, zrow, zpiv, Z)
    zd = Z.superdim
    if L.parities[zpiv] == Parity.EVEN:
        rank_ee = _rank(B, ev, ev)
        m, n = rank_ee // 2, _rank(B, od, od)
        r, s = zd.even - 1, zd.odd
        out = FamilyDescriptor("heisenberg_even", (m, n, r, s))
    else:
        m = _rank(B, ev, od)
        r, s = zd.even, zd.odd - 1
        out = FamilyDescriptor("heisenberg_odd", (m, r, s))
    # B is nondegenerate off the centre, so the counts must close up
    if out.superdim() != L.superdim:
        return FamilyDescriptor("unrecognized", reason=f"form rank does not match superdimension {L.superdim}")
    return out


# --------------------------------------------------------------------------
# verdicts


@dataclass(frozen=True)
class CapabilityVerdict:
    status: str  # "capable" | "not_capable" | "undecided"
    justification: str  # rule tag
    epicenter_dim: SuperDim | None = None
    epicenter_note: str = ""
    descriptor: FamilyDescriptor | None = None
    table_status: str | None = None  # decision-table status, for oracle verdicts
    agrees: bool | None = None

    @property
    def decided(self) -> bool:
        return self.status != "undecided"


def _verdict(desc: FamilyDescriptor, L: LieSuperalgebra) -> CapabilityVerdict:
    D = derived_subalgebra(L).superdim
    if desc.kind == "abelian":
        m, n = desc.params
        if m + n == 0:
            return CapabilityVerdict("capable", "capability:zero-algebra", ZERO, "zero algebra", desc)
        if (m, n) == (0, 1) or m + n >= 2:
            return CapabilityVerdict("capable", "capability:abelian", ZERO, "", desc)
        return CapabilityVerdict("not_capable", "capability:abelian", L.superdim, "whole algebra", desc)
    if desc.kind == "heisenberg_even":
        m, n, r, s = desc.params
        tag = "capability:heisenberg-even" if r == s == 0 else "capability:heisenberg-even+abelian"
        if (m, n) == (1, 0):
            return CapabilityVerdict("capable", tag, ZERO, "", desc)
        if r == s == 0:
            # nonzero and inside Z(L) = L', which is one-dimensional
            return CapabilityVerdict("not_capable", tag, D, "equals derived subalgebra", desc)
        return CapabilityVerdict("not_capable", tag, None, "nonzero", desc)
    if desc.kind == "heisenberg_odd":
        m, r, s = desc.params
        tag = "capability:heisenberg-odd" if r == s == 0 else "capability:heisenberg-odd+abelian"
        if m == 1:
            return CapabilityVerdict("capable", tag, ZERO, "", desc)
        if r == s == 0:
            return CapabilityVerdict("not_capable", tag, D, "equals derived subalgebra", desc)
        return CapabilityVerdict("not_capable", tag, None, "nonzero", desc)
    return CapabilityVerdict("undecided", "capability:undecided", None, f"{desc.reason}; run the oracle", desc)


def is_capable(L: LieSuperalgebra) -> CapabilityVerdict:
    """Decision table on the recognized family; ``undecided`` otherwise."""
    return _verdict(recognize(L), L)


def is_capable_checked(L: LieSuperalgebra, limits: dict | None = None, minimal: bool = False, stable: bool = False) -> CapabilityVerdict:
    """Capability from the oracle epicenter, compared with the decision table."""
    from .oracle import epicenter_oracle, presentation_of

    _require_valid(L)
    if not is_nilpotent(L):
        raise NotNilpotentError("the oracle needs a nilpotent algebra")
    lim = dict(limits or {})
    max_dim = lim.pop("max_dim", None)
    if max_dim is not None and L.dim > max_dim:
        from .errors import OracleLimitError

        raise OracleLimitError(f"dimension {L.dim} exceeds the limit {max_dim}")
    res = epicenter_oracle(presentation_of(L, minimal=minimal), lim or None, stable=stable)
    status = "capable" if res.superdim == ZERO else "not_capable"
    table = is_capable(L)
    agrees = None if not table.decided else table.status == status
    return CapabilityVerdict(
        status, "oracle:epicenter", res.superdim, "", table.descriptor, table.status, agrees
    )


def noncapability_by_central_quotient(L: LieSuperalgebra) -> CapabilityVerdict | None:
    """Not capable when ``dim L' = 1`` and ``dim L/Z(L) > 2``; otherwise no conclusion."""
    if not is_nilpotent(L):
        raise NotNilpotentError("criterion needs a nilpotent algebra")
    if derived_subalgebra(L).dim != 1:
        raise ValueError("criterion needs dim L' = 1")
    if (L.superdim - center(L).superdim).total > 2:
        return CapabilityVerdict("not_capable", "capability:central-quotient", None, "nonzero")
    return None


def capable_algebra_of_corank(k: int) -> LieSuperalgebra:
    """A capable nilpotent algebra with corank ``k``."""
    if k < 0:
        raise ValueError("corank is nonnegative")
    if k == 0:
        return catalog.abelian(2, 0)
    if k == 1:
        return catalog.heisenberg_even(1, 0)
    return catalog.with_abelian(catalog.heisenberg_even(1, 0), k - 1, 0)


# --------------------------------------------------------------------------
# formula adapters: parameters come from recognize()


def _abelianization(desc: FamilyDescriptor) -> SuperDim:
    return desc.superdim() - _derived_dim(desc)


def _derived_dim(desc: FamilyDescriptor) -> SuperDim:
    if desc.kind == "heisenberg_even":
        return SuperDim(1, 0)
    if desc.kind == "heisenberg_odd":
        return SuperDim(0, 1)
    return ZERO


def multiplier_formula(desc: FamilyDescriptor) -> MultiplierDim:
    if desc.kind == "abelian":
        return MultiplierDim(formulas.multiplier_abelian(*desc.params), "multiplier:abelian")
    if desc.kind == "heisenberg_even":
        m, n, r, s = desc.params
        base = MultiplierDim(formulas.multiplier_heisenberg_even(m, n), "multiplier:heisenberg-even")
        ab = SuperDim(2 * m, n)
    elif desc.kind == "heisenberg_odd":
        m, r, s = desc.params
        base = MultiplierDim(formulas.multiplier_heisenberg_odd(m), "multiplier:heisenberg-odd")
        ab = SuperDim(m, m)
    else:
        raise ValueError("no multiplier formula for an unrecognized algebra")
    if r == s == 0:
        return base
    value = formulas.multiplier_direct_sum(base.value, formulas.multiplier_abelian(r, s), ab, SuperDim(r, s))
    return MultiplierDim(value, base.source + "+direct-sum")


def corank_formula(desc: FamilyDescriptor) -> int:
    mult = multiplier_formula(desc).value
    return formulas.corank(desc.superdim(), mult)


def exterior_square_formula(desc: FamilyDescriptor) -> SuperDim:
    return formulas.exterior_square_dim(multiplier_formula(desc).value, _derived_dim(desc))


def multiplier_of(L: LieSuperalgebra) -> MultiplierDim:
    return multiplier_formula(recognize(L))


def corank_of(L: LieSuperalgebra) -> int:
    return corank_formula(recognize(L))


# --------------------------------------------------------------------------
# the corank <= 4 list


@dataclass(frozen=True)
class TableEntry:
    label: str
    descriptor: FamilyDescriptor | None  # None for opaque entries
    note: str = ""

    @property
    def constructible(self) -> bool:
        return self.descriptor is not None


def _he(m, n, r=0, s=0):
    return FamilyDescriptor("heisenberg_even", (m, n, r, s))


def _ho(m, r=0, s=0):
    return FamilyDescriptor("heisenberg_odd", (m, r, s))


_OPAQUE = "not constructible: no definition available"

_TABLE: dict[int, tuple] = {
    0: (TableEntry("A(m|n)", None, "parametric: every abelian algebra"),),
    1: (TableEntry("H(1,0)", _he(1, 0)),),
    2: (TableEntry("H(1,0)+A(1|0)", _he(1, 0, 1, 0)), TableEntry("H(0,1)", _he(0, 1))),
    3: (
        TableEntry("H(1,0)+A(2|0)", _he(1, 0, 2, 0)),
        TableEntry("H(0,1)+A(1|0)", _he(0, 1, 1, 0)),
        TableEntry("H(0,2)", _he(0, 2)),
        TableEntry("H_1", _ho(1)),
        TableEntry("H(0,1)+A(0|1)", _he(0, 1, 0, 1)),
    ),
    4: (
        TableEntry("H(1,0)+A(3|0)", _he(1, 0, 3, 0)),
        TableEntry("L_{5,0}", None, _OPAQUE),
        TableEntry("L_{4,0}", None, _OPAQUE),
        TableEntry("H(0,3)", _he(0, 3)),
        TableEntry("H_1+A(1|0)", _ho(1, 1, 0)),
        TableEntry("H(0,1)+A(1|1)", _he(0, 1, 1, 1)),
        TableEntry("H(0,1)+A(0|2)", _he(0, 1, 0, 2)),
        TableEntry("H(0,1)+A(2|0)", _he(0, 1, 2, 0)),
        TableEntry("H_1+A(0|1)", _ho(1, 0, 1)),
        TableEntry("H_1+A(2|0)", _ho(1, 2, 0)),
    ),
}


def corank_table(k: int) -> tuple[TableEntry, ...]:
    """The published list of nilpotent algebras of corank ``k`` (``k <= 4``)."""
    if not 0 <= k <= 4:
        raise ValueError("the list covers corank 0..4 only")
    return _TABLE[k]

