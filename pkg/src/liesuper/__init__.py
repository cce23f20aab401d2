"""Exact computations with finite-dimensional nilpotent Lie superalgebras over Q.

Structure constants, the standard Heisenberg and abelian families, closed
formulas for the multiplier, corank and exterior square, capability
decisions, and an independent Hopf-formula oracle built on truncated free
nilpotent Lie superalgebras.
"""

from .algebra import (
    GradedSubspace,
    LieSuperalgebra,
    Parity,
    SuperDim,
    bracket,
    center,
    change_basis,
    derived_subalgebra,
    direct_sum,
    is_nilpotent,
    is_valid,
    quotient,
    validate,
)
from .capability import (
    FamilyDescriptor,
    capable_algebra_of_corank,
    corank_of,
    corank_table,
    is_capable,
    is_capable_checked,
    multiplier_of,
    recognize,
)
from .errors import (
    ClassBoundError,
    FormatError,
    LieSuperError,
    MalformedAlgebraError,
    NotAnIdealError,
    NotGradedError,
    NotNilpotentError,
    OracleLimitError,
)
from .oracle import (
    FreePresentation,
    epicenter_oracle,
    exterior_square_oracle,
    hopf_multiplier,
    presentation,
    presentation_of,
)

__version__ = "0.1.0"
