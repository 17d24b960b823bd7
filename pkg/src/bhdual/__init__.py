"""Exact workbench for invertible polynomials and their dualities."""

from .errors import (
    AmbientMismatch,
    BHDualError,
    DenominatorVanishes,
    DuplicateMonomial,
    GroupTooLarge,
    Indivisible,
    InvalidRank,
    MissingBaseData,
    NonIntegerQuotient,
    NonPositiveWeight,
    NotASubgroup,
    NotASymmetry,
    NotInvertible,
    NotIsolated,
    NotRational,
    NotSL,
    ParseError,
    UnknownName,
    UnsupportedArm,
    UnsupportedShape,
)
from .polynomials import (
    Block,
    GradingGroup,
    InvertiblePolynomial,
    Monomial,
    WeightSystem,
    atomic_decomposition,
    canonical_weights,
    delta,
    format_polynomial,
    gorenstein_parameter,
    is_nondegenerate,
    make_polynomial,
    maximal_grading,
    parse_polynomial,
    reduce_weights,
    reduced_weights,
    transpose,
)

__version__ = "0.1.0"
