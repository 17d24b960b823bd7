"""Exception types shared across the package."""


class BHDualError(Exception):
    pass


class ParseError(BHDualError):
    """Input text does not conform to the polynomial grammar."""


class NotInvertible(BHDualError):
    """Polynomial is not invertible (wrong monomial count or det E = 0)."""


class DuplicateMonomial(BHDualError):
    """Two monomials share the same exponent vector."""


class NonPositiveWeight(BHDualError):
    """Canonical weight system has an entry <= 0."""


class UnsupportedShape(BHDualError):
    """Exponent matrix is not a sum of Fermat, chain and loop blocks."""


class NotASubgroup(BHDualError):
    """Claimed subgroup relation does not hold."""


class NotASymmetry(BHDualError):
    """Element does not belong to the symmetry group it was used with."""


class AmbientMismatch(BHDualError):
    """Operands live over different ambient groups."""


class NotIsolated(BHDualError):
    """Jacobian quotient is not finite dimensional."""


class GroupTooLarge(BHDualError):
    """Group order exceeds the enumeration bound."""


class NotRational(BHDualError):
    """Eigenvalue multiset is not Galois stable, no integral cyclotomic form."""


class NonIntegerQuotient(BHDualError):
    """An orbit-space Euler characteristic failed to be an integer."""


class UnsupportedArm(BHDualError):
    """Star-shaped graph parameters must all be at least 2."""


class InvalidRank(BHDualError):
    """No diagram of the requested type and rank exists."""


class DenominatorVanishes(BHDualError):
    """Series denominator has no constant term, expansion undefined."""


class NotSL(BHDualError):
    """Group is not contained in the special linear subgroup."""


class Indivisible(BHDualError):
    """A quotient in the arm-number transformation is not an integer."""


class MissingBaseData(BHDualError):
    """No base arm-number triple is available for the requested polynomial."""


class UnknownName(BHDualError):
    """Name not present in the bundled dataset."""
