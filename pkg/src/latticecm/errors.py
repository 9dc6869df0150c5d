"""Exception types raised across the package."""


class LatticeCMError(ValueError):
    """Base class for all errors raised by latticecm."""


class DimensionError(LatticeCMError):
    """Operand shapes do not fit the operation."""


class NotFullRank(LatticeCMError):
    pass


class ZeroRow(LatticeCMError):
    pass


class AmbientTooSmall(LatticeCMError):
    pass


class NotPositive(LatticeCMError):
    """The lattice meets the nonnegative orthant outside the origin."""


class WrongCodim(LatticeCMError):
    pass


class ZeroPoint(LatticeCMError):
    pass


class QuadrantNotCovered(LatticeCMError):
    pass


class NotImbalanced(LatticeCMError):
    pass


class TooFewRays(LatticeCMError):
    pass


class DegenerateTransform(LatticeCMError):
    """The basis change is unimodular, so no proper sublattice results."""


class SearchExhausted(LatticeCMError):
    """A bounded search hit its cap without finding a witness."""


class InvalidField(LatticeCMError):
    pass
