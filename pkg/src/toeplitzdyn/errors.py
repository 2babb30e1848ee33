"""Exception hierarchy used across the package."""


class ToeplitzDynError(Exception):
    """Base class for all package errors."""


class DimensionMismatch(ToeplitzDynError):
    """Operands have incompatible matrix dimensions."""


class PartsSumMismatch(ToeplitzDynError):
    """Multinomial parts are negative or do not sum to the requested total."""


class ExponentArityMismatch(ToeplitzDynError):
    """Multi-index length differs from the number of tuple members."""


class HypothesisFailure(ToeplitzDynError):
    """The input violates a mathematical hypothesis the operation requires.

    The CLI maps this family to exit code 3.
    """


class NotUpperToeplitz(HypothesisFailure):
    """Matrix is not upper triangular with constant diagonals within tolerance."""


class ZeroLeadingCoefficient(HypothesisFailure):
    """A leading (diagonal) coefficient is zero where a formula divides by it."""


class ZeroLastCoordinate(HypothesisFailure):
    """The last coordinate of the initial vector is zero."""


class ClusterAmbiguity(HypothesisFailure):
    """Two eigenvalue clusters are too close to be separated at the given radius."""


class NotCyclic(HypothesisFailure):
    """Matrix has an eigenvalue with geometric multiplicity above one."""


class NotCommuting(HypothesisFailure):
    """Two tuple members fail the commutator test."""


class IllConditionedChain(HypothesisFailure):
    """Generalized eigenvector chain could not be solved to tolerance."""


class GridTooLarge(ToeplitzDynError):
    """Coverage grid would exceed the cell-count cap."""


class BudgetExceeded(ToeplitzDynError):
    """Orbit enumeration would exceed the configured point budget."""
