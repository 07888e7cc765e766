"""Exception types shared across the package."""


class GaussFisherError(Exception):
    """Base class for all package errors."""


class ValidationError(GaussFisherError, ValueError):
    """Input fails a precondition (shape, range, normalization, symmetry)."""


class NumericalConsistencyError(GaussFisherError, ArithmeticError):
    """A quantity violates an exact inequality beyond numerical tolerance."""


class ChartDomainError(GaussFisherError, ValueError):
    """Point lies outside, or too close to the boundary of, a chart domain."""


class TruncationError(GaussFisherError, RuntimeError):
    """Fock-space truncation is too small for the requested accuracy."""
