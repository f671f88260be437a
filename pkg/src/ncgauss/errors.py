"""Exception types raised by validation, construction, and classification."""


class NCGaussError(ValueError):
    """Base class for every error raised by this package."""


class DimensionError(NCGaussError):
    """Matrix or parameter dimensions are invalid or mutually inconsistent."""


class MatrixStructureError(NCGaussError):
    """A required structural property (symmetry, skewness, hermiticity) fails."""


class NotPositiveDefiniteError(NCGaussError):
    """A covariance matrix is not positive-definite."""


class SingularMatrixError(NCGaussError):
    """A matrix that must be invertible is numerically singular."""


class DomainError(NCGaussError):
    """Parameters fall outside the admissible domain (theta*eta >= 1, R >= 1, ...)."""


class FormulaDomainError(DomainError):
    """A closed-form radicand is negative beyond tolerance."""
