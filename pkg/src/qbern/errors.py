"""Exception types shared across the package."""


class DomainError(ValueError):
    """A parameter lies outside the legal domain of an operation."""


class SingularityError(DomainError):
    """Evaluation was requested exactly at a pole of the interpolation function."""


class TruncationError(ArithmeticError):
    """A truncated series did not converge within the allotted terms."""
