"""Exception types shared across the package."""


class InvalidInputError(ValueError):
    """Malformed literal, degree mismatch, or an input violating a precondition."""


class ResourceLimitError(RuntimeError):
    """An exhaustive search or brute-force budget was exceeded."""


class DomainError(ValueError):
    """A real function was evaluated outside its domain."""


class NumericError(ArithmeticError):
    """An iterative numerical method failed to converge."""
