"""Exception types shared across the package."""


class FieldMismatchError(ValueError):
    """Two operands live in prime fields with different moduli."""


class ParameterError(ValueError):
    """Invalid code parameters, shapes, degrees, or job inputs."""


class BudgetExceededError(RuntimeError):
    """A brute-force enumeration would exceed its codeword budget."""
