"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain of the requested operation."""


class NumericalError(ArithmeticError):
    """A numerical routine failed to meet its accuracy contract."""


class ResourceLimitError(RuntimeError):
    """An input exceeds a documented size guard."""
