"""Exception types raised across the package."""


class DimensionError(ValueError):
    """Matrix shapes do not fit the requested operation."""


class DomainError(ValueError):
    """A physical parameter lies outside its allowed range."""


class PreconditionError(ValueError):
    """An input violates a structural precondition (e.g. not an X-state)."""


class NumericalError(ArithmeticError):
    """A numerical result is inconsistent with the maths that produced it."""
