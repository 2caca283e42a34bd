"""Shared exception types."""


class CapacityError(ValueError):
    """An input exceeds the documented cap for an exact-arithmetic routine."""


class ExactnessError(ArithmeticError):
    """A quantity that must be exactly rational (or integral) is not.

    Raised instead of rounding: a non-rational inner product or a
    non-integral multiplicity signals a caller bug, not a tolerance issue.
    """
