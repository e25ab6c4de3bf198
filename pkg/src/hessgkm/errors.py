"""Exception hierarchy shared by every module."""


class HessGKMError(Exception):
    """Base class for all domain errors raised by this package."""


class ValidationError(HessGKMError, ValueError):
    pass


class NotWeaklyIncreasing(ValidationError):
    pass


class BelowDiagonal(ValidationError):
    pass


class OutOfRange(ValidationError):
    pass


class IndexOutOfRange(HessGKMError, IndexError):
    pass


class SizeMismatch(HessGKMError, ValueError):
    pass


class CapExceeded(HessGKMError):
    pass


class BudgetExceeded(HessGKMError):
    pass


class NotConnected(HessGKMError):
    pass


class PreconditionUnmet(HessGKMError):
    pass


class InvalidCardinality(HessGKMError, ValueError):
    pass


class NonIntegralSolution(HessGKMError, ArithmeticError):
    pass


class ParseError(ValidationError):
    pass
