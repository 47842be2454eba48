"""Exception types raised by the engine."""


class DomainError(ValueError):
    """An argument lies outside the domain of an operation."""


class IndexRangeError(IndexError):
    """A Fibonacci/Lucas index falls outside the cached range."""


class InvariantViolation(ArithmeticError):
    """An internal consistency check failed; signals an arithmetic bug."""


class CaseListError(ValueError):
    """An explicit piecewise case list has gaps, overlaps or bad bounds."""
