class QShiftError(ValueError):
    """Base class for domain errors raised by qshift."""


class NotStrictlyDecreasing(QShiftError):
    pass


class NonPositivePart(QShiftError):
    pass


class MalformedToken(QShiftError):
    pass


class NotContained(QShiftError):
    pass


class IndexOutOfRange(QShiftError):
    pass


class ShapeMismatch(QShiftError):
    pass


class NotAPath(QShiftError):
    pass


class DegreeMismatch(QShiftError):
    pass


class VarCountMismatch(QShiftError):
    pass


class InternalNonStrictContent(RuntimeError):
    """An amenable filling with non-strict content was produced (a bug)."""
