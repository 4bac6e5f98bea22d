"""Exception hierarchy.

Every error raised on bad input derives from ``ColouringError`` (itself a
``ValueError``), so callers can catch the whole family at once.
"""


class ColouringError(ValueError):
    pass


class EmptyInput(ColouringError):
    pass


class EmptyFace(ColouringError):
    pass


class BadLabel(ColouringError):
    pass


class NotAComplex(ColouringError):
    """Face family is not downward closed."""


class MissingVertex(ColouringError):
    pass


class NameClash(ColouringError):
    pass


class BadDimension(ColouringError):
    pass


class DomainMismatch(ColouringError):
    pass


class HypothesisViolated(ColouringError):
    """A theorem-backed route was requested on a complex outside its hypotheses."""


class NotAPartition(ColouringError):
    pass


class TooLarge(ColouringError):
    pass


class EmptyBCP(ColouringError):
    pass


class OutOfRange(ColouringError):
    pass


class BadK(ColouringError):
    pass


class PaletteMismatch(ColouringError):
    pass


class InvalidInput(ColouringError):
    pass
