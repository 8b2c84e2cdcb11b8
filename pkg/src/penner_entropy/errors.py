"""Exception hierarchy.

Everything raised for bad input data derives from :class:`DomainError`; the
command line maps those to exit code 1.
"""


class DomainError(Exception):
    """Input is well formed but mathematically invalid."""


class NotATree(DomainError):
    pass


class DimensionTooSmall(DomainError):
    pass


class BadGrading(DomainError):
    pass


class UnknownVertex(DomainError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class NegativePower(DomainError, ValueError):
    pass


class InconsistentTrace(DomainError):
    pass


class DimensionRequired(DomainError):
    pass


class WeightedUnsupported(DomainError):
    pass


class NotPennerType(DomainError):
    pass


class IterationLimit(DomainError):
    """Raised when an enclosure did not reach the requested width.

    The best enclosure found so far is kept on ``enclosure``.
    """

    def __init__(self, message, enclosure=None):
        super().__init__(message)
        self.enclosure = enclosure


class ParseError(DomainError):
    pass


class SchemaError(DomainError):
    pass
