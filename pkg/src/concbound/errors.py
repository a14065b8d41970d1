"""Exception hierarchy shared by every module."""


class ConcboundError(Exception):
    """Base class for all package errors."""


class DimensionError(ConcboundError, ValueError):
    """Matrix or subsystem shapes are inconsistent or exceed the size cap."""


class PreconditionError(ConcboundError, ValueError):
    """An input violates a documented precondition (Hermiticity, normalisation, range)."""


class DomainError(ConcboundError, ValueError):
    """The quantity is not defined for the given input."""


class NumericError(ConcboundError, ArithmeticError):
    """A numerical routine failed to converge or produced an inconsistent result."""


class StateFileError(ConcboundError, ValueError):
    """A serialized state or witness file could not be parsed or validated."""
