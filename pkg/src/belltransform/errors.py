"""Exception hierarchy shared by all modules."""


class BellError(Exception):
    """Base class for errors raised by this package."""


class DomainError(BellError, ValueError):
    """An argument lies outside the mathematical domain of the operation."""


class LengthError(BellError, ValueError):
    """A sequence or series prefix is too short for the requested order."""


class ShapeError(BellError, ValueError):
    """A series has the wrong constant or linear coefficient."""


class CompositionError(ShapeError):
    """Inner series of a composition has a nonzero constant term."""


class NotInvertibleError(ShapeError):
    """Series has no compositional inverse."""


class DataError(BellError):
    """Malformed data file, cache entry or network payload."""


class UnavailableError(BellError):
    """Network access was requested in offline mode."""


class TransportError(BellError):
    """Network request failed."""


class NotFoundError(BellError, LookupError):
    """Requested cache entry does not exist."""
