"""Exception types shared across the package."""


class ParitySignError(Exception):
    """Base class for all package errors."""


class InvalidInputError(ParitySignError, ValueError):
    """A rejected input: bad parameter range, malformed labeling, etc."""


class UnsupportedSizeError(ParitySignError, ValueError):
    """The requested size is outside what this implementation supports."""


class MalformedRecordError(ParitySignError, ValueError):
    """A graph6 record (or similar serialized record) failed to parse."""


class CapacityError(ParitySignError, RuntimeError):
    """Exact computation refused because the instance exceeds the size limit."""
