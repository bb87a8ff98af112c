"""Exception types shared across the package."""


class FkimageError(Exception):
    """Base class for all package-specific errors."""


class DomainError(FkimageError, ValueError):
    """An index or argument lies outside its mathematical domain."""


class DimensionError(FkimageError, ValueError):
    """An array does not match the screen shape it is used with."""


class ValidationError(FkimageError, ValueError):
    """A numerical precondition (e.g. unitarity of a matrix) is violated."""


class FormatError(FkimageError, ValueError):
    """A file is malformed or uses an unsupported encoding."""
