"""Shared exception types."""


class SSetError(Exception):
    """Base class for all errors raised by this package."""


class CompositionError(SSetError):
    """Source/target dimensions of two maps do not line up."""


class TruncationError(SSetError):
    """An operation would leave the truncated dimension range."""


class FrozenError(SSetError):
    """Attempted mutation of a frozen structure."""


class DocumentError(SSetError):
    """Malformed or inconsistent document."""

    def __init__(self, message, path=""):
        self.path = path
        super().__init__(f"{path}: {message}" if path else message)
