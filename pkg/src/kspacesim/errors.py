"""Exception types shared across modules."""


class ValidationError(ValueError):
    """A configuration or parameter value violates a documented contract.

    ``field`` names the offending key so interfaces (CLI, HTTP) can report
    it without re-parsing the message.
    """

    def __init__(self, field: str, message: str):
        super().__init__(message)
        self.field = field


class FileFormatError(ValueError):
    """A binary file does not match its documented layout."""


class ArchiveVersionError(FileFormatError):
    """Archive was written by an incompatible format version."""


class ChecksumError(FileFormatError):
    """A frame block failed its integrity check."""

    def __init__(self, frame_index: int, message: str):
        super().__init__(message)
        self.frame_index = frame_index
