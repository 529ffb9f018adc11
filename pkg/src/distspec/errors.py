"""Exception types shared across the package."""


class DistSpecError(Exception):
    """Base class for all package errors."""


class ParseError(DistSpecError, ValueError):
    def __init__(self, message: str, offset: int | None = None):
        self.offset = offset
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)


class Unsupported(DistSpecError, ValueError):
    pass


class BadArgument(DistSpecError, ValueError):
    pass


class NotConnected(DistSpecError, ValueError):
    pass


class TooSmall(DistSpecError, ValueError):
    pass


class CatalogError(DistSpecError):
    def __init__(self, message: str, entry: str | None = None):
        self.entry = entry
        super().__init__(f"{entry}: {message}" if entry else message)
