"""Exception hierarchy shared across the package."""


class LeaperError(Exception):
    """Base class for every error raised by leapertours."""


class DomainError(LeaperError, ValueError):
    """An argument lies outside the domain an operation is defined on."""


class DimensionError(LeaperError, ValueError):
    pass


class RangeError(LeaperError, OverflowError):
    pass


class ConfigError(LeaperError, ValueError):
    pass


class PreconditionError(LeaperError, ValueError):
    pass


class FormatError(LeaperError, ValueError):
    """Malformed tour file. ``line`` is 1-based, or None for whole-file problems."""

    def __init__(self, message, line=None):
        self.line = line
        super().__init__(message if line is None else f"line {line}: {message}")
