"""Exception types shared across the package."""


class DomsetError(Exception):
    """Base class for all domset errors."""


class ParseError(DomsetError):
    """Malformed input text. Carries the 1-based line number when known."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class RangeError(DomsetError):
    """A vertex or element id is outside its declared range."""


class ValidationError(DomsetError):
    """A structural invariant does not hold."""


class GenerationError(DomsetError):
    """An instance generator could not produce a valid instance."""


class ResourceLimitError(DomsetError):
    """A configured size guard refused the computation."""
