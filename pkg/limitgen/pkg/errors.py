"""
Domain errors.

Every error is a ValueError so command handlers can treat them as usage or
input problems; the subclasses let callers tell them apart.
"""

from typing import Optional


class LanguageError(ValueError):
    """A language or set descriptor violates its structural rules."""


class CollectionParseError(ValueError):
    """A collection file could not be parsed."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ClosureError(ValueError):
    """A closure-engine precondition does not hold."""


class SettleTimeError(ValueError):
    """A settle time cannot be certified."""


class EnumerationError(ValueError):
    """A noisy enumeration was requested with invalid noise."""


class RefutationError(ValueError):
    """The refutation pipeline was asked for the wrong construction."""


class ExternalGeneratorError(RuntimeError):
    """An external generator process broke the pipe protocol."""
