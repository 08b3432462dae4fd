"""
Exception hierarchy for evchar.
"""


class EvcharError(Exception):
    """Base class for every error raised by evchar."""


class PartitionError(EvcharError, ValueError):
    """Malformed or non-canonical partition."""


class SizeMismatchError(EvcharError, ValueError):
    """Two objects that must have the same size (or degree) do not."""


class DomainError(EvcharError, ValueError):
    """An argument lies outside the domain of an operation."""


class GuardError(EvcharError):
    """A run guard or an internal consistency check tripped."""


class CacheFormatError(EvcharError):
    """A character cache file contains a line that cannot be decoded."""

    def __init__(self, line_number: int, line: str, reason: str):
        self.line_number = line_number
        self.line = line
        self.reason = reason
        super().__init__(f"line {line_number}: {reason}: {line!r}")
