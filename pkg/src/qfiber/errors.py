"""Shared exception types and enumeration limits."""

DEFAULT_ENUMERATION_CAP = 10_000_000


class EnumerationCapError(RuntimeError):
    """Raised when an exhaustive enumeration would exceed the configured cap."""
