"""Shared exception types."""


class CapExceededError(RuntimeError):
    """An enumeration would exceed the configured size cap."""


class NotApplicableError(ValueError):
    """The requested invariant is not defined for the given input."""
