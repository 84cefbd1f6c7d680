"""Shared exception types."""


class InternalConsistencyError(RuntimeError):
    """State that should be unreachable was reached; indicates a sampler bug."""
