"""Shared exception types."""


class ResourceLimitError(Exception):
    """Raised when a computation is refused because it exceeds a stated bound.

    The CLI maps this to exit code 3; raising the bound explicitly is always
    possible, refusal is never silent truncation.
    """


class InternalCheckError(Exception):
    """Raised when two routes that must agree (production vs oracle) diverge."""
