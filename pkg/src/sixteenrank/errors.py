"""Shared exception types."""


class Refusal(ValueError):
    """Raised when an operation declines its input (precondition or budget).

    Subclasses ValueError so library callers can catch it generically,
    while the command line maps it to a dedicated exit status distinct
    from internal errors.
    """
