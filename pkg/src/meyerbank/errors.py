class InvalidArgument(ValueError):
    """Raised when an argument violates a documented precondition."""
