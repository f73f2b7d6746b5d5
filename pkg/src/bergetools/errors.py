"""Exception types shared across the package."""


class ResourceLimitError(RuntimeError):
    """Raised when a search exceeds its node budget or documented size limit.

    A search that raises this never reports a partial value.
    """

    def __init__(self, message, nodes=None):
        super().__init__(message)
        self.nodes = nodes


class ParseError(ValueError):
    """Malformed input in the shared hypergraph text format."""

    def __init__(self, message, lineno=None):
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)
        self.lineno = lineno


class PreconditionError(ValueError):
    """An operation was called on an input outside its documented domain."""
