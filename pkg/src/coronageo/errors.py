"""Exception types shared across the package."""


class FormatError(ValueError):
    """Malformed textual graph input (graph6 or edge list)."""

    def __init__(self, message: str, *, offset: int | None = None, line: int | None = None):
        self.message = message
        self.offset = offset
        self.line = line
        where = []
        if line is not None:
            where.append(f"line {line}")
        if offset is not None:
            where.append(f"byte {offset}")
        super().__init__(f"{message} ({', '.join(where)})" if where else message)


class DomainError(ValueError):
    """Input falls outside an operation's stated domain."""


class CapExceeded(RuntimeError):
    """Instance exceeds a configured size or search cap."""
