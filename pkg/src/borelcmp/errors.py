"""Exception types shared across the package."""


class BorelcmpError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(BorelcmpError):
    """A value violates a documented precondition or invariant."""


class ParseError(BorelcmpError):
    """A literal could not be parsed; message names the offending token."""

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
