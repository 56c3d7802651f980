"""Exception types shared across the package."""


class ValextError(Exception):
    """Base class for all errors raised by valext."""


class PreconditionError(ValextError, ValueError):
    """An input violates the documented contract of an operation."""


class InternalError(ValextError, RuntimeError):
    """A mathematical consistency check failed; indicates a bug, not bad input."""


class ParseError(ValextError, ValueError):
    def __init__(self, message, position=None, text=None):
        self.position = position
        self.text = text
        if position is not None:
            message = f'{message} at position {position}'
        super().__init__(message)
