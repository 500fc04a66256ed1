class OrdvalError(Exception):
    """Base class for errors raised by ordval."""


class PreconditionError(OrdvalError, ValueError):
    """An operation was called on input outside its domain."""


class NotInGroupError(PreconditionError):
    """A hull element was used where a group element is required."""


class ParseError(OrdvalError, ValueError):
    """Malformed DSL input.  ``position`` is a 0-based character offset."""

    def __init__(self, message, position, text=None):
        super().__init__(f"{message} at offset {position}")
        self.message = message
        self.position = position
        self.text = text
