"""Exception types shared by all modules."""


class BQZetaError(Exception):
    """Base class for every error raised by this package."""


class ArgumentError(BQZetaError, ValueError):
    pass


class ZeroDivisorError(BQZetaError, ZeroDivisionError):
    """Raised when inverting a multicomplex number with a vanishing idempotent component."""


class BoundError(BQZetaError, ValueError):
    """A brute-force search or scan would exceed its configured bound."""


class PoleError(BQZetaError, ArithmeticError):
    """Evaluation requested at (or numerically too close to) a pole."""


class DomainError(BQZetaError, ValueError):
    pass


class ParseError(BQZetaError, ValueError):
    def __init__(self, message, text, position):
        super().__init__(f"{message} at position {position} in {text!r}")
        self.text = text
        self.position = position
