"""Exception hierarchy."""


class StarcohError(Exception):
    """Base class for all errors raised by the package."""


class ContextError(StarcohError):
    """A path or context does not fit the formula it is used with."""


class TypeMismatch(StarcohError):
    """An arrow term or Gentzen term is ill-typed."""


class RewriteError(StarcohError):
    """An axiom schema does not apply where it was asked to."""


class NotNiceError(StarcohError):
    """A formula lies outside the nice fragment."""


class CutElimError(StarcohError):
    """A cut-elimination step broke its own type or graph check."""


class ParseError(StarcohError):
    """Malformed textual input."""

    def __init__(self, message: str, text: str = "", pos: int = -1):
        if pos >= 0:
            message = f"{message} at position {pos}: {text[:pos]}<HERE>{text[pos:]}"
        super().__init__(message)
        self.pos = pos
