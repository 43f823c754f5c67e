"""Exception types shared across the package.

Division by zero raises the builtin ZeroDivisionError and bad arguments
raise ValueError; only the error kinds that need extra payload (source
position) or a distinct identity for exit-code mapping get a class here.
"""


class ParseError(ValueError):
    """Syntax error in an input expression; position is 1-based."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class MixedContextError(ParseError):
    """An expression mixes the free variable X with central t-variables."""


class DepthExceededError(ValueError):
    """A fraction tower deeper than the configured limit was requested."""


class UnknownSuiteError(ValueError):
    """An unrecognized self-test suite name."""
