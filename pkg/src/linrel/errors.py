"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class LinrelError(Exception):
    """Base class for all errors raised by linrel."""


class FieldMismatch(LinrelError):
    pass


class DivisionByZero(LinrelError, ZeroDivisionError):
    pass


class NotAPrime(LinrelError, ValueError):
    pass


class BadScalar(LinrelError, ValueError):
    pass


class DimensionMismatch(LinrelError, ValueError):
    pass


class ShapeMismatch(LinrelError, ValueError):
    """Two relations do not live in the spaces an operation requires."""


class NotContained(LinrelError, ValueError):
    pass


class NotAnOperator(LinrelError, ValueError):
    pass


class BudgetExceeded(LinrelError):
    pass


class VerificationError(LinrelError, AssertionError):
    """A constructed solution failed its own post-verification (a bug, never user error)."""


class ParseError(LinrelError, ValueError):
    def __init__(self, message: str, line: int, column: int = 1) -> None:
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
