from typing import Optional


class QuiverLabError(ValueError):
    """Base class of every error raised on bad input."""


class CyclicOrientation(QuiverLabError):
    pass


class BadLength(QuiverLabError):
    pass


class UnknownVertex(QuiverLabError):
    pass


class ShapeMismatch(QuiverLabError):
    pass


class QuiverMismatch(QuiverLabError):
    pass


class IndexMismatch(QuiverLabError):
    pass


class NotSink(QuiverLabError):
    pass


class NotSource(QuiverLabError):
    pass


class PeriodMismatch(QuiverLabError):
    pass


class NotInRepT(QuiverLabError):
    pass


class ZeroParameter(QuiverLabError):
    pass


class DuplicateParameter(QuiverLabError):
    pass


class DimensionMismatch(QuiverLabError):
    pass


class UnsupportedStratum(QuiverLabError):
    pass


class TooLarge(QuiverLabError):
    pass


class ConfigError(QuiverLabError):
    pass


class BadSign(QuiverLabError):
    """An orientation word holds a character other than a sign; ``position`` is 0-based."""

    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__(message)


class ParseError(QuiverLabError):
    """Raised by the file parsers.

    Args:
        message (str): What went wrong.
        line (int): 1-based line number.
        column (Optional[int]): 1-based column, when it is known.
    """

    def __init__(self, message: str, line: int, column: Optional[int] = None):
        self.line = line
        self.column = column
        location = f"line {line}" if column is None else f"line {line}, column {column}"
        super().__init__(f"{location}: {message}")
