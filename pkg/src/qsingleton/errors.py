"""Exception hierarchy shared by every module."""

from __future__ import annotations


class QSingletonError(Exception):
    """Base class for all structured errors raised by the package."""


class NotPrime(QSingletonError, ValueError):
    pass


class DimensionMismatch(QSingletonError, ValueError):
    pass


class NotIsotropic(QSingletonError):
    """A generator pair pairs nonzero under the symplectic form.

    ``pair`` holds the 0-based generator indices, ``value`` the form value.
    """

    def __init__(self, pair: tuple[int, int], value: int, message: str | None = None):
        self.pair = pair
        self.value = value
        super().__init__(
            message or f"generators {pair[0]} and {pair[1]} have symplectic form {value} != 0"
        )


class DimensionExceedsN(QSingletonError):
    pass


class ResourceLimit(QSingletonError):
    """Distance search stopped early; ``lower_bound`` is a proven ``d > lower_bound``."""

    def __init__(self, lower_bound: int, message: str | None = None):
        self.lower_bound = lower_bound
        super().__init__(message or f"search budget exhausted: d > {lower_bound}")


class NotLogical(QSingletonError):
    pass


class NotCleanable(QSingletonError):
    pass


class DisjointnessViolated(QSingletonError, ValueError):
    pass


class InvalidK(QSingletonError, ValueError):
    pass


class UnknownCode(QSingletonError, KeyError):
    pass


class CapExceeded(QSingletonError):
    pass


class CodeFormatError(QSingletonError, ValueError):
    """Malformed code-file or argument text. ``line``/``column`` are 1-based when known."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


class CodeSyntaxError(CodeFormatError):
    pass


class WrongLength(CodeFormatError):
    pass


class LetterRequiresP2(CodeFormatError):
    pass


class IndexOutOfRange(CodeFormatError):
    pass
