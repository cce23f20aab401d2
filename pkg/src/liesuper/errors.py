"""Exception types shared across the package."""


class LieSuperError(Exception):
    """Base class."""


class MalformedAlgebraError(LieSuperError, ValueError):
    """Structure constants that cannot describe an algebra (bad indices, shapes)."""


class NotGradedError(LieSuperError, ValueError):
    pass


class NotAnIdealError(LieSuperError, ValueError):
    pass


class NotNilpotentError(LieSuperError, ValueError):
    pass


class OracleLimitError(LieSuperError):
    """Input exceeds the configured size limits of the free-algebra oracle."""


class ClassBoundError(LieSuperError):
    """The truncation class is too small for the presented algebra."""


class FormatError(LieSuperError, ValueError):
    """Unreadable interchange or presentation file.

    ``line``/``column`` are 1-based when known.
    """

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        if line is not None:
            where = f" (line {line}, column {column})" if column is not None else f" (line {line})"
        else:
            where = f" (column {column})" if column is not None else ""
        super().__init__(message + where)
