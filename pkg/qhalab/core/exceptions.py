import typing as t


class QHAError(Exception):
    """Base error. ``exit_code`` is what the command line returns for it."""

    exit_code: int = 2

    def __init__(
        self, detail: t.Any = None, exit_code: t.Optional[int] = None
    ) -> None:
        super().__init__(detail)
        self.detail = detail
        if exit_code is not None:
            self.exit_code = exit_code

    def __str__(self) -> str:
        return str(self.detail)


class ParameterMismatchError(QHAError):
    exit_code = 3


class UnsupportedModulusError(QHAError):
    exit_code = 3


class DimensionMismatchError(QHAError):
    exit_code = 3


class InvalidExponentError(QHAError):
    exit_code = 3


class InvalidToleranceError(QHAError):
    exit_code = 3


class IncompatibleGridError(QHAError):
    exit_code = 3


class ResourceLimitError(QHAError):
    exit_code = 4


class ConfigError(QHAError):
    exit_code = 5


class ParseError(QHAError):
    exit_code = 6

    def __init__(
        self,
        detail: t.Any = None,
        path: t.Optional[str] = None,
        line: t.Optional[int] = None,
    ) -> None:
        self.path = path
        self.line = line
        where = ""
        if path is not None:
            where = f"{path}"
            if line is not None:
                where += f":{line}"
            where += ": "
        super().__init__(f"{where}{detail}")


class ConsistencyError(QHAError):
    """Two independent code paths for the same quantity disagree."""

    exit_code = 7
