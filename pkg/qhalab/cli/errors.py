import functools
import typing as t

import typer
from loguru import logger
from pydantic import ValidationError

from ..core.exceptions import ConfigError, QHAError

F = t.TypeVar("F", bound=t.Callable[..., t.Any])


def qha_error_handler(exc: QHAError) -> int:
    logger.error(f"{type(exc).__name__}: {exc.detail}")
    return exc.exit_code


def validation_error_handler(exc: ValidationError) -> int:
    logger.error(f"invalid input: {exc.errors(include_url=False)}")
    return ConfigError.exit_code


ERROR_HANDLERS: dict[type[Exception], t.Callable[[t.Any], int]] = {
    QHAError: qha_error_handler,
    ValidationError: validation_error_handler,
}


def with_error_handlers(func: F) -> F:
    """Turn library errors raised by a command into its exit code."""

    @functools.wraps(func)
    def wrapper(*args: t.Any, **kwargs: t.Any) -> t.Any:
        try:
            return func(*args, **kwargs)
        except tuple(ERROR_HANDLERS) as exc:
            for kind, handler in ERROR_HANDLERS.items():
                if isinstance(exc, kind):
                    raise typer.Exit(code=handler(exc)) from exc
            raise

    return t.cast(F, wrapper)
