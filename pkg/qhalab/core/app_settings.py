import logging
import sys

from typing import Any, Dict
from functools import lru_cache

from loguru import logger

from .config import Settings
from ..utils.logging import InterceptHandler, route_numpy_errors


class AppSettings(Settings):
    @property
    def typer_kwargs(self) -> Dict[str, Any]:
        return {
            "name": self.TITLE,
            "help": f"{self.TITLE} {self.VERSION}: quantum harmonic analysis on Z_N x Z_N",
            "no_args_is_help": True,
            "pretty_exceptions_enable": self.DEBUG,
        }

    def configure_logging(self, level: int | None = None) -> None:
        level = self.LOGGING_LEVEL if level is None else level
        logging.captureWarnings(True)
        logging.getLogger().handlers = [InterceptHandler()]
        for logger_name in self.LOGGERS:
            logging_logger = logging.getLogger(logger_name)
            logging_logger.handlers = [InterceptHandler(level=level)]

        logger.configure(handlers=[{"sink": sys.stderr, "level": level}])
        route_numpy_errors()


@lru_cache
def get_app_settings() -> AppSettings:
    config = AppSettings()
    return config
