import logging
import warnings
from types import FrameType
from typing import cast

import numpy as np
from loguru import logger


class InterceptHandler(logging.Handler):
    """Forward stdlib records (``py.warnings`` in particular) to loguru."""

    def emit(self, record: logging.LogRecord) -> None:  # pragma: no cover
        try:
            level = logger.level(record.levelname).name
        except ValueError:
            level = str(record.levelno)

        # walk out of the logging/warnings machinery to the real caller
        frame, depth = logging.currentframe(), 2
        while frame.f_code.co_filename in (logging.__file__, warnings.__file__):
            frame = cast(FrameType, frame.f_back)
            depth += 1

        logger.opt(depth=depth, exception=record.exc_info).log(
            level,
            record.getMessage(),
        )


def _numpy_error_sink(kind: str, flag: int) -> None:
    logger.warning(f"numpy floating point error: {kind} (flag={flag})")


def route_numpy_errors(policy: str = "call") -> dict:
    """Send numpy floating point errors (overflow, invalid, ...) to loguru.

    Returns the previous error state so callers can restore it.
    """
    np.seterrcall(_numpy_error_sink)
    return np.seterr(all=policy, under="ignore")

