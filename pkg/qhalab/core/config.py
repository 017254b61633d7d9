from typing import List, Tuple
from pydantic_settings import BaseSettings, SettingsConfigDict
import logging
import os

ENV: str = os.getenv("QHA_ENV", "")


class Settings(BaseSettings):
    # base
    QHA_ENV: str = ENV
    DEBUG: bool = False
    TITLE: str = "qhalab"
    VERSION: str = "0.1.0"

    LOGGING_LEVEL: int = logging.INFO
    LOGGERS: Tuple[str, ...] = ("py.warnings",)

    # numerical thresholds (relative to the largest singular value / modulus)
    RANK_RTOL: float = 1e-10
    TRANSLATE_RANK_RTOL: float = 1e-8
    ZERO_SET_RTOL: float = 1e-9

    # N^2 x N^2 maps are refused above this many phase points
    CONV_MAP_CAP: int = 4096

    # sampled line
    CONTINUUM_N: int = 256
    CONTINUUM_L: float = 8.0
    MODULATION_N: int = 64
    MODULATION_L: float = 4.0

    # suites
    DEFAULT_SEED: int = 20170901
    DEFAULT_ENSEMBLE_SIZE: int = 20
    DEFAULT_N_LIST: List[int] = [3, 5, 7, 9]

    # text formats
    FLOAT_FORMAT: str = "%.17g"

    model_config = SettingsConfigDict(
        case_sensitive=True,
        env_file=(
            ".env.dev" if "dev" == ENV else ".env" if "prod" == ENV else ".env.test"
        ),
        env_file_encoding="utf-8",
        extra="ignore",
    )


settings = Settings()
