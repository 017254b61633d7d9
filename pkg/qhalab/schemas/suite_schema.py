import pathlib
import typing as t

from dotenv import dotenv_values
from pydantic import Field, field_validator, model_validator

from ..core.config import settings
from ..core.exceptions import ConfigError, UnsupportedModulusError
from .base_schema import BaseSchema

TOLERANCE_PREFIX = "tol."


class SuiteConfig(BaseSchema):
    """Configuration of the verification suites.

    Read from a flat ``key = value`` file::

        n_list = 3, 5, 7, 9
        seed = 7
        ensemble_size = 20
        continuum_n = 256
        continuum_L = 8.0
        output_dir = out
        tol.moyal = 1e-12
    """

    n_list: t.List[int] = Field(default_factory=lambda: list(settings.DEFAULT_N_LIST))
    seed: int = Field(default=settings.DEFAULT_SEED, ge=0, lt=2**64)
    ensemble_size: int = Field(default=settings.DEFAULT_ENSEMBLE_SIZE, ge=1)
    tolerances: t.Dict[str, float] = Field(default_factory=dict)
    continuum_n: int = settings.CONTINUUM_N
    continuum_L: float = Field(default=settings.CONTINUUM_L, gt=0.0)
    output_dir: pathlib.Path = pathlib.Path("qha-out")

    @field_validator("n_list", mode="before")
    @classmethod
    def _split(cls, v: t.Any) -> t.Any:
        if isinstance(v, str):
            return [item.strip() for item in v.split(",") if item.strip()]
        return v

    @field_validator("n_list")
    @classmethod
    def _odd(cls, v: t.List[int]) -> t.List[int]:
        if not v:
            raise ConfigError("n_list must name at least one modulus")
        for n in v:
            if n < 3 or n % 2 == 0:
                raise UnsupportedModulusError(
                    f"n_list entry {n} rejected: every N must be odd and >= 3 "
                    "(2 must be invertible mod N for the half-phase)"
                )
        return v

    @field_validator("tolerances")
    @classmethod
    def _positive(cls, v: t.Dict[str, float]) -> t.Dict[str, float]:
        for name, tol in v.items():
            if not tol > 0:
                raise ConfigError(f"tolerance {name} must be positive, got {tol}")
        return v

    @model_validator(mode="before")
    @classmethod
    def _collect_tolerances(cls, data: t.Any) -> t.Any:
        if not isinstance(data, dict):
            return data
        data = dict(data)
        tolerances = dict(data.pop("tolerances", None) or {})
        for key in [k for k in data if k.startswith(TOLERANCE_PREFIX)]:
            tolerances[key[len(TOLERANCE_PREFIX) :]] = data.pop(key)
        data["tolerances"] = tolerances
        return data

    def tolerance(self, name: str, default: float) -> float:
        return self.tolerances.get(name, default)

    @classmethod
    def from_file(cls, path: str | pathlib.Path, **overrides: t.Any) -> "SuiteConfig":
        path = pathlib.Path(path)
        if not path.is_file():
            raise ConfigError(f"config file {path} is not readable")
        values = {k: v for k, v in dotenv_values(path).items() if v is not None}
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls.model_validate(values)
