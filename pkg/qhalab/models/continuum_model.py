import numpy as np
from pydantic import Field, field_validator, model_validator

from ..core.exceptions import DimensionMismatchError, IncompatibleGridError
from ..utils.schema import ComplexArray
from .base_model import BaseValue


class SampledLine(BaseValue):
    """Grid t_k = -L + k*delta, k = 0..n-1, delta = 2L/n, on [-L, L)."""

    n: int = Field(default=256, examples=[256])
    L: float = Field(default=8.0, gt=0.0, examples=[8.0])

    @field_validator("n")
    @classmethod
    def _power_of_two(cls, v: int) -> int:
        if v < 16 or v & (v - 1):
            raise ValueError(f"n must be a power of two >= 16, got {v}")
        return v

    @property
    def delta(self) -> float:
        return 2.0 * self.L / self.n

    @property
    def points(self) -> np.ndarray:
        return -self.L + self.delta * np.arange(self.n)

    def reciprocal(self) -> "SampledLine":
        """Frequency grid paired with this one by the DFT (spacing 1/(n*delta))."""
        return SampledLine(n=self.n, L=self.n / (4.0 * self.L))

    def is_reciprocal_of(self, other: "SampledLine") -> bool:
        return self.n == other.n and bool(np.isclose(self.L, other.n / (4.0 * other.L)))

    def require(self, other: "SampledLine") -> "SampledLine":
        if self.n != other.n or not np.isclose(self.L, other.L):
            raise IncompatibleGridError(
                f"grids (n={self.n}, L={self.L}) and (n={other.n}, L={other.L}) differ"
            )
        return self


class ContinuumSignal(BaseValue):
    """Samples of a function in L^2(R) on a SampledLine."""

    samples: ComplexArray
    line: SampledLine

    @model_validator(mode="after")
    def _shape(self) -> "ContinuumSignal":
        if self.samples.shape != (self.line.n,):
            raise DimensionMismatchError(
                f"signal needs {self.line.n} samples, got shape {self.samples.shape}"
            )
        return self

    def norm(self) -> float:
        return float(np.sqrt(self.line.delta * np.sum(np.abs(self.samples) ** 2)))

    def inner(self, other: "ContinuumSignal") -> complex:
        self.line.require(other.line)
        return complex(self.line.delta * np.vdot(other.samples, self.samples))

    def with_samples(self, samples: np.ndarray) -> "ContinuumSignal":
        return ContinuumSignal(samples=samples, line=self.line)

    def __add__(self, other: "ContinuumSignal") -> "ContinuumSignal":
        self.line.require(other.line)
        return self.with_samples(self.samples + other.samples)

    def __mul__(self, c: complex) -> "ContinuumSignal":
        return self.with_samples(self.samples * c)

    __rmul__ = __mul__


class PhasePlane(BaseValue):
    """Samples ``values[j, k]`` of a function on R^2 at (x_j, omega_k).

    x_j runs over ``line`` and omega_k over ``line.reciprocal()``; the area
    element is delta * 1/(n*delta) = 1/n.
    """

    values: ComplexArray
    line: SampledLine

    @model_validator(mode="after")
    def _shape(self) -> "PhasePlane":
        n = self.line.n
        if self.values.shape != (n, n):
            raise DimensionMismatchError(
                f"phase plane needs shape ({n}, {n}), got {self.values.shape}"
            )
        return self

    @property
    def frequency_line(self) -> SampledLine:
        return self.line.reciprocal()

    @property
    def cell_area(self) -> float:
        return 1.0 / self.line.n

    def mesh(self) -> tuple[np.ndarray, np.ndarray]:
        return np.meshgrid(
            self.line.points, self.frequency_line.points, indexing="ij"
        )

    def with_values(self, values: np.ndarray) -> "PhasePlane":
        return PhasePlane(values=values, line=self.line)
