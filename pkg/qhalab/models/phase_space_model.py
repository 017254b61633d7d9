import typing as t
import numpy as np
from pydantic import Field, field_validator, model_validator

from ..core.exceptions import (
    DimensionMismatchError,
    ParameterMismatchError,
    UnsupportedModulusError,
)
from ..utils.schema import ComplexArray
from .base_model import BaseValue


class GroupParams(BaseValue):
    """Modulus of the cyclic group Z_N; phase space is Z_N x Z_N."""

    N: int = Field(examples=[5])

    @field_validator("N", mode="before")
    @classmethod
    def _odd_modulus(cls, v: t.Any) -> int:
        n = int(v)
        if n < 3 or n % 2 == 0:
            raise UnsupportedModulusError(
                f"N must be an odd integer >= 3 (so that 2 is invertible mod N), got {n}"
            )
        return n

    @property
    def half(self) -> int:
        """The inverse of 2 mod N."""
        return (self.N + 1) // 2

    @property
    def size(self) -> int:
        return self.N * self.N

    def require(self, other: "GroupParams") -> "GroupParams":
        if other.N != self.N:
            raise ParameterMismatchError(f"N={self.N} and N={other.N} do not match")
        return self


def same_params(*items: t.Any) -> GroupParams:
    params = items[0].params
    for item in items[1:]:
        params.require(item.params)
    return params


class PhasePoint(BaseValue):
    x: int
    omega: int
    params: GroupParams

    @model_validator(mode="before")
    @classmethod
    def _reduce(cls, data: t.Any) -> t.Any:
        if isinstance(data, dict) and "params" in data:
            params = data["params"]
            n = params.N if isinstance(params, GroupParams) else int(params["N"])
            data = {**data, "x": int(data["x"]) % n, "omega": int(data["omega"]) % n}
        return data

    @classmethod
    def of(cls, x: int, omega: int, params: GroupParams) -> "PhasePoint":
        return cls(x=x, omega=omega, params=params)

    def __neg__(self) -> "PhasePoint":
        return PhasePoint(x=-self.x, omega=-self.omega, params=self.params)

    def __add__(self, other: "PhasePoint") -> "PhasePoint":
        self.params.require(other.params)
        return PhasePoint(
            x=self.x + other.x, omega=self.omega + other.omega, params=self.params
        )

    def __sub__(self, other: "PhasePoint") -> "PhasePoint":
        return self + (-other)

    def as_tuple(self) -> tuple[int, int]:
        return self.x, self.omega


class PhaseFunction(BaseValue):
    """Complex function on Z_N x Z_N, ``values[x, omega]``, measure (1/N) counting."""

    values: ComplexArray
    params: GroupParams

    @model_validator(mode="after")
    def _shape(self) -> "PhaseFunction":
        n = self.params.N
        if self.values.shape != (n, n):
            raise DimensionMismatchError(
                f"phase function needs shape ({n}, {n}), got {self.values.shape}"
            )
        return self

    @property
    def N(self) -> int:
        return self.params.N

    @classmethod
    def zeros(cls, params: GroupParams) -> "PhaseFunction":
        return cls(values=np.zeros((params.N, params.N)), params=params)

    @classmethod
    def constant(cls, params: GroupParams, c: complex = 1.0) -> "PhaseFunction":
        return cls(values=np.full((params.N, params.N), c, dtype=complex), params=params)

    @classmethod
    def delta(cls, z: PhasePoint, weight: complex = 1.0) -> "PhaseFunction":
        values = np.zeros((z.params.N, z.params.N), dtype=complex)
        values[z.x, z.omega] = weight
        return cls(values=values, params=z.params)

    def with_values(self, values: np.ndarray) -> "PhaseFunction":
        return PhaseFunction(values=values, params=self.params)

    def conj(self) -> "PhaseFunction":
        """f*, the pointwise complex conjugate."""
        return self.with_values(np.conj(self.values))

    def reflect(self) -> "PhaseFunction":
        """f-check, z -> f(-z)."""
        return self.with_values(reflect_array(self.values))

    @property
    def vec(self) -> np.ndarray:
        """Row-major (x outer) vectorization."""
        return self.values.reshape(-1)

    def __add__(self, other: "PhaseFunction") -> "PhaseFunction":
        same_params(self, other)
        return self.with_values(self.values + other.values)

    def __sub__(self, other: "PhaseFunction") -> "PhaseFunction":
        same_params(self, other)
        return self.with_values(self.values - other.values)

    def __mul__(self, other: "complex | PhaseFunction") -> "PhaseFunction":
        if isinstance(other, PhaseFunction):
            same_params(self, other)
            return self.with_values(self.values * other.values)
        return self.with_values(self.values * other)

    __rmul__ = __mul__


def reflect_array(a: np.ndarray, axes: tuple[int, ...] = (0, 1)) -> np.ndarray:
    """``out[i, j] = a[-i mod N, -j mod N]`` over the given axes."""
    return np.roll(np.flip(a, axis=axes), 1, axis=axes)
