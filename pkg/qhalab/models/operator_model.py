import typing as t

import numpy as np
from pydantic import Field, model_validator

from ..core.exceptions import DimensionMismatchError
from ..utils.schema import ComplexArray
from .base_model import BaseValue
from .phase_space_model import GroupParams, same_params


class Signal(BaseValue):
    """Element of l^2(Z_N) with plain counting measure."""

    values: ComplexArray
    params: GroupParams

    @model_validator(mode="after")
    def _shape(self) -> "Signal":
        if self.values.shape != (self.params.N,):
            raise DimensionMismatchError(
                f"signal needs length {self.params.N}, got shape {self.values.shape}"
            )
        return self

    @property
    def N(self) -> int:
        return self.params.N

    @classmethod
    def basis(cls, params: GroupParams, k: int = 0) -> "Signal":
        values = np.zeros(params.N, dtype=complex)
        values[k % params.N] = 1.0
        return cls(values=values, params=params)

    @classmethod
    def zeros(cls, params: GroupParams) -> "Signal":
        return cls(values=np.zeros(params.N), params=params)

    def with_values(self, values: np.ndarray) -> "Signal":
        return Signal(values=values, params=self.params)

    def norm(self) -> float:
        return float(np.linalg.norm(self.values))

    def inner(self, other: "Signal") -> complex:
        """<self, other>, antilinear in the second slot."""
        same_params(self, other)
        return complex(np.vdot(other.values, self.values))

    def __add__(self, other: "Signal") -> "Signal":
        same_params(self, other)
        return self.with_values(self.values + other.values)

    def __mul__(self, c: complex) -> "Signal":
        return self.with_values(self.values * c)

    __rmul__ = __mul__


class OperatorMatrix(BaseValue):
    """N x N complex matrix acting on l^2(Z_N); ``entries[row, col]``."""

    entries: ComplexArray
    params: GroupParams

    @model_validator(mode="after")
    def _shape(self) -> "OperatorMatrix":
        n = self.params.N
        if self.entries.shape != (n, n):
            raise DimensionMismatchError(
                f"operator needs shape ({n}, {n}), got {self.entries.shape}"
            )
        return self

    @property
    def N(self) -> int:
        return self.params.N

    @classmethod
    def identity(cls, params: GroupParams) -> "OperatorMatrix":
        return cls(entries=np.eye(params.N), params=params)

    @classmethod
    def zeros(cls, params: GroupParams) -> "OperatorMatrix":
        return cls(entries=np.zeros((params.N, params.N)), params=params)

    def with_entries(self, entries: np.ndarray) -> "OperatorMatrix":
        return OperatorMatrix(entries=entries, params=self.params)

    def adjoint(self) -> "OperatorMatrix":
        return self.with_entries(self.entries.conj().T)

    def apply(self, psi: Signal) -> Signal:
        same_params(self, psi)
        return psi.with_values(self.entries @ psi.values)

    @property
    def vec(self) -> np.ndarray:
        """Row-major vectorization of the entries."""
        return self.entries.reshape(-1)

    def __matmul__(self, other: "OperatorMatrix") -> "OperatorMatrix":
        same_params(self, other)
        return self.with_entries(self.entries @ other.entries)

    def __add__(self, other: "OperatorMatrix") -> "OperatorMatrix":
        same_params(self, other)
        return self.with_entries(self.entries + other.entries)

    def __sub__(self, other: "OperatorMatrix") -> "OperatorMatrix":
        same_params(self, other)
        return self.with_entries(self.entries - other.entries)

    def __mul__(self, c: complex) -> "OperatorMatrix":
        return self.with_entries(self.entries * c)

    __rmul__ = __mul__


class ConvMapMatrix(BaseValue):
    """Explicit N^2 x N^2 matrix of A_S (f -> f*S) or B_S (T -> T*S-check-adjoint).

    Domain and range are vectorized row-major: phase functions on (x, omega),
    operators on (row, col).
    """

    matrix: ComplexArray
    which: t.Literal["A", "B"] = Field(description="A: functions -> operators, B: operators -> functions")
    source: OperatorMatrix

    @model_validator(mode="after")
    def _shape(self) -> "ConvMapMatrix":
        m = self.source.params.size
        if self.matrix.shape != (m, m):
            raise DimensionMismatchError(
                f"convolution map needs shape ({m}, {m}), got {self.matrix.shape}"
            )
        return self

    @property
    def params(self) -> GroupParams:
        return self.source.params
