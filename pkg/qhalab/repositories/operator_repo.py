import typing as t

import numpy as np

from ..models import GroupParams, OperatorMatrix, Signal
from .base_repo import BaseRepository


class OperatorRepository(BaseRepository[OperatorMatrix]):
    """``QHA-MAT v1 N=<N>`` then N^2 rows ``row,col,re,im``."""

    magic = "QHA-MAT"
    index_arity = 2

    def header_tokens(self, item: OperatorMatrix) -> dict[str, t.Any]:
        return {"N": item.N}

    def values_of(self, item: OperatorMatrix) -> np.ndarray:
        return item.entries

    def shape_from(self, tokens: dict[str, str], path: str) -> tuple[int, ...]:
        n = self.int_token(tokens, "N", path)
        return n, n

    def build(self, tokens: dict[str, str], values: np.ndarray, path: str) -> OperatorMatrix:
        return OperatorMatrix(
            entries=values, params=GroupParams(N=self.int_token(tokens, "N", path))
        )


class SignalRepository(BaseRepository[Signal]):
    """``QHA-SIG v1 N=<N>`` then N rows ``t,re,im``."""

    magic = "QHA-SIG"
    index_arity = 1

    def header_tokens(self, item: Signal) -> dict[str, t.Any]:
        return {"N": item.N}

    def values_of(self, item: Signal) -> np.ndarray:
        return item.values

    def shape_from(self, tokens: dict[str, str], path: str) -> tuple[int, ...]:
        return (self.int_token(tokens, "N", path),)

    def build(self, tokens: dict[str, str], values: np.ndarray, path: str) -> Signal:
        return Signal(values=values, params=GroupParams(N=self.int_token(tokens, "N", path)))
