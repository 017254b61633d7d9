import typing as t

import numpy as np

from ..core.exceptions import ParseError
from ..models import GroupParams, PhaseFunction, PhasePlane, SampledLine
from .base_repo import BaseRepository

CONTINUUM_GRID = "continuum"


class PhaseFunctionRepository(BaseRepository[PhaseFunction]):
    """``QHA-FUN v1 N=<N>`` then N^2 rows ``x,omega,re,im``."""

    magic = "QHA-FUN"
    index_arity = 2

    def header_tokens(self, item: PhaseFunction) -> dict[str, t.Any]:
        return {"N": item.N}

    def values_of(self, item: PhaseFunction) -> np.ndarray:
        return item.values

    def shape_from(self, tokens: dict[str, str], path: str) -> tuple[int, ...]:
        if "GRID" in tokens:
            raise ParseError(
                "continuum phase-plane file where a finite phase function was expected",
                path=path,
                line=1,
            )
        n = self.int_token(tokens, "N", path)
        return n, n

    def build(self, tokens: dict[str, str], values: np.ndarray, path: str) -> PhaseFunction:
        params = GroupParams(N=self.int_token(tokens, "N", path))
        return PhaseFunction(values=values, params=params)


class PhasePlaneRepository(BaseRepository[PhasePlane]):
    """Sampled phase plane: ``QHA-FUN v1 N=<n> GRID=continuum n=<n> L=<L>``."""

    magic = "QHA-FUN"
    index_arity = 2

    def header_tokens(self, item: PhasePlane) -> dict[str, t.Any]:
        return {
            "N": item.line.n,
            "GRID": CONTINUUM_GRID,
            "n": item.line.n,
            "L": repr(float(item.line.L)),
        }

    def values_of(self, item: PhasePlane) -> np.ndarray:
        return item.values

    def shape_from(self, tokens: dict[str, str], path: str) -> tuple[int, ...]:
        if tokens.get("GRID") != CONTINUUM_GRID:
            raise ParseError("header needs GRID=continuum", path=path, line=1)
        n = self.int_token(tokens, "n", path)
        if self.int_token(tokens, "N", path) != n:
            raise ParseError("N= and n= disagree", path=path, line=1)
        return n, n

    def build(self, tokens: dict[str, str], values: np.ndarray, path: str) -> PhasePlane:
        line = SampledLine(
            n=self.int_token(tokens, "n", path), L=self.float_token(tokens, "L", path)
        )
        return PhasePlane(values=values, line=line)
