import typing as t

import numpy as np
from loguru import logger

from ..harmonic import localization as loc
from ..harmonic import operators as ops
from ..harmonic.phase_space import lp_norm
from ..harmonic.transforms import fourier_wigner
from ..models import OperatorMatrix, PhaseFunction, same_params
from ..repositories import (
    OperatorRepository,
    PhaseFunctionRepository,
    SignalRepository,
)
from ..schemas import BerezinReport, LocalizationReport, SuiteConfig
from .base_service import BaseService

DEFAULT_PS = (1.0, 2.0, np.inf)


class LocalizationService(BaseService):
    def __init__(self, config: SuiteConfig | None = None):
        super().__init__(config)
        self._functions = PhaseFunctionRepository()
        self._operators = OperatorRepository()
        self._signals = SignalRepository()

    def localize(
        self, symbol_path, phi1_path, phi2_path, ps: t.Sequence[float] = DEFAULT_PS
    ) -> tuple[OperatorMatrix, LocalizationReport]:
        f = self._functions.load(symbol_path)
        phi1, phi2 = self._signals.load(phi1_path), self._signals.load(phi2_path)
        params = same_params(f, phi1, phi2)

        A = loc.localization_operator(f, phi1, phi2)
        residual = float(
            np.abs(A.entries - loc.localization_by_convolution(f, phi1, phi2).entries).max()
        )
        symbol = loc.locop_twisted_symbol(
            f, phi1, phi2, tol=self.tolerance("twisted_symbol", loc.TWISTED_SYMBOL_TOL)
        )
        symbol_residual = float(np.abs(symbol.values - fourier_wigner(A).values).max())
        windows = phi1.norm() * phi2.norm()
        ratios = {}
        for p in ps:
            denom = lp_norm(f, p) * windows
            ratios[ops.p_label(p)] = ops.schatten_norm(A, p) / denom if denom else 0.0
        report = LocalizationReport(
            N=params.N,
            schatten=ops.schatten_report(A, ps),
            convolution_residual=residual,
            twisted_symbol_residual=symbol_residual,
            bound_ratios=ratios,
        )
        logger.info(f"localize N={params.N}: convolution residual {residual:.3e}")
        return A, report

    def berezin(
        self, operator_path, phi1_path, phi2_path, ps: t.Sequence[float] = DEFAULT_PS
    ) -> tuple[PhaseFunction, BerezinReport]:
        T = self._operators.load(operator_path)
        phi1, phi2 = self._signals.load(phi1_path), self._signals.load(phi2_path)
        params = same_params(T, phi1, phi2)

        B = loc.berezin_transform(T, phi1, phi2)
        residual = float(
            np.abs(B.values - loc.berezin_by_convolution(T, phi1, phi2).values).max()
        )
        windows = phi1.norm() * phi2.norm()
        ratios = {}
        for p in ps:
            denom = ops.schatten_norm(T, p) * windows
            ratios[ops.p_label(p)] = lp_norm(B, p) / denom if denom else 0.0
        logger.info(f"berezin N={params.N}: convolution residual {residual:.3e}")
        return B, BerezinReport(N=params.N, convolution_residual=residual, bound_ratios=ratios)

    def save_operator(self, A: OperatorMatrix, name: str):
        return self._operators.save(A, self._reports.path(name))

    def save_function(self, f: PhaseFunction, name: str):
        return self._functions.save(f, self._reports.path(name))
