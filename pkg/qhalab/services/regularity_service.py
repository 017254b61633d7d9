import numpy as np
from loguru import logger

from ..core.config import settings
from ..harmonic import tauberian as tb
from ..harmonic.transforms import ambiguity
from ..models import GroupParams, OperatorMatrix, PhaseFunction, Signal
from ..repositories import OperatorRepository, SignalRepository
from ..schemas import PointSchema, RegularityReport, SpectrumReport, SuiteConfig
from ..utils.rng import child_generator, random_signal
from .base_service import BaseService


class RegularityService(BaseService):
    """Tauberian diagnostics for an operator file or a window pair."""

    def __init__(self, config: SuiteConfig | None = None):
        super().__init__(config)
        self._operators = OperatorRepository()
        self._signals = SignalRepository()

    def tolerance_or_default(self, tol: float | None) -> float:
        return self.tolerance("zero_set", settings.ZERO_SET_RTOL) if tol is None else tol

    def for_operator(self, path, tol: float | None = None) -> RegularityReport:
        S = self._operators.load(path)
        report = tb.regularity_report(S, self.tolerance_or_default(tol))
        logger.info(
            f"regularity N={report.N}: |zero set| {len(report.zero_set)}, "
            f"translate rank {report.translate_rank}, regular {report.regular}"
        )
        return report

    def windows(
        self, phi1_path=None, phi2_path=None, random_n: int | None = None
    ) -> tuple[Signal, Signal]:
        if random_n is not None:
            params = GroupParams(N=random_n)
            rng = child_generator(self.config.seed, random_n)
            return random_signal(params, rng), random_signal(params, rng)
        return self._signals.load(phi1_path), self._signals.load(phi2_path)

    def for_windows(
        self, phi1: Signal, phi2: Signal, tol: float | None = None
    ) -> tuple[RegularityReport, PhaseFunction]:
        """Density report for phi2 (x) phi1 and |A(phi2, phi1)| for plotting."""
        report = tb.localization_density_check(phi1, phi2, self.tolerance_or_default(tol))
        amb = ambiguity(phi2, phi1)
        logger.info(
            f"window pair N={report.N}: density {report.regular}, "
            f"zero set {len(report.zero_set)}, ambiguity agrees {report.ambiguity_zero_set_agrees}"
        )
        return report, amb.with_values(np.abs(amb.values))

    def spectrum(self, path, tol: float | None = None) -> SpectrumReport:
        S: OperatorMatrix = self._operators.load(path)
        tol = self.tolerance_or_default(tol)
        points = tb.arveson_spectrum(S, tol)
        return SpectrumReport(
            N=S.N,
            tol=tol,
            support=[PointSchema(x=z.x, omega=z.omega) for z in points],
            size=len(points),
        )
