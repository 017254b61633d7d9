import time
import typing as t

from loguru import logger

from ..repositories import ReportRepository
from ..schemas import CheckResult, SuiteConfig


class BaseService:
    def __init__(self, config: SuiteConfig | None = None):
        self._config: SuiteConfig = config or SuiteConfig()
        self._reports = ReportRepository(self._config.output_dir)

    @property
    def config(self) -> SuiteConfig:
        return self._config

    def save(self, report, name: str):
        return self._reports.save_json(report, name)

    def save_heatmap(self, data, name: str):
        return self._reports.save_heatmap(data, name)

    def tolerance(self, name: str, default: float) -> float:
        return self._config.tolerance(name, default)

    def thresholded(
        self,
        name: str,
        default_tol: float,
        measure: t.Callable[[], tuple[float, dict[str, t.Any]]],
    ) -> CheckResult:
        """Time ``measure`` and compare its value against the configured tolerance."""
        threshold = self.tolerance(name, default_tol)
        start = time.perf_counter()
        measured, detail = measure()
        runtime = time.perf_counter() - start
        result = CheckResult.thresholded(
            name, measured, threshold, runtime=runtime, detail=detail
        )
        log = logger.info if result.status == "pass" else logger.error
        log(f"{name}: {result.status} ({measured:.3e} <= {threshold:.1e}) in {runtime:.2f}s")
        return result

    def report_only(
        self, name: str, measure: t.Callable[[], tuple[float, dict[str, t.Any]]]
    ) -> CheckResult:
        start = time.perf_counter()
        measured, detail = measure()
        runtime = time.perf_counter() - start
        logger.info(f"{name}: report-only {measured:.6g} in {runtime:.2f}s")
        return CheckResult.report_only(name, measured, runtime=runtime, detail=detail)
