import typing as t

from loguru import logger

from ..models import GroupParams
from ..schemas import CheckResult, CheckSummary
from ..utils.rng import child_generator
from .base_service import BaseService
from .finite_checks import FINITE_CHECKS, FiniteCheck


class VerifyService(BaseService):
    """Runs every finite-model identity check over ``n_list``, in declared order."""

    def run(self, only: t.Sequence[str] | None = None) -> CheckSummary:
        checks = [c for c in FINITE_CHECKS if not only or c.name in only]
        logger.info(
            f"verify: {len(checks)} checks, N in {self.config.n_list}, "
            f"ensemble {self.config.ensemble_size}, seed {self.config.seed}"
        )
        results = [self.run_check(c) for c in checks]
        return CheckSummary(command="verify", seed=self.config.seed, results=results)

    def run_check(self, check: FiniteCheck) -> CheckResult:
        index = FINITE_CHECKS.index(check)

        def measure() -> tuple[float, dict[str, t.Any]]:
            per_n: dict[str, float] = {}
            for n in self.config.n_list:
                rng = child_generator(self.config.seed, n, index)
                per_n[str(n)] = check.run(GroupParams(N=n), rng, self.config.ensemble_size)
            return max(per_n.values()), {"per_N": per_n}

        return self.thresholded(check.name, check.tolerance, measure)
