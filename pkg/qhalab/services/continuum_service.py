import pathlib
import typing as t

import numpy as np
from loguru import logger

from ..harmonic import continuum as ct
from ..models import ContinuumSignal, PhasePlane, SampledLine
from ..repositories import PhasePlaneRepository
from ..schemas import CheckResult, CheckSummary, SuiteConfig
from ..utils.rng import child_generator
from .base_service import BaseService

LIEB_EXPONENTS = (2.0, 3.0, 4.0, 6.0)
REFINEMENT_NS = (128, 256, 512)
# phase-plane modulation norms cost O(n^4 log n); keep those ensembles small
MODULATION_ENSEMBLE = 4
HERMITE_ORDERS = 6

Measure = tuple[float, dict[str, t.Any]]


class ContinuumService(BaseService):
    """Sampled-line checks; thresholded where the statement is sharp, report-only otherwise."""

    def __init__(self, config: SuiteConfig | None = None):
        super().__init__(config)
        self._planes = PhasePlaneRepository()

    @property
    def line(self) -> SampledLine:
        return SampledLine(n=self.config.continuum_n, L=self.config.continuum_L)

    def rng(self, key: int) -> np.random.Generator:
        return child_generator(self.config.seed, key)

    def run(self) -> CheckSummary:
        logger.info(f"continuum: n={self.line.n}, L={self.line.L}, seed {self.config.seed}")
        results: list[CheckResult] = [
            self.thresholded("gaussian_norm", 1e-10, self.gaussian_norm),
            self.thresholded("stft_moyal", 1e-8, self.stft_moyal),
            self.thresholded("gaussian_stft_modulus", 1e-8, self.gaussian_stft_modulus),
            self.thresholded(
                "gaussian_fourier_wigner_derived_form", 1e-6, self.gaussian_fourier_wigner
            ),
            self.report_only(
                "gaussian_fourier_wigner_printed_form_deviation", self.gaussian_printed
            ),
            self.thresholded("lieb_gaussian", 1e-6, self.lieb_gaussian),
            self.thresholded("lieb_random", 1e-6, self.lieb_random),
            self.thresholded("lieb_traceclass", 1e-6, self.lieb_traceclass),
            self.thresholded("hausdorff_young_continuum", 1e-6, self.hausdorff_young),
            self.thresholded("modulation_l2", 1e-8, self.modulation_l2),
            self.thresholded("modulation_homogeneity", 1e-12, self.modulation_homogeneity),
            self.report_only("riemann_lebesgue", self.riemann_lebesgue),
            self.report_only("refinement", self.refinement),
            self.report_only("locop_modspace_ratio", self.locop_modspace),
            self.report_only("feichtinger_ratio", self.feichtinger),
        ]
        return CheckSummary(command="continuum", seed=self.config.seed, results=results)

    def gaussian_planes(self) -> dict[str, PhasePlane]:
        phi = ct.gaussian_signal(self.line)
        return {
            "stft_gaussian": ct.continuum_stft(phi, phi),
            "fourier_wigner_gaussian": ct.continuum_ambiguity(phi, phi),
        }

    def save_plane(self, plane: PhasePlane, name: str) -> pathlib.Path:
        return self._planes.save(plane, self._reports.path(name))

    # inputs

    def random_signals(self, key: int, count: int) -> list[ContinuumSignal]:
        rng = self.rng(key)
        return [ct.random_smooth_signal(self.line, rng) for _ in range(count)]

    def hermite_components(self, rng: np.random.Generator) -> list[ct.Component]:
        rank = int(rng.integers(1, 4))
        left = rng.choice(HERMITE_ORDERS, size=rank, replace=False)
        right = rng.choice(HERMITE_ORDERS, size=rank, replace=False)
        weights = rng.standard_normal(rank) + 1j * rng.standard_normal(rank)
        return [
            (complex(w), ct.hermite_signal(self.line, int(j)), ct.hermite_signal(self.line, int(k)))
            for w, j, k in zip(weights, left, right)
        ]

    # thresholded

    def gaussian_norm(self) -> Measure:
        phi = ct.gaussian_signal(self.line)
        return abs(phi.norm() ** 2 - 1.0), {"norm": phi.norm()}

    def stft_moyal(self) -> Measure:
        pairs = [(ct.gaussian_signal(self.line), ct.gaussian_signal(self.line))]
        signals = self.random_signals(1, 2 * self.config.ensemble_size)
        pairs += list(zip(signals[::2], signals[1::2]))
        worst = 0.0
        for psi, phi in pairs:
            v = ct.continuum_stft(psi, phi)
            energy = ct.plane_lp_norm(v, 2) ** 2
            expected = (psi.norm() * phi.norm()) ** 2
            worst = max(worst, abs(energy - expected) / expected)
        return worst, {"pairs": len(pairs)}

    def gaussian_stft_modulus(self) -> Measure:
        phi = ct.gaussian_signal(self.line)
        v = ct.continuum_stft(phi, phi)
        x, w = v.mesh()
        disc = x**2 + w**2 <= ct.CHECK_RADIUS**2
        modulus = np.abs(v.values[disc]) ** 2
        closed = np.exp(-np.pi * (x[disc] ** 2 + w[disc] ** 2))
        origin = v.values[self.line.n // 2, self.line.n // 2]
        err = max(float(np.abs(modulus - closed).max()), abs(origin - phi.norm() ** 2))
        return err, {}

    def gaussian_fourier_wigner(self) -> Measure:
        return ct.gaussian_fw_check(self.line), {
            "radius": ct.CHECK_RADIUS,
            "reference": "exp(-pi |z|^2 / 2)",
        }

    def lieb_gaussian(self) -> Measure:
        phi = ct.gaussian_signal(self.line)
        ratios = {str(p): ct.lieb_ratio(phi, phi, p) for p in LIEB_EXPONENTS}
        return max(abs(r - 1.0) for r in ratios.values()), {"ratios": ratios}

    def lieb_random(self) -> Measure:
        signals = self.random_signals(2, 2 * self.config.ensemble_size)
        worst = -np.inf
        for psi, phi in zip(signals[::2], signals[1::2]):
            for p in LIEB_EXPONENTS:
                worst = max(worst, ct.lieb_ratio(psi, phi, p) - 1.0)
        return float(worst), {"pairs": len(signals) // 2}

    def lieb_traceclass(self) -> Measure:
        phi = ct.gaussian_signal(self.line)
        gaussian = [(1.0 + 0.0j, phi, phi)]
        equality = max(abs(ct.lieb_traceclass_ratio(gaussian, q) - 1.0) for q in (3.0, 4.0))
        rng = self.rng(3)
        worst = -np.inf
        for _ in range(self.config.ensemble_size):
            components = self.hermite_components(rng)
            for q in (2.0, 3.0, 4.0):
                worst = max(worst, ct.lieb_traceclass_ratio(components, q) - 1.0)
        return max(equality, float(worst)), {"gaussian_equality": equality, "ensemble": float(worst)}

    def hausdorff_young(self) -> Measure:
        rng = self.rng(4)
        worst = -np.inf
        for _ in range(self.config.ensemble_size):
            components = self.hermite_components(rng)
            for p, q in ((1.0, np.inf), (2.0, 2.0)):
                worst = max(worst, ct.hausdorff_young_spot_check(components, p, q) - 1.0)
        return float(worst), {}

    def modulation_l2(self) -> Measure:
        signals = [ct.gaussian_signal(self.line), *self.random_signals(5, self.config.ensemble_size)]
        worst = max(abs(ct.modulation_norm(s, 2, 2) - s.norm()) / s.norm() for s in signals)
        return worst, {}

    def modulation_homogeneity(self) -> Measure:
        (psi,) = self.random_signals(6, 1)
        c = 2.5 - 1.5j
        base = ct.modulation_norm(psi, 1, 1)
        scaled = ct.modulation_norm(psi * c, 1, 1)
        return abs(scaled - abs(c) * base) / (abs(c) * base), {"norm": base}

    # report-only

    def gaussian_printed(self) -> Measure:
        return ct.gaussian_fw_check(self.line, printed=True), {
            "note": "deviation from exp(2 pi i x omega) exp(-pi |z|^2 / 2)"
        }

    def riemann_lebesgue(self) -> Measure:
        phi = ct.gaussian_signal(self.line)
        components = [
            (1.0 + 0.0j, phi, phi),
            (0.5 + 0.0j, ct.hermite_signal(self.line, 1), ct.hermite_signal(self.line, 2)),
        ]
        profile = ct.riemann_lebesgue_profile(components)
        increase = max(b - a for a, b in zip(profile, profile[1:]))
        return increase, {"radii": [2.0, 3.0, 4.0], "max_modulus": profile}

    def refinement(self) -> Measure:
        study = ct.refinement_study(REFINEMENT_NS, self.line.L)
        errors = [err for _, err in study]
        return errors[-1], {
            "n": [n for n, _ in study],
            "errors": errors,
            "monotone": ct.refinement_monotone(errors),
        }

    def locop_modspace(self) -> Measure:
        line = ct.modulation_line()
        g = ct.gaussian_signal(line)
        k = ct.rank_one_kernel(g, g)
        rng = self.rng(7)
        ratios: list[float] = []
        drift = 0.0
        x, w = np.meshgrid(line.points, line.reciprocal().points, indexing="ij")
        for _ in range(min(MODULATION_ENSEMBLE, self.config.ensemble_size)):
            width = rng.uniform(1.5, 2.5)
            x0, w0 = rng.uniform(-0.5, 0.5, size=2)
            f = PhasePlane(
                values=np.exp(-np.pi * ((x - x0) ** 2 + (w - w0) ** 2) / width**2), line=line
            )
            for p in (1.0, 2.0):
                ratios.append(ct.locop_modspace_ratio(f, k, p))
            scaled = ct.locop_modspace_ratio(f.with_values(3.0 * f.values), k, 2.0)
            drift = max(drift, abs(scaled - ratios[-1]) / ratios[-1])
        return max(ratios), {"min": min(ratios), "max": max(ratios), "homogeneity_drift": drift}

    def feichtinger(self) -> Measure:
        line = ct.modulation_line()
        g = ct.gaussian_signal(line)
        k = ct.rank_one_kernel(g, g)
        ratios = []
        for order in range(min(MODULATION_ENSEMBLE, self.config.ensemble_size)):
            h = ct.hermite_signal(line, order)
            ratios.append(ct.feichtinger_ratio(ct.rank_one_kernel(h, h), k))
        return max(ratios), {"min": min(ratios), "max": max(ratios)}
