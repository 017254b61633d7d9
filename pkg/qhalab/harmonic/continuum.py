"""Sampled-line (d = 1) versions of the statements that only make sense on R.

Conventions. A SampledLine has points t_k = -L + k*delta. The frequency line
is ``line.reciprocal()``, which pairs with it under the DFT: since
L_rec * delta = 1/2,

    exp(-2 pi i omega_k t_m) = exp(2 pi i omega_k L) * (-1)^m * exp(-2 pi i k m / n),

so every continuum Fourier sum is one FFT of the (-1)^m-twisted samples and
a unimodular correction. Shifts by grid points are index shifts: t_m - x_j
is t_{m - j + n/2}. Phase-plane integrals carry the area element 1/n.
"""

import typing as t

import numpy as np
from loguru import logger
from scipy import fft, linalg, special

from ..core.config import settings
from ..core.exceptions import IncompatibleGridError, InvalidExponentError, ResourceLimitError
from ..models import ContinuumSignal, PhasePlane, SampledLine
from .operators import schatten_norm
from .transforms import diagonals

# (weight, psi, phi) for the rank-one term weight * psi (x) phi
Component = tuple[complex, ContinuumSignal, ContinuumSignal]

CHECK_RADIUS: float = 3.0


def _twist(n: int) -> np.ndarray:
    return np.where(np.arange(n) % 2 == 0, 1.0, -1.0)


def _shift_index(n: int) -> np.ndarray:
    """``idx[j, m] = (m - j + n/2) mod n``, so ``a[idx[j, m]]`` samples a(t_m - t_j)."""
    k = np.arange(n)
    return (k[None, :] - k[:, None] + n // 2) % n


def default_line() -> SampledLine:
    return SampledLine(n=settings.CONTINUUM_N, L=settings.CONTINUUM_L)


def modulation_line() -> SampledLine:
    return SampledLine(n=settings.MODULATION_N, L=settings.MODULATION_L)


def gaussian_signal(line: SampledLine) -> ContinuumSignal:
    """phi(t) = 2^{1/4} exp(-pi t^2), unit norm in L^2(R)."""
    return ContinuumSignal(
        samples=2.0**0.25 * np.exp(-np.pi * line.points**2), line=line
    )


def hermite_samples(points: np.ndarray, k: int) -> np.ndarray:
    """L^2-normalized Hermite function of order k adapted to exp(-pi t^2)."""
    if k < 0:
        raise ValueError(f"Hermite order must be nonnegative, got {k}")
    log_norm = 0.25 * np.log(2.0) - 0.5 * (k * np.log(2.0) + special.gammaln(k + 1))
    return (
        np.exp(log_norm)
        * special.eval_hermite(k, np.sqrt(2.0 * np.pi) * points)
        * np.exp(-np.pi * points**2)
    )


def hermite_signal(line: SampledLine, k: int) -> ContinuumSignal:
    return ContinuumSignal(samples=hermite_samples(line.points, k), line=line)


def random_smooth_signal(
    line: SampledLine,
    rng: np.random.Generator,
    degree: int = 6,
    spread: float = 1.0,
) -> ContinuumSignal:
    """Random complex Hermite combination of order <= degree, time-frequency
    shifted by at most ``spread`` in each coordinate."""
    shift, mod = rng.uniform(-spread, spread, size=2)
    coeffs = rng.standard_normal(degree + 1) + 1j * rng.standard_normal(degree + 1)
    t_ = line.points
    samples = sum(c * hermite_samples(t_ - shift, k) for k, c in enumerate(coeffs))
    return ContinuumSignal(samples=np.exp(2j * np.pi * mod * t_) * samples, line=line)


def continuum_stft(
    psi: ContinuumSignal, phi: ContinuumSignal, frequency: SampledLine | None = None
) -> PhasePlane:
    """V_phi psi(x_j, omega_k) = delta * sum_m psi(t_m) conj(exp(2 pi i omega_k t_m) phi(t_m - x_j)).

    x runs over the signal line, omega over its reciprocal line.
    """
    line = psi.line.require(phi.line)
    if frequency is not None and not frequency.is_reciprocal_of(line):
        raise IncompatibleGridError(
            f"frequency grid (n={frequency.n}, L={frequency.L}) is not the DFT "
            f"partner of (n={line.n}, L={line.L})"
        )
    n = line.n
    omega = line.reciprocal().points
    g = psi.samples[None, :] * phi.samples[_shift_index(n)].conj()
    raw = fft.fft(g * _twist(n)[None, :], axis=1)
    values = line.delta * np.exp(2j * np.pi * omega * line.L)[None, :] * raw
    return PhasePlane(values=values, line=line)


def continuum_ambiguity(psi: ContinuumSignal, phi: ContinuumSignal) -> PhasePlane:
    """A(psi, phi)(z) = exp(pi i x omega) V_phi psi(z)."""
    v = continuum_stft(psi, phi)
    x, w = v.mesh()
    return v.with_values(np.exp(1j * np.pi * x * w) * v.values)


def plane_lp_norm(plane: PhasePlane, p: float) -> float:
    if not p >= 1:
        raise InvalidExponentError(f"exponent must be in [1, inf], got {p}")
    a = np.abs(plane.values)
    if np.isinf(p):
        return float(a.max())
    return float((plane.cell_area * np.sum(a**p)) ** (1.0 / p))


def gaussian_fw_closed_form(plane: PhasePlane, printed: bool = False) -> np.ndarray:
    """exp(-pi |z|^2 / 2); ``printed`` adds the exp(2 pi i x omega) factor of the
    commonly quoted form."""
    x, w = plane.mesh()
    out = np.exp(-0.5 * np.pi * (x**2 + w**2)).astype(complex)
    if printed:
        out *= np.exp(2j * np.pi * x * w)
    return out


def gaussian_fw_check(
    line: SampledLine | None = None, printed: bool = False, radius: float = CHECK_RADIUS
) -> float:
    """max_{|z| <= radius} |F_W(phi (x) phi)(z) - closed form|, F_W taken as A(phi, phi)."""
    line = line or default_line()
    phi = gaussian_signal(line)
    fw = continuum_ambiguity(phi, phi)
    x, w = fw.mesh()
    disc = x**2 + w**2 <= radius**2
    err = np.abs(fw.values - gaussian_fw_closed_form(fw, printed))[disc]
    return float(err.max())


def lieb_ratio(psi: ContinuumSignal, phi: ContinuumSignal, p: float) -> float:
    """(integral |V_phi psi|^p) / ((2/p) ||phi||^p ||psi||^p); at most one."""
    if not 2.0 <= p <= 64.0:
        raise InvalidExponentError(f"Lieb exponent must lie in [2, 64], got {p}")
    v = continuum_stft(psi, phi)
    integral = v.cell_area * np.sum(np.abs(v.values) ** p)
    return float(integral / ((2.0 / p) * (phi.norm() * psi.norm()) ** p))


def _factor(components: t.Sequence[Component]) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    if not components:
        raise ValueError("finite-rank operator needs at least one component")
    line = components[0][1].line
    for _, psi, phi in components:
        line.require(psi.line)
        line.require(phi.line)
    root = np.sqrt(line.delta)
    left = root * np.stack([psi.samples for _, psi, _ in components], axis=1)
    right = root * np.stack([phi.samples for _, _, phi in components], axis=1)
    weights = np.array([w for w, _, _ in components], dtype=complex)
    return left, weights, right


def finite_rank_singular_values(components: t.Sequence[Component]) -> np.ndarray:
    """Singular values of sum_m w_m psi_m (x) phi_m on L^2(R), via thin QR of both factors."""
    left, weights, right = _factor(components)
    q_l, r_l = linalg.qr(left, mode="economic")
    q_r, r_r = linalg.qr(right, mode="economic")
    core = r_l @ np.diag(weights) @ r_r.conj().T
    return linalg.svd(core, compute_uv=False)


def finite_rank_schatten(components: t.Sequence[Component], p: float) -> float:
    if not p >= 1:
        raise InvalidExponentError(f"Schatten exponent must be in [1, inf], got {p}")
    s = finite_rank_singular_values(components)
    if np.isinf(p):
        return float(s.max())
    return float(np.sum(s**p) ** (1.0 / p))


def continuum_fourier_wigner(components: t.Sequence[Component]) -> PhasePlane:
    planes = [w * continuum_ambiguity(psi, phi).values for w, psi, phi in components]
    line = components[0][1].line
    return PhasePlane(values=np.sum(planes, axis=0), line=line)


def lieb_traceclass_ratio(components: t.Sequence[Component], q: float) -> float:
    """||F_W S||_{L^q} / ((2/q)^{1/q} ||S||_1); at most one."""
    if not q >= 2:
        raise InvalidExponentError(f"exponent must be >= 2, got {q}")
    constant = 1.0 if np.isinf(q) else (2.0 / q) ** (1.0 / q)
    fw = continuum_fourier_wigner(components)
    return plane_lp_norm(fw, q) / (constant * finite_rank_schatten(components, 1))


def hausdorff_young_spot_check(
    components: t.Sequence[Component], p: float, q: float
) -> float:
    """||F_W S||_{L^q} / ||S||_{T^p}; at most one for conjugate (p, q)."""
    fw = continuum_fourier_wigner(components)
    return plane_lp_norm(fw, q) / finite_rank_schatten(components, p)


def riemann_lebesgue_profile(
    components: t.Sequence[Component], radii: t.Sequence[float] = (2.0, 3.0, 4.0)
) -> list[float]:
    fw = continuum_fourier_wigner(components)
    x, w = fw.mesh()
    r = np.sqrt(x**2 + w**2)
    mag = np.abs(fw.values)
    return [float(mag[(r >= R) & (r < R + 1.0)].max()) for R in radii]


def _mixed_norm(a: np.ndarray, p: float, q: float, w_in: float, w_out: float) -> float:
    """Mixed L^{p,q} of a nonnegative [inner, outer] array."""
    for e in (p, q):
        if not e >= 1:
            raise InvalidExponentError(f"modulation exponents must be in [1, inf], got {e}")
    inner = a.max(axis=0) if np.isinf(p) else (w_in * np.sum(a**p, axis=0)) ** (1.0 / p)
    if np.isinf(q):
        return float(inner.max())
    return float((w_out * np.sum(inner**q)) ** (1.0 / q))


def _plane_stft_accumulate(plane: PhasePlane, p: float) -> np.ndarray:
    """Integral over positions z0 of |V_Phi F(z0, zeta)|^p (max for p = inf), per zeta.

    Phi is the normalized Gaussian on R^2; one batched 2D FFT per x0.
    """
    line, freq = plane.line, plane.frequency_line
    n = line.n
    idx = _shift_index(n)
    gx = gaussian_signal(line).samples[idx]  # [a, j] -> g(x_j - x_a)
    gw = gaussian_signal(freq).samples[idx]  # [b, k] -> g(omega_k - omega_b)
    twisted = plane.values * np.outer(_twist(n), _twist(n))
    scale = line.delta * freq.delta
    acc = np.zeros((n, n))
    for a in range(n):
        windows = gx[a][None, :, None] * gw[:, None, :]  # [b, j, k]
        mag = scale * np.abs(fft.fft2(twisted[None] * windows, axes=(1, 2)))
        if np.isinf(p):
            acc = np.maximum(acc, mag.max(axis=0))
        else:
            acc += plane.cell_area * np.sum(mag**p, axis=0)
    return acc


def modulation_norm(f: ContinuumSignal | PhasePlane, p: float, q: float) -> float:
    """M^{p,q} norm with the L^2-normalized Gaussian window.

    Phase-plane arrays are treated as functions on R^2 (window g (x) g) and
    are limited to ``settings.MODULATION_N`` points per axis.
    """
    for e in (p, q):
        if not e >= 1:
            raise InvalidExponentError(f"modulation exponents must be in [1, inf], got {e}")
    if isinstance(f, ContinuumSignal):
        v = continuum_stft(f, gaussian_signal(f.line))
        return _mixed_norm(
            np.abs(v.values), p, q, f.line.delta, v.frequency_line.delta
        )
    if f.line.n > settings.MODULATION_N:
        raise ResourceLimitError(
            f"phase-plane modulation norms are limited to n <= {settings.MODULATION_N}, "
            f"got n={f.line.n}"
        )
    acc = _plane_stft_accumulate(f, p)
    inner = acc if np.isinf(p) else acc ** (1.0 / p)
    if np.isinf(q):
        return float(inner.max())
    # reciprocal spacings multiply to 1/n as well
    return float((np.sum(inner**q) / f.line.n) ** (1.0 / q))


def _require_self_dual(line: SampledLine) -> None:
    if not line.is_reciprocal_of(line):
        raise IncompatibleGridError(
            f"kernels and phase-plane symbols share a grid only when n = 4 L^2; "
            f"got n={line.n}, L={line.L}"
        )


def kernel_operator(k: PhasePlane) -> np.ndarray:
    return k.line.delta * k.values


def function_operator_convolution(f: PhasePlane, k: PhasePlane) -> np.ndarray:
    """Matrix of f * S for the integral operator S with kernel k.

    The kernel of f * S is ``K(t, s) = integral_x k(t - x, s - x) F(x, t - s) dx``
    with F the inverse Fourier transform of f in omega, evaluated on grid
    differences t - s = d*delta, where it depends only on d mod n.
    """
    line = f.line.require(k.line)
    _require_self_dual(line)
    n = line.n
    d = np.arange(n)
    f_hat = f.frequency_line.delta * n * fft.ifft(f.values, axis=1) * _twist(n)[None, :]
    idx = _shift_index(n)
    gap = (d[:, None] - d[None, :]) % n
    kernel = np.zeros((n, n), dtype=complex)
    for j in range(n):
        shifted = k.values[idx[j][:, None], idx[j][None, :]]  # k(t_a - x_j, t_b - x_j)
        kernel += shifted * f_hat[j][gap]
    return line.delta * line.delta * kernel


def operator_operator_convolution(T: PhasePlane, k: PhasePlane) -> PhasePlane:
    """(T * S)(z) = tr(T alpha_z(S-check)) for integral operators with kernels T, k."""
    line = T.line.require(k.line)
    _require_self_dual(line)
    n = line.n
    idx = _shift_index(n)
    k_check = k.values[::-1, ::-1]
    k_check = np.roll(k_check, 1, axis=(0, 1))  # k(-t, -s) on a grid symmetric about 0
    t_mat = kernel_operator(T)
    out = np.empty((n, n), dtype=complex)
    for j in range(n):
        shifted = line.delta * k_check[idx[j][:, None], idx[j][None, :]]
        weighted = t_mat.T * shifted
        q = diagonals(weighted).sum(axis=1) * _twist(n)
        out[j] = n * fft.ifft(q)
    return PhasePlane(values=out, line=line)


def locop_modspace_ratio(f: PhasePlane, k: PhasePlane, p: float) -> float:
    """||f * S||_{T^p} / (||k||_{M^1} ||f||_{M^{p,inf}}), report-only."""
    numerator = schatten_norm(function_operator_convolution(f, k), p)
    denominator = modulation_norm(k, 1, 1) * modulation_norm(f, p, np.inf)
    ratio = numerator / denominator
    logger.debug(f"locop/modulation ratio at p={p}: {ratio:.6g}")
    return float(ratio)


def feichtinger_ratio(T: PhasePlane, k: PhasePlane) -> float:
    """||T * S||_{M^1} / (||k||_{M^1} ||T||_1), report-only."""
    numerator = modulation_norm(operator_operator_convolution(T, k), 1, 1)
    denominator = modulation_norm(k, 1, 1) * schatten_norm(kernel_operator(T), 1)
    return float(numerator / denominator)


def rank_one_kernel(psi: ContinuumSignal, phi: ContinuumSignal) -> PhasePlane:
    _require_self_dual(psi.line.require(phi.line))
    return PhasePlane(values=np.outer(psi.samples, phi.samples.conj()), line=psi.line)


def refinement_study(
    ns: t.Sequence[int] = (128, 256, 512), L: float | None = None
) -> list[tuple[int, float]]:
    L = settings.CONTINUUM_L if L is None else L
    return [(n, gaussian_fw_check(SampledLine(n=n, L=L))) for n in ns]


def refinement_monotone(errors: t.Sequence[float], slack: float = 0.1) -> bool:
    """Each refinement may not raise the error by more than ``slack`` of its prior value."""
    return all(b <= a * (1.0 + slack) for a, b in zip(errors, errors[1:]))
