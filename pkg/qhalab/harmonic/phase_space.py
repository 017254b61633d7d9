"""Finite phase space Z_N x Z_N: symplectic form, half-phases, F_sigma.

The measure on phase space is nu = (1/N) * counting, so nu(Z_N x Z_N) = N and
Moyal's identity, Werner's trace lemma and unitarity of F_W hold with
constant one. Signals on Z_N use plain counting measure.
"""

import numpy as np
from scipy import fft

from ..core.exceptions import InvalidExponentError
from ..models import GroupParams, PhaseFunction, PhasePoint, same_params


def residues(params: GroupParams) -> np.ndarray:
    return np.arange(params.N)


def unit_root(params: GroupParams, exponent: np.ndarray | int) -> np.ndarray:
    """exp(2 pi i k / N), reducing k mod N first so phases are exact."""
    k = np.mod(exponent, params.N)
    return np.exp(2j * np.pi * k / params.N)


def symplectic_form(z: PhasePoint, zp: PhasePoint) -> int:
    """sigma(z, z') = omega*x' - omega'*x (mod N)."""
    params = same_params(z, zp)
    return (z.omega * zp.x - zp.omega * z.x) % params.N


def symplectic_grid(z: PhasePoint) -> np.ndarray:
    t = residues(z.params)
    return np.mod(z.omega * t[:, None] - t[None, :] * z.x, z.params.N)


def half_phase(z: PhasePoint) -> complex:
    """Discrete e^{pi i x omega}: exp(2 pi i * h * x * omega / N) with h = 2^{-1} mod N."""
    return complex(unit_root(z.params, z.params.half * z.x * z.omega))


def half_phase_grid(params: GroupParams, sign: int = 1) -> np.ndarray:
    t = residues(params)
    return unit_root(params, sign * params.half * np.outer(t, t))


def symplectic_fourier(f: PhaseFunction) -> PhaseFunction:
    """(F_sigma f)(z) = (1/N) sum_z' f(z') exp(-2 pi i sigma(z, z') / N).

    A forward DFT in x' (frequency omega) followed by an inverse DFT in
    omega' (frequency x); the 1/N of ``ifft`` is the measure weight.
    """
    out = fft.ifft(fft.fft(f.values, axis=0), axis=1)
    return f.with_values(out.T)


def phase_translate(f: PhaseFunction, z: PhasePoint) -> PhaseFunction:
    """(T_z f)(z') = f(z' - z)."""
    same_params(f, z)
    return f.with_values(np.roll(f.values, (z.x, z.omega), axis=(0, 1)))


def phase_integral(f: PhaseFunction) -> complex:
    return complex(f.values.sum() / f.N)


def function_convolution(f: PhaseFunction, g: PhaseFunction) -> PhaseFunction:
    """(f * g)(z) = (1/N) sum_z' f(z - z') g(z'), circular in both coordinates."""
    params = same_params(f, g)
    out = fft.ifft2(fft.fft2(f.values) * fft.fft2(g.values))
    return f.with_values(out / params.N)


def lp_norm(f: PhaseFunction, p: float) -> float:
    """L^p(nu) norm; p = inf is the max modulus."""
    if not p >= 1:
        raise InvalidExponentError(f"exponent must be in [1, inf], got {p}")
    a = np.abs(f.values)
    if np.isinf(p):
        return float(a.max())
    return float((np.sum(a**p) / f.N) ** (1.0 / p))


def l2_inner(f: PhaseFunction, g: PhaseFunction) -> complex:
    """<f, g> in L^2(nu), antilinear in g."""
    same_params(f, g)
    return complex(np.vdot(g.values, f.values) / f.N)


def all_points(params: GroupParams) -> list[PhasePoint]:
    return [
        PhasePoint(x=x, omega=w, params=params)
        for x in range(params.N)
        for w in range(params.N)
    ]


def points_where(mask: np.ndarray, params: GroupParams) -> list[PhasePoint]:
    xs, ws = np.nonzero(mask)
    return [PhasePoint(x=int(x), omega=int(w), params=params) for x, w in zip(xs, ws)]
