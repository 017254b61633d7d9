"""STFT, ambiguity, cross-Wigner, Fourier-Wigner, rho, twisted convolution, Weyl calculus.

Sign conventions. The continuum formulas carry e^{-pi i x.omega} in both
F_W and rho; on Z_N that phase becomes ``half_phase(z) ** sign``. Of the
four choices of (F_W sign, rho sign) only (-1, -1) makes rho the inverse of
F_W *and* multiplicative for the twisted convolution; ``phase_convention_oracle``
re-derives this at N = 3 and the constants below pin the result.
"""

import itertools

import numpy as np
from loguru import logger
from scipy import fft

from ..models import (
    GroupParams,
    OperatorMatrix,
    PhaseFunction,
    Signal,
    same_params,
)
from .operators import tf_shift_array
from .phase_space import half_phase_grid, residues, symplectic_fourier, unit_root

FW_PHASE_SIGN: int = -1
RHO_PHASE_SIGN: int = -1


def stft(psi: Signal, phi: Signal) -> PhaseFunction:
    """V_phi psi(x, omega) = <psi, pi(x, omega) phi>, one length-N DFT per shift x."""
    params = same_params(psi, phi)
    t_ = residues(params)
    shifted = phi.values[(t_[None, :] - t_[:, None]) % params.N]  # [x, t] -> phi(t - x)
    return PhaseFunction(
        values=fft.fft(psi.values[None, :] * shifted.conj(), axis=1), params=params
    )


def ambiguity(psi: Signal, phi: Signal) -> PhaseFunction:
    """A(psi, phi)(z) = half_phase(z) * V_phi psi(z)."""
    v = stft(psi, phi)
    return v.with_values(half_phase_grid(v.params) * v.values)


def cross_wigner(psi: Signal, phi: Signal) -> PhaseFunction:
    """W(psi, phi) = F_sigma A(psi, phi)."""
    return symplectic_fourier(ambiguity(psi, phi))


def diagonals(a: np.ndarray) -> np.ndarray:
    """``d[x, t] = a[t + x, t]``: the x-th cyclic subdiagonal of ``a``."""
    n = a.shape[0]
    t_ = np.arange(n)
    return a[(t_[None, :] + t_[:, None]) % n, t_[None, :]]


def from_diagonals(d: np.ndarray) -> np.ndarray:
    n = d.shape[0]
    t_ = np.arange(n)
    out = np.empty_like(d)
    out[(t_[None, :] + t_[:, None]) % n, t_[None, :]] = d
    return out


def fourier_wigner_array(
    a: np.ndarray, params: GroupParams, sign: int = FW_PHASE_SIGN
) -> np.ndarray:
    # tr(pi(-z) S) = sum_t exp(-2 pi i omega t / N) S[t + x, t]
    traces = fft.fft(diagonals(a), axis=1)
    return half_phase_grid(params, sign) * traces


def fourier_wigner(S: OperatorMatrix) -> PhaseFunction:
    """F_W S(z) = conj(half_phase(z)) * tr(pi(-z) S)."""
    return PhaseFunction(values=fourier_wigner_array(S.entries, S.params), params=S.params)


def rho_array(f: np.ndarray, params: GroupParams) -> np.ndarray:
    traces = half_phase_grid(params, -FW_PHASE_SIGN) * f
    return from_diagonals(fft.ifft(traces, axis=1))


def rho(f: PhaseFunction) -> OperatorMatrix:
    """Integrated Schroedinger representation, defined as the inverse of F_W."""
    return OperatorMatrix(entries=rho_array(f.values, f.params), params=f.params)


def rho_superposition(f: PhaseFunction, sign: int = RHO_PHASE_SIGN) -> OperatorMatrix:
    """(1/N) sum_z f(z) half_phase(z)**sign pi(z), summed term by term."""
    params = f.params
    weights = half_phase_grid(params, sign) * f.values / params.N
    out = np.zeros((params.N, params.N), dtype=complex)
    for x in range(params.N):
        for w in range(params.N):
            if weights[x, w] != 0:
                out += weights[x, w] * tf_shift_array(params, x, w)
    return OperatorMatrix(entries=out, params=params)


def twisted_convolution(f: PhaseFunction, g: PhaseFunction) -> PhaseFunction:
    """(f # g)(z) = (1/N) sum_z' f(z - z') g(z') exp(2 pi i h sigma(z, z') / N).

    Summed over x' with an FFT convolution in the omega coordinate:
    sigma(z, z') = omega x' - omega' x splits into a factor in omega and one
    in (omega', x).
    """
    params = same_params(f, g)
    n, h = params.N, params.half
    t_ = residues(params)
    out = np.zeros((n, n), dtype=complex)
    for xp in range(n):
        head = np.roll(f.values, xp, axis=0)  # [x, .] -> f(x - x', .)
        tail = g.values[xp][None, :] * unit_root(params, -h * np.outer(t_, t_))  # [x, omega']
        conv = fft.ifft(fft.fft(head, axis=1) * fft.fft(tail, axis=1), axis=1)
        out += unit_root(params, h * t_ * xp)[None, :] * conv
    return PhaseFunction(values=out / n, params=params)


def weyl_transform(f: PhaseFunction) -> OperatorMatrix:
    """L_f = rho(F_sigma f)."""
    return rho(symplectic_fourier(f))


def weyl_symbol(A: OperatorMatrix) -> PhaseFunction:
    """F_sigma(F_W A), the left inverse of :func:`weyl_transform`."""
    return symplectic_fourier(fourier_wigner(A))


def phase_convention_oracle(
    N: int = 3, seed: int = 0, tol: float = 1e-13
) -> list[tuple[int, int]]:
    """Conventions (F_W sign, rho sign) with F_W o rho = id and rho(f # g) = rho(f) rho(g).

    Brute force on random f, g at modulus N using the explicit superposition
    for rho and the explicit trace formula for F_W.
    """
    params = GroupParams(N=N)
    rng = np.random.default_rng(seed)

    def random_function() -> PhaseFunction:
        values = rng.standard_normal((N, N)) + 1j * rng.standard_normal((N, N))
        return PhaseFunction(values=values, params=params)

    f, g = random_function(), random_function()
    fg = twisted_convolution(f, g)
    winners = []
    for fw_sign, rho_sign in itertools.product((1, -1), (1, -1)):
        rho_f = rho_superposition(f, rho_sign).entries
        roundtrip = fourier_wigner_array(rho_f, params, fw_sign)
        inverse_error = np.max(np.abs(roundtrip - f.values))
        product = rho_f @ rho_superposition(g, rho_sign).entries
        product_error = np.max(np.abs(rho_superposition(fg, rho_sign).entries - product))
        logger.debug(
            f"convention F_W={fw_sign:+d} rho={rho_sign:+d}: "
            f"inverse {inverse_error:.2e}, product {product_error:.2e}"
        )
        if inverse_error < tol and product_error < tol:
            winners.append((fw_sign, rho_sign))
    return winners
