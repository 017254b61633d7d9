"""Localization operators and the Berezin transform."""

import numpy as np
from scipy import fft

from ..core.exceptions import ConsistencyError
from ..models import OperatorMatrix, PhaseFunction, Signal, same_params
from .convolutions import conv_fun_op, conv_op_op
from .operators import parity_signal, rank_one
from .phase_space import residues, symplectic_fourier
from .transforms import ambiguity, diagonals, fourier_wigner, stft

TWISTED_SYMBOL_TOL: float = 1e-12


def localization_operator(f: PhaseFunction, phi1: Signal, phi2: Signal) -> OperatorMatrix:
    """A_f psi = (1/N) sum_z f(z) V_phi1 psi(z) pi(z) phi2, assembled column by column.

    For the basis delta e_k the omega-sum is an inverse DFT of f * V_phi1 e_k,
    leaving ``column[t] = sum_x phi2(t - x) ifft(c)[x, t]``.
    """
    params = same_params(f, phi1, phi2)
    n = params.N
    t_ = residues(params)
    window = phi2.values[(t_[None, :] - t_[:, None]) % n]  # [x, t] -> phi2(t - x)
    out = np.empty((n, n), dtype=complex)
    for k in range(n):
        c = f.values * stft(Signal.basis(params, k), phi1).values
        out[:, k] = np.sum(window * fft.ifft(c, axis=1), axis=0)
    return OperatorMatrix(entries=out, params=params)


def localization_by_convolution(
    f: PhaseFunction, phi1: Signal, phi2: Signal
) -> OperatorMatrix:
    """f * (phi2 (x) phi1)."""
    return conv_fun_op(f, rank_one(phi2, phi1))


def berezin_transform(T: OperatorMatrix, phi1: Signal, phi2: Signal) -> PhaseFunction:
    """B T(z) = <T pi(z) phi1, pi(z) phi2>.

    With u = T_x phi1 and v = T_x phi2 the value is
    ``sum_{t,s} conj(v[t]) T[t, s] u[s] exp(2 pi i omega (s - t) / N)``.
    """
    params = same_params(T, phi1, phi2)
    n = params.N
    out = np.empty((n, n), dtype=complex)
    for x in range(n):
        u = np.roll(phi1.values, x)
        v = np.roll(phi2.values, x)
        weighted = (v.conj()[:, None] * T.entries * u[None, :]).T  # [s, t]
        out[x] = n * fft.ifft(diagonals(weighted).sum(axis=1))
    return PhaseFunction(values=out, params=params)


def berezin_by_convolution(T: OperatorMatrix, phi1: Signal, phi2: Signal) -> PhaseFunction:
    """T * (P phi1 (x) P phi2)."""
    return conv_op_op(T, rank_one(parity_signal(phi1), parity_signal(phi2)))


def locop_twisted_symbol(
    f: PhaseFunction, phi1: Signal, phi2: Signal, tol: float = TWISTED_SYMBOL_TOL
) -> PhaseFunction:
    """F_sigma(f) * A(phi2, phi1), checked against F_W of the localization operator.

    Raises ConsistencyError when the two agree only to worse than
    ``tol * max(1, ||f||_inf ||phi1|| ||phi2||)``.
    """
    symbol = symplectic_fourier(f) * ambiguity(phi2, phi1)
    direct = fourier_wigner(localization_operator(f, phi1, phi2))
    scale = max(1.0, float(np.abs(f.values).max()) * phi1.norm() * phi2.norm())
    residual = float(np.abs(symbol.values - direct.values).max())
    if residual > tol * scale:
        raise ConsistencyError(
            f"twisted Weyl symbol residual {residual:.3e} exceeds {tol * scale:.3e}"
        )
    return symbol
