"""Signals on Z_N, time-frequency shifts, parity, alpha_z, traces and Schatten norms."""

import typing as t

import numpy as np
from scipy import linalg

from ..core.config import settings
from ..core.exceptions import InvalidExponentError
from ..models import GroupParams, OperatorMatrix, PhasePoint, Signal, same_params
from ..schemas import SchattenReport
from .phase_space import residues, unit_root

# pi(z)-check = PARITY_SHIFT_PHASE * pi(-z); fixed by brute force, see tests
PARITY_SHIFT_PHASE: complex = 1.0 + 0.0j


def translate_signal(psi: Signal, x: int) -> Signal:
    return psi.with_values(np.roll(psi.values, x))


def modulate_signal(psi: Signal, omega: int) -> Signal:
    """(M_omega psi)(t) = exp(2 pi i omega t / N) psi(t)."""
    t_ = residues(psi.params)
    return psi.with_values(unit_root(psi.params, omega * t_) * psi.values)


def tf_shift_array(params: GroupParams, x: int, omega: int) -> np.ndarray:
    n = params.N
    rows = (np.arange(n) + x) % n
    out = np.zeros((n, n), dtype=complex)
    out[rows, np.arange(n)] = unit_root(params, omega * rows)
    return out


def tf_shift_matrix(z: PhasePoint) -> OperatorMatrix:
    """pi(z) = M_omega T_x as a unitary matrix."""
    return OperatorMatrix(entries=tf_shift_array(z.params, z.x, z.omega), params=z.params)


def parity_signal(psi: Signal) -> Signal:
    return psi.with_values(np.roll(psi.values[::-1], 1))


def parity_array(a: np.ndarray) -> np.ndarray:
    """P A P, i.e. ``out[i, j] = a[-i, -j]``."""
    return np.roll(a[::-1, ::-1], 1, axis=(0, 1))


def parity_conjugate(A: OperatorMatrix) -> OperatorMatrix:
    return A.with_entries(parity_array(A.entries))


def alpha_array(a: np.ndarray, params: GroupParams, x: int, omega: int) -> np.ndarray:
    """pi(z) A pi(z)^*: ``out[r, c] = exp(2 pi i omega (r - c) / N) a[r - x, c - x]``."""
    t_ = residues(params)
    phase = unit_root(params, omega * (t_[:, None] - t_[None, :]))
    return phase * np.roll(a, (x, x), axis=(0, 1))


def alpha_shift(A: OperatorMatrix, z: PhasePoint) -> OperatorMatrix:
    same_params(A, z)
    return A.with_entries(alpha_array(A.entries, A.params, z.x, z.omega))


def rank_one(xi: Signal, eta: Signal) -> OperatorMatrix:
    """xi (x) eta: zeta -> <zeta, eta> xi."""
    params = same_params(xi, eta)
    return OperatorMatrix(entries=np.outer(xi.values, eta.values.conj()), params=params)


def trace(A: OperatorMatrix) -> complex:
    return complex(np.trace(A.entries))


def hs_inner(A: OperatorMatrix, B: OperatorMatrix) -> complex:
    same_params(A, B)
    return complex(np.vdot(B.entries, A.entries))


def singular_values(a: np.ndarray) -> np.ndarray:
    return linalg.svd(a, compute_uv=False)


def schatten_from_singular_values(s: np.ndarray, p: float) -> float:
    if not p >= 1:
        raise InvalidExponentError(f"Schatten exponent must be in [1, inf], got {p}")
    if s.size == 0:
        return 0.0
    if np.isinf(p):
        return float(s.max())
    return float(np.sum(s**p) ** (1.0 / p))


def schatten_norm(A: OperatorMatrix | np.ndarray, p: float) -> float:
    a = A.entries if isinstance(A, OperatorMatrix) else A
    return schatten_from_singular_values(singular_values(a), p)


def p_label(p: float) -> str:
    """Stable key for an exponent: '1', '2', 'inf', '1.3333333333333333'."""
    if np.isinf(p):
        return "inf"
    if float(p).is_integer():
        return str(int(p))
    return repr(float(p))


def schatten_report(A: OperatorMatrix, ps: t.Iterable[float]) -> SchattenReport:
    ps = list(ps)
    for p in ps:
        if not p >= 1:
            raise InvalidExponentError(f"Schatten exponent must be in [1, inf], got {p}")
    s = singular_values(A.entries)
    return SchattenReport(
        N=A.N,
        singular_values=s.tolist(),
        norms={p_label(p): schatten_from_singular_values(s, p) for p in ps},
    )


def numerical_rank(a: np.ndarray, rtol: float | None = None) -> int:
    """Number of singular values above ``rtol * s_max`` (zero for a zero matrix)."""
    rtol = settings.RANK_RTOL if rtol is None else rtol
    s = singular_values(a)
    if s.size == 0 or s[0] == 0.0:
        return 0
    return int(np.count_nonzero(s > rtol * s[0]))
