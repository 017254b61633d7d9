"""Werner convolutions f * S and S * T, and the maps A_S, B_S as explicit matrices.

Vectorization is row-major everywhere: phase functions on (x, omega),
operators on (row, col). Column or row ``k`` of a convolution map belongs to
the phase point ``(k // N, k % N)``.
"""

import typing as t

import numpy as np
from scipy import fft

from ..core.config import settings
from ..core.exceptions import ResourceLimitError
from ..models import ConvMapMatrix, GroupParams, OperatorMatrix, PhaseFunction, same_params
from .operators import alpha_array, parity_array, schatten_norm
from .phase_space import lp_norm, residues
from .transforms import diagonals

MapKind = t.Literal["A", "B"]


def conv_fun_op(f: PhaseFunction, S: OperatorMatrix) -> OperatorMatrix:
    """f * S = (1/N) sum_z f(z) alpha_z(S).

    Summing over omega first leaves a DFT of f along omega evaluated at
    row - col, so ``out[a, b] = sum_x S[a - x, b - x] * ifft(f)[x, a - b]``.
    """
    params = same_params(f, S)
    n = params.N
    t_ = residues(params)
    fhat = fft.ifft(f.values, axis=1)
    gap = (t_[:, None] - t_[None, :]) % n
    out = np.zeros((n, n), dtype=complex)
    for x in range(n):
        out += np.roll(S.entries, (x, x), axis=(0, 1)) * fhat[x][gap]
    return S.with_entries(out)


def conv_op_op(S: OperatorMatrix, T: OperatorMatrix) -> PhaseFunction:
    """(S * T)(z) = tr(S alpha_z(T-check)).

    For fixed x the trace is a sum over diagonals d = row - col weighted by
    exp(2 pi i omega d / N), i.e. an inverse DFT in d.
    """
    params = same_params(S, T)
    n = params.N
    t_check = parity_array(T.entries)
    out = np.empty((n, n), dtype=complex)
    for x in range(n):
        weighted = S.entries.T * np.roll(t_check, (x, x), axis=(0, 1))
        out[x] = n * fft.ifft(diagonals(weighted).sum(axis=1))
    return PhaseFunction(values=out, params=params)


def check_map_cap(params: GroupParams) -> None:
    if params.size > settings.CONV_MAP_CAP:
        raise ResourceLimitError(
            f"N^2 = {params.size} exceeds the convolution-map cap {settings.CONV_MAP_CAP}; "
            "use the matrix-free application instead"
        )


def translate_matrix(S: OperatorMatrix) -> np.ndarray:
    """N^2 x N^2 matrix whose column z is vec(alpha_z S)."""
    params = S.params
    check_map_cap(params)
    n = params.N
    cols = [
        alpha_array(S.entries, params, x, w).reshape(-1)
        for x in range(n)
        for w in range(n)
    ]
    return np.stack(cols, axis=1)


def build_conv_map(S: OperatorMatrix, which: MapKind) -> ConvMapMatrix:
    """Explicit matrix of A_S (f -> f * S) or B_S (T -> T * (S-check)^*).

    B_S T(z) = tr(T alpha_z(S^*)), so row z of B_S is vec(alpha_z(S^*)^T).
    """
    params = S.params
    if which == "A":
        matrix = translate_matrix(S) / params.N
    else:
        check_map_cap(params)
        s_adj = S.entries.conj().T
        n = params.N
        rows = [
            alpha_array(s_adj, params, x, w).T.reshape(-1)
            for x in range(n)
            for w in range(n)
        ]
        matrix = np.stack(rows, axis=0)
    return ConvMapMatrix(matrix=matrix, which=which, source=S)


def apply_conv_map(
    S: OperatorMatrix, which: MapKind, arg: PhaseFunction | OperatorMatrix
) -> OperatorMatrix | PhaseFunction:
    """Matrix-free A_S / B_S, available at every N."""
    if which == "A":
        if not isinstance(arg, PhaseFunction):
            raise TypeError("A_S acts on phase functions")
        return conv_fun_op(arg, S)
    if not isinstance(arg, OperatorMatrix):
        raise TypeError("B_S acts on operators")
    return conv_op_op(arg, S.with_entries(parity_array(S.adjoint().entries)))


def apply_matrix(
    conv_map: ConvMapMatrix, arg: PhaseFunction | OperatorMatrix
) -> OperatorMatrix | PhaseFunction:
    params = same_params(conv_map, arg)
    n = params.N
    out = (conv_map.matrix @ arg.vec).reshape(n, n)
    if conv_map.which == "A":
        return OperatorMatrix(entries=out, params=params)
    return PhaseFunction(values=out, params=params)


def integrated_shift_norm_ratio(f: PhaseFunction, T: OperatorMatrix) -> float:
    """||f * T||_1 / (||f||_{L^1} ||T||_1); equal to one for f >= 0 and T >= 0."""
    denom = lp_norm(f, 1) * schatten_norm(T, 1)
    if denom == 0.0:
        return 0.0
    return schatten_norm(conv_fun_op(f, T), 1) / denom
