"""Zero sets, translate spans and the finite Tauberian rank law.

On Z_N x Z_N every regularity notion (p = 1, 2, inf; norm, weak* or
measure-zero variants) collapses to "F_W S has no zeros". Since
F_W(alpha_z S)(z') = exp(2 pi i sigma(z, z') / N) F_W S(z'), the translates
of S span exactly the operators whose Fourier-Wigner transform vanishes on
the zero set of F_W S, so

    translate_rank = rank A_S = rank B_S = N^2 - |zero_set|.

The singular values of the translate matrix, A_S and B_S are proportional
to |F_W S|, so the ranks are cut at the same relative ``tol`` as the zero set.
"""

import math

import numpy as np
from loguru import logger

from ..core.config import settings
from ..core.exceptions import ConsistencyError, InvalidToleranceError
from ..models import GroupParams, OperatorMatrix, PhaseFunction, Signal, reflect_array
from ..schemas import PointSchema, RegularityReport
from .convolutions import build_conv_map, check_map_cap, conv_op_op, translate_matrix
from .operators import numerical_rank, rank_one
from .phase_space import points_where, symplectic_fourier
from .transforms import ambiguity, fourier_wigner, rho, weyl_transform

# rounding floor of F_sigma(S * S) relative to its peak, per phase point
SQUARE_NOISE = 16 * np.finfo(float).eps


def check_tol(tol: float) -> float:
    if not 0.0 < tol < 1.0:
        raise InvalidToleranceError(f"relative tolerance must lie in (0, 1), got {tol}")
    return tol


def zero_mask(values: np.ndarray, tol: float | None = None) -> np.ndarray:
    """``|values| <= tol * max|values|``; every point when values vanish identically."""
    tol = check_tol(settings.ZERO_SET_RTOL if tol is None else tol)
    mag = np.abs(values)
    peak = mag.max()
    if peak == 0.0:
        return np.ones(values.shape, dtype=bool)
    return mag <= tol * peak


def zero_set(S: OperatorMatrix, tol: float | None = None) -> list:
    return points_where(zero_mask(fourier_wigner(S).values, tol), S.params)


def translate_span_rank(S: OperatorMatrix, rtol: float | None = None) -> int:
    rtol = settings.TRANSLATE_RANK_RTOL if rtol is None else rtol
    return numerical_rank(translate_matrix(S), rtol)


def arveson_spectrum(S: OperatorMatrix, tol: float | None = None) -> list:
    """Support of z -> F_W S(-z) above the relative threshold."""
    values = fourier_wigner(S).values
    if not np.abs(values).max() > 0.0:
        return []
    return points_where(~zero_mask(reflect_array(values), tol), S.params)


def square_tol(tol: float, size: int) -> float:
    """Cut on (F_W S)^2 matching ``tol`` on F_W S, floored at rounding noise."""
    return max(tol * tol, SQUARE_NOISE * size)


def self_convolution_zero_set(S: OperatorMatrix, tol: float | None = None) -> list:
    """Zero set of F_sigma(S * S) = (F_W S)^2, cut at ``square_tol(tol)``."""
    tol = check_tol(settings.ZERO_SET_RTOL if tol is None else tol)
    square = symplectic_fourier(conv_op_op(S, S)).values
    return points_where(zero_mask(square, square_tol(tol, S.params.size)), S.params)


def _schema(points: list) -> list[PointSchema]:
    return [PointSchema(x=z.x, omega=z.omega) for z in points]


def regularity_report(S: OperatorMatrix, tol: float | None = None) -> RegularityReport:
    tol = check_tol(settings.ZERO_SET_RTOL if tol is None else tol)
    params = S.params
    size = params.size
    check_map_cap(params)

    zeros = zero_set(S, tol)
    degenerate = not np.abs(S.entries).max() > 0.0
    translate_rank = translate_span_rank(S, tol)
    range_rank_A = numerical_rank(build_conv_map(S, "A").matrix, tol)
    range_rank_B = numerical_rank(build_conv_map(S, "B").matrix, tol)
    expected = size - len(zeros)
    if not translate_rank == range_rank_A == range_rank_B == expected:
        raise ConsistencyError(
            f"rank law fails at N={params.N}, tol={tol:g}: translate rank {translate_rank}, "
            f"rank A {range_rank_A}, rank B {range_rank_B}, N^2 - |zeros| = {expected}"
        )
    # points with tol < |F_W S| <= sqrt(noise floor) are not resolvable through the square
    resolvable = zero_set(S, math.sqrt(square_tol(tol, size)))
    square_agrees = self_convolution_zero_set(S, tol) == resolvable
    logger.debug(
        f"N={params.N}: |zeros| {len(zeros)}, translate rank {translate_rank}, "
        f"square zero set agrees {square_agrees}"
    )

    return RegularityReport(
        N=params.N,
        tol=tol,
        zero_set=_schema(zeros),
        support_size=expected,
        translate_rank=translate_rank,
        kernel_dim_A=size - range_rank_A,
        kernel_dim_B=size - range_rank_B,
        range_rank_A=range_rank_A,
        range_rank_B=range_rank_B,
        regular=not zeros,
        degenerate=degenerate,
        arveson_support=_schema(arveson_spectrum(S, tol)),
        square_zero_set_agrees=square_agrees,
    )


def localization_density_check(
    phi1: Signal, phi2: Signal, tol: float | None = None
) -> RegularityReport:
    """Regularity of phi2 (x) phi1, with the zero set compared against A(phi2, phi1)."""
    tol = check_tol(settings.ZERO_SET_RTOL if tol is None else tol)
    report = regularity_report(rank_one(phi2, phi1), tol)
    amb_zeros = points_where(zero_mask(ambiguity(phi2, phi1).values, tol), phi1.params)
    agrees = _schema(amb_zeros) == report.zero_set
    return report.model_copy(update={"ambiguity_zero_set_agrees": agrees})


def wiener_translate_rank(f: PhaseFunction, rtol: float | None = None) -> int:
    """Dimension of span{T_z f}, which equals |supp F_sigma f|."""
    rtol = settings.TRANSLATE_RANK_RTOL if rtol is None else rtol
    check_map_cap(f.params)
    n = f.N
    cols = [
        np.roll(f.values, (x, w), axis=(0, 1)).reshape(-1)
        for x in range(n)
        for w in range(n)
    ]
    return numerical_rank(np.stack(cols, axis=1), rtol)


def crafted_operator(
    params: GroupParams, zeros: int, rng: np.random.Generator
) -> tuple[OperatorMatrix, np.ndarray]:
    """rho of a random function vanishing on exactly ``zeros`` random points.

    Off the zero set the moduli are uniform in [0.5, 1.5] with uniform
    phases. Returns the operator and its prescribed zero mask.
    """
    size = params.size
    if not 0 <= zeros <= size:
        raise ValueError(f"zeros must lie in [0, {size}], got {zeros}")
    mask = np.zeros(size, dtype=bool)
    mask[rng.choice(size, size=zeros, replace=False)] = True
    mask = mask.reshape(params.N, params.N)
    moduli = rng.uniform(0.5, 1.5, size=mask.shape)
    phases = np.exp(2j * np.pi * rng.uniform(size=mask.shape))
    values = np.where(mask, 0.0, moduli * phases)
    return rho(PhaseFunction(values=values, params=params)), mask


def weyl_regularity(f: PhaseFunction, tol: float | None = None) -> RegularityReport:
    """Regularity of the Weyl operator L_f; F_W L_f = F_sigma f, so it is regular
    exactly when F_sigma f has no zeros."""
    return regularity_report(weyl_transform(f), tol)
