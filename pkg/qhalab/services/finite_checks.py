"""Identity checks of the finite model, one function per named check.

A check receives the group, a seeded generator and the ensemble size and
returns the worst measured value: a scale-free residual for identities,
``ratio - 1`` for inequalities, or a violation count for the exact integer
laws. ``FINITE_CHECKS`` fixes the order in which they run and are reported.
"""

import typing as t

import numpy as np

from ..core.exceptions import ConsistencyError
from ..harmonic import convolutions as cv
from ..harmonic import localization as loc
from ..harmonic import operators as ops
from ..harmonic import phase_space as ps
from ..harmonic import tauberian as tb
from ..harmonic import transforms as tr
from ..models import BaseValue, GroupParams, OperatorMatrix, PhaseFunction, PhasePoint, Signal
from ..utils import rng as qrng

CheckFn = t.Callable[[GroupParams, np.random.Generator, int], float]


class FiniteCheck(BaseValue):
    name: str
    tolerance: float
    run: CheckFn


FINITE_CHECKS: list[FiniteCheck] = []


def finite_check(name: str, tolerance: float) -> t.Callable[[CheckFn], CheckFn]:
    def register(fn: CheckFn) -> CheckFn:
        FINITE_CHECKS.append(FiniteCheck(name=name, tolerance=tolerance, run=fn))
        return fn

    return register


def residual(a: np.ndarray, b: np.ndarray, scale: float = 1.0) -> float:
    return float(np.abs(np.asarray(a) - np.asarray(b)).max() / scale)


def random_point(params: GroupParams, rng: np.random.Generator) -> PhasePoint:
    x, w = rng.integers(params.N, size=2)
    return PhasePoint(x=int(x), omega=int(w), params=params)


def l2(f: PhaseFunction) -> float:
    return ps.lp_norm(f, 2)


def hs(S: OperatorMatrix) -> float:
    return ops.schatten_norm(S, 2)


# finite phase space


@finite_check("symplectic_fourier_involution", 1e-12)
def symplectic_fourier_involution(params, rng, size):
    worst = 0.0
    for _ in range(size):
        f = qrng.random_function(params, rng)
        twice = ps.symplectic_fourier(ps.symplectic_fourier(f))
        parseval = abs(l2(ps.symplectic_fourier(f)) - l2(f)) / l2(f)
        worst = max(worst, residual(twice.values, f.values, l2(f)), parseval)
    return worst


@finite_check("symplectic_translation_phase", 1e-12)
def symplectic_translation_phase(params, rng, size):
    worst = 0.0
    for _ in range(size):
        f = qrng.random_function(params, rng)
        z = random_point(params, rng)
        lhs = ps.symplectic_fourier(ps.phase_translate(f, z)).values
        rhs = ps.unit_root(params, ps.symplectic_grid(z)) * ps.symplectic_fourier(f).values
        worst = max(worst, residual(lhs, rhs, l2(f)))
    return worst


@finite_check("symplectic_form_bilinear", 0.0)
def symplectic_form_bilinear(params, rng, size):
    violations = 0
    for _ in range(size):
        z, zp, zpp = (random_point(params, rng) for _ in range(3))
        a, b = (int(v) for v in rng.integers(params.N, size=2))
        combo = PhasePoint(
            x=a * z.x + b * zp.x, omega=a * z.omega + b * zp.omega, params=params
        )
        lhs = ps.symplectic_form(combo, zpp)
        rhs = (a * ps.symplectic_form(z, zpp) + b * ps.symplectic_form(zp, zpp)) % params.N
        antisym = (ps.symplectic_form(z, zp) + ps.symplectic_form(zp, z)) % params.N
        violations += int(lhs != rhs) + int(antisym != 0)
    return float(violations)


# operator core


@finite_check("shift_adjoint_and_parity", 1e-13)
def shift_adjoint_and_parity(params, rng, size):
    worst = 0.0
    for z in ps.all_points(params):
        shift = ops.tf_shift_matrix(z)
        minus = ops.tf_shift_matrix(-z).entries
        adjoint = ps.unit_root(params, -z.x * z.omega) * minus
        worst = max(
            worst,
            residual(shift.adjoint().entries, adjoint),
            residual(ops.parity_conjugate(shift).entries, ops.PARITY_SHIFT_PHASE * minus),
            residual(shift.entries @ shift.adjoint().entries, np.eye(params.N)),
        )
    return worst


@finite_check("alpha_laws", 1e-13)
def alpha_laws(params, rng, size):
    worst = 0.0
    for _ in range(size):
        A = qrng.random_operator(params, rng)
        z, zp = random_point(params, rng), random_point(params, rng)
        scale = hs(A)
        twice = ops.alpha_shift(ops.alpha_shift(A, zp), z)
        symplectic = ops.alpha_shift(ops.tf_shift_matrix(zp), z).entries
        phase = ps.unit_root(params, ps.symplectic_form(z, zp))
        checks = [
            residual(twice.entries, ops.alpha_shift(A, z + zp).entries, scale),
            residual(symplectic, phase * ops.tf_shift_matrix(zp).entries),
            residual(
                ops.alpha_shift(A, z).adjoint().entries,
                ops.alpha_shift(A.adjoint(), z).entries,
                scale,
            ),
            residual(
                ops.parity_conjugate(A).adjoint().entries,
                ops.parity_conjugate(A.adjoint()).entries,
                scale,
            ),
            residual(
                ops.parity_conjugate(ops.alpha_shift(A, z)).entries,
                ops.alpha_shift(ops.parity_conjugate(A), -z).entries,
                scale,
            ),
        ]
        worst = max(worst, *checks)
    return worst


@finite_check("schatten_invariance", 1e-12)
def schatten_invariance(params, rng, size):
    worst = 0.0
    for _ in range(size):
        A = qrng.random_operator(params, rng)
        z = random_point(params, rng)
        for p in (1, 2, np.inf):
            norm = ops.schatten_norm(A, p)
            worst = max(
                worst,
                abs(ops.schatten_norm(ops.alpha_shift(A, z), p) - norm) / norm,
                abs(ops.schatten_norm(ops.parity_conjugate(A), p) - norm) / norm,
            )
    return worst


@finite_check("schatten_monotone", 1e-12)
def schatten_monotone(params, rng, size):
    ps_ = (1, 4 / 3, 2, 4, np.inf)
    worst = 0.0
    for _ in range(size):
        report = ops.schatten_report(qrng.random_operator(params, rng), ps_)
        norms = [report.norms[ops.p_label(p)] for p in ps_]
        worst = max(worst, *(b / a - 1.0 for a, b in zip(norms, norms[1:])))
    return max(worst, 0.0)


@finite_check("trace_laws", 1e-12)
def trace_laws(params, rng, size):
    worst = 0.0
    for _ in range(size):
        A, S = qrng.random_operator(params, rng), qrng.random_operator(params, rng)
        bound = ops.schatten_norm(A, np.inf) * ops.schatten_norm(S, 1)
        worst = max(
            worst,
            abs(ops.trace(A @ S) - ops.trace(S @ A)) / bound,
            abs(ops.trace(A.adjoint()) - np.conj(ops.trace(A))) / hs(A),
            abs(ops.trace(A @ S)) / bound - 1.0,
        )
    return max(worst, 0.0)


@finite_check("moyal", 1e-12)
def moyal(params, rng, size):
    worst = 0.0
    for _ in range(size):
        psi1, psi2, phi1, phi2 = (qrng.random_signal(params, rng) for _ in range(4))
        v1, v2 = tr.stft(psi1, phi1), tr.stft(psi2, phi2)
        lhs = ps.l2_inner(v1, v2)
        rhs = psi1.inner(psi2) * np.conj(phi1.inner(phi2))
        scale = psi1.norm() * psi2.norm() * phi1.norm() * phi2.norm()
        worst = max(worst, abs(lhs - rhs) / scale)
    return worst


@finite_check("integrated_shift_norm", 1e-10)
def integrated_shift_norm(params, rng, size):
    worst = 0.0
    for _ in range(size):
        f = qrng.random_nonnegative_function(params, rng)
        T = qrng.random_positive_operator(params, rng)
        worst = max(worst, abs(cv.integrated_shift_norm_ratio(f, T) - 1.0))
    return worst


# transforms


@finite_check("phase_convention_oracle", 0.0)
def phase_convention_oracle(params, rng, size):
    winners = tr.phase_convention_oracle(3)
    return 0.0 if winners == [(tr.FW_PHASE_SIGN, tr.RHO_PHASE_SIGN)] else 1.0


@finite_check("fourier_wigner_rank_one", 1e-13)
def fourier_wigner_rank_one(params, rng, size):
    worst = 0.0
    for _ in range(size):
        phi1, phi2 = qrng.random_signal(params, rng), qrng.random_signal(params, rng)
        lhs = tr.fourier_wigner(ops.rank_one(phi2, phi1)).values
        rhs = tr.ambiguity(phi2, phi1).values
        worst = max(worst, residual(lhs, rhs, phi1.norm() * phi2.norm()))
    return worst


@finite_check("fourier_wigner_unitary", 1e-12)
def fourier_wigner_unitary(params, rng, size):
    worst = 0.0
    for _ in range(size):
        S, T = qrng.random_operator(params, rng), qrng.random_operator(params, rng)
        fs, ft = tr.fourier_wigner(S), tr.fourier_wigner(T)
        worst = max(
            worst,
            abs(l2(fs) - hs(S)) / hs(S),
            abs(ps.l2_inner(fs, ft) - ops.hs_inner(S, T)) / (hs(S) * hs(T)),
        )
    return worst


@finite_check("rho_inverse", 1e-12)
def rho_inverse(params, rng, size):
    worst = 0.0
    for _ in range(size):
        S = qrng.random_operator(params, rng)
        f = qrng.random_function(params, rng)
        worst = max(
            worst,
            residual(tr.rho(tr.fourier_wigner(S)).entries, S.entries, hs(S)),
            residual(tr.fourier_wigner(tr.rho(f)).values, f.values, l2(f)),
            residual(tr.rho_superposition(f).entries, tr.rho(f).entries, l2(f)),
        )
    return worst


@finite_check("twisted_product_formulas", 1e-11)
def twisted_product_formulas(params, rng, size):
    worst = 0.0
    for _ in range(size):
        f, g = qrng.random_function(params, rng), qrng.random_function(params, rng)
        S, T = qrng.random_operator(params, rng), qrng.random_operator(params, rng)
        fg = tr.twisted_convolution(f, g)
        worst = max(
            worst,
            residual(tr.rho(fg).entries, (tr.rho(f) @ tr.rho(g)).entries, l2(f) * l2(g)),
            residual(
                tr.fourier_wigner(S @ T).values,
                tr.twisted_convolution(tr.fourier_wigner(S), tr.fourier_wigner(T)).values,
                hs(S) * hs(T),
            ),
        )
    return worst


@finite_check("twisted_l2_bound", 1e-10)
def twisted_l2_bound(params, rng, size):
    worst = 0.0
    for _ in range(size):
        f, g = qrng.random_function(params, rng), qrng.random_function(params, rng)
        worst = max(worst, l2(tr.twisted_convolution(f, g)) / (l2(f) * l2(g)) - 1.0)
    return max(worst, 0.0)


@finite_check("weyl_calculus", 1e-12)
def weyl_calculus(params, rng, size):
    worst = 0.0
    for _ in range(size):
        f = qrng.random_function(params, rng)
        psi, phi = qrng.random_signal(params, rng), qrng.random_signal(params, rng)
        z = random_point(params, rng)
        L = tr.weyl_transform(f)
        scale = l2(f)
        weak_lhs = L.apply(psi).inner(phi)
        weak_rhs = ps.l2_inner(f, tr.cross_wigner(phi, psi))
        worst = max(
            worst,
            abs(ops.trace(L) - ps.phase_integral(f)) / scale,
            residual(tr.weyl_symbol(L).values, f.values, scale),
            residual(
                ops.alpha_shift(L, z).entries,
                tr.weyl_transform(ps.phase_translate(f, z)).entries,
                scale,
            ),
            residual(
                tr.weyl_symbol(ops.parity_conjugate(L)).values, f.reflect().values, scale
            ),
            residual(L.adjoint().entries, tr.weyl_transform(f.conj()).entries, scale),
            abs(weak_lhs - weak_rhs) / (scale * psi.norm() * phi.norm()),
        )
    return worst


@finite_check("cross_wigner", 1e-12)
def cross_wigner(params, rng, size):
    worst = 0.0
    for _ in range(size):
        psi = qrng.random_signal(params, rng)
        w = tr.cross_wigner(psi, psi)
        norm2 = psi.norm() ** 2
        worst = max(
            worst,
            float(np.abs(w.values.imag).max()) / norm2,
            abs(ps.phase_integral(w) - norm2) / norm2,
        )
    return worst


@finite_check("hausdorff_young", 1e-10)
def hausdorff_young(params, rng, size):
    worst = 0.0
    for _ in range(size):
        S = qrng.random_operator(params, rng)
        fw = tr.fourier_wigner(S)
        for p in (1.0, 4 / 3, 2.0):
            q = np.inf if p == 1.0 else p / (p - 1.0)
            worst = max(worst, ps.lp_norm(fw, q) / ops.schatten_norm(S, p) - 1.0)
    return max(worst, 0.0)


@finite_check("hausdorff_young_equality", 1e-12)
def hausdorff_young_equality(params, rng, size):
    worst = 0.0
    for _ in range(size):
        S = qrng.random_operator(params, rng)
        shift = ops.tf_shift_matrix(random_point(params, rng))
        worst = max(
            worst,
            abs(l2(tr.fourier_wigner(S)) / hs(S) - 1.0),
            abs(ps.lp_norm(tr.fourier_wigner(shift), np.inf) / ops.schatten_norm(shift, 1) - 1.0),
        )
    return worst


# convolutions


@finite_check("trace_lemma", 1e-12)
def trace_lemma(params, rng, size):
    worst = 0.0
    for _ in range(size):
        S, T = qrng.random_operator(params, rng), qrng.random_operator(params, rng)
        lhs = ps.phase_integral(cv.conv_op_op(S, T))
        scale = ops.schatten_norm(S, 1) * ops.schatten_norm(T, 1)
        worst = max(worst, abs(lhs - ops.trace(S) * ops.trace(T)) / scale)
    return worst


@finite_check("convolution_commutative", 1e-11)
def convolution_commutative(params, rng, size):
    worst = 0.0
    for _ in range(size):
        S, T = qrng.random_operator(params, rng), qrng.random_operator(params, rng)
        worst = max(
            worst,
            residual(cv.conv_op_op(S, T).values, cv.conv_op_op(T, S).values, hs(S) * hs(T)),
        )
    return worst


@finite_check("convolution_associative", 1e-11)
def convolution_associative(params, rng, size):
    worst = 0.0
    for _ in range(size):
        f, g = qrng.random_function(params, rng), qrng.random_function(params, rng)
        S, T = qrng.random_operator(params, rng), qrng.random_operator(params, rng)
        R = qrng.random_operator(params, rng)
        worst = max(
            worst,
            residual(
                cv.conv_fun_op(ps.function_convolution(f, g), S).entries,
                cv.conv_fun_op(f, cv.conv_fun_op(g, S)).entries,
                l2(f) * l2(g) * hs(S),
            ),
            residual(
                cv.conv_op_op(cv.conv_fun_op(f, S), T).values,
                ps.function_convolution(f, cv.conv_op_op(S, T)).values,
                l2(f) * hs(S) * hs(T),
            ),
            residual(
                cv.conv_fun_op(cv.conv_op_op(S, T), R).entries,
                cv.conv_fun_op(cv.conv_op_op(T, R), S).entries,
                hs(S) * hs(T) * hs(R),
            ),
        )
    return worst


@finite_check("convolution_tidbits", 1e-13)
def convolution_tidbits(params, rng, size):
    worst = 0.0
    for _ in range(size):
        f = qrng.random_function(params, rng)
        S, T = qrng.random_operator(params, rng), qrng.random_operator(params, rng)
        z = random_point(params, rng)
        fs = l2(f) * hs(S)
        st = hs(S) * hs(T)
        worst = max(
            worst,
            residual(
                cv.conv_fun_op(f, S).adjoint().entries,
                cv.conv_fun_op(f.conj(), S.adjoint()).entries,
                fs,
            ),
            residual(
                ops.parity_conjugate(cv.conv_fun_op(f, S)).entries,
                cv.conv_fun_op(f.reflect(), ops.parity_conjugate(S)).entries,
                fs,
            ),
            residual(
                cv.conv_op_op(S, T).conj().values,
                cv.conv_op_op(S.adjoint(), T.adjoint()).values,
                st,
            ),
            residual(
                ops.alpha_shift(cv.conv_fun_op(f, S), z).entries,
                cv.conv_fun_op(ps.phase_translate(f, z), S).entries,
                fs,
            ),
            residual(
                ps.phase_translate(cv.conv_op_op(S, T), z).values,
                cv.conv_op_op(ops.alpha_shift(S, z), T).values,
                st,
            ),
        )
    return worst


@finite_check("convolution_fourier", 1e-11)
def convolution_fourier(params, rng, size):
    worst = 0.0
    for _ in range(size):
        f = qrng.random_function(params, rng)
        S, T = qrng.random_operator(params, rng), qrng.random_operator(params, rng)
        fws, fwt = tr.fourier_wigner(S), tr.fourier_wigner(T)
        worst = max(
            worst,
            residual(
                ps.symplectic_fourier(cv.conv_op_op(S, T)).values,
                (fws * fwt).values,
                hs(S) * hs(T),
            ),
            residual(
                tr.fourier_wigner(cv.conv_fun_op(f, S)).values,
                (ps.symplectic_fourier(f) * fws).values,
                l2(f) * hs(S),
            ),
        )
    return worst


@finite_check("convolution_twirl", 1e-12)
def convolution_twirl(params, rng, size):
    worst = 0.0
    one = PhaseFunction.constant(params)
    for _ in range(size):
        S = qrng.random_operator(params, rng)
        z = random_point(params, rng)
        delta = PhaseFunction.delta(z, params.N)
        worst = max(
            worst,
            residual(
                cv.conv_fun_op(one, S).entries, ops.trace(S) * np.eye(params.N), hs(S)
            ),
            residual(cv.conv_fun_op(delta, S).entries, ops.alpha_shift(S, z).entries, hs(S)),
        )
    return worst


@finite_check("young_bounds", 1e-10)
def young_bounds(params, rng, size):
    table = ((1, 1, 1), (1, 2, 2), (2, 2, np.inf), (1, np.inf, np.inf))
    worst = 0.0
    for _ in range(size):
        S, T = qrng.random_operator(params, rng), qrng.random_operator(params, rng)
        f = qrng.random_function(params, rng)
        st = cv.conv_op_op(S, T)
        for p, q, r in table:
            ratio = ps.lp_norm(st, r) / (ops.schatten_norm(S, p) * ops.schatten_norm(T, q))
            worst = max(worst, ratio - 1.0)
        fs = ops.schatten_norm(cv.conv_fun_op(f, S), 1)
        worst = max(worst, fs / (ps.lp_norm(f, 1) * ops.schatten_norm(S, 1)) - 1.0)
    return max(worst, 0.0)


@finite_check("conv_map_consistency", 1e-12)
def conv_map_consistency(params, rng, size):
    worst = 0.0
    for _ in range(size):
        S, T = qrng.random_operator(params, rng), qrng.random_operator(params, rng)
        f = qrng.random_function(params, rng)
        a_map, b_map = cv.build_conv_map(S, "A"), cv.build_conv_map(S, "B")
        scale = hs(S)
        worst = max(
            worst,
            residual(cv.apply_matrix(a_map, f).entries, cv.conv_fun_op(f, S).entries, scale * l2(f)),
            residual(
                cv.apply_matrix(b_map, T).values,
                cv.apply_conv_map(S, "B", T).values,
                scale * hs(T),
            ),
        )
        z = random_point(params, rng)
        delta = PhaseFunction.delta(z)
        column = a_map.matrix[:, z.x * params.N + z.omega]
        worst = max(
            worst, residual(column, cv.conv_fun_op(delta, S).vec, scale)
        )
    return worst


@finite_check("adjoint_pairing", 1e-12)
def adjoint_pairing(params, rng, size):
    worst = 0.0
    for _ in range(size):
        S, T = qrng.random_operator(params, rng), qrng.random_operator(params, rng)
        f = qrng.random_function(params, rng)
        lhs = ps.l2_inner(cv.apply_conv_map(S, "B", T), f)
        rhs = ops.hs_inner(T, cv.apply_conv_map(S, "A", f))
        worst = max(worst, abs(lhs - rhs) / (hs(S) * hs(T) * l2(f)))
    return worst


# localization


@finite_check("localization_identities", 1e-12)
def localization_identities(params, rng, size):
    worst = 0.0
    for _ in range(size):
        f = qrng.random_function(params, rng)
        T = qrng.random_operator(params, rng)
        phi1, phi2 = qrng.random_signal(params, rng), qrng.random_signal(params, rng)
        windows = phi1.norm() * phi2.norm()
        worst = max(
            worst,
            residual(
                loc.localization_operator(f, phi1, phi2).entries,
                loc.localization_by_convolution(f, phi1, phi2).entries,
                l2(f) * windows,
            ),
            residual(
                loc.berezin_transform(T, phi1, phi2).values,
                loc.berezin_by_convolution(T, phi1, phi2).values,
                hs(T) * windows,
            ),
        )
        symbol = loc.locop_twisted_symbol(f, phi1, phi2, tol=np.inf)
        direct = tr.fourier_wigner(loc.localization_operator(f, phi1, phi2))
        worst = max(worst, residual(symbol.values, direct.values, l2(f) * windows))
    return worst


@finite_check("localization_bounds", 1e-10)
def localization_bounds(params, rng, size):
    worst = 0.0
    for _ in range(size):
        f = qrng.random_function(params, rng)
        T = qrng.random_operator(params, rng)
        phi1, phi2 = qrng.random_signal(params, rng), qrng.random_signal(params, rng)
        windows = phi1.norm() * phi2.norm()
        A = loc.localization_operator(f, phi1, phi2)
        B = loc.berezin_transform(T, phi1, phi2)
        for p in (1, 2, np.inf):
            worst = max(
                worst,
                ops.schatten_norm(A, p) / (ps.lp_norm(f, p) * windows) - 1.0,
                ps.lp_norm(B, p) / (ops.schatten_norm(T, p) * windows) - 1.0,
            )
    return max(worst, 0.0)


@finite_check("localization_duality", 1e-12)
def localization_duality(params, rng, size):
    worst = 0.0
    for _ in range(size):
        f = qrng.random_function(params, rng)
        T = qrng.random_operator(params, rng)
        phi1, phi2 = qrng.random_signal(params, rng), qrng.random_signal(params, rng)
        S = ops.rank_one(phi2, phi1)
        lhs = ps.l2_inner(cv.apply_conv_map(S, "B", T), f)
        rhs = ops.hs_inner(T, loc.localization_operator(f, phi1, phi2))
        worst = max(worst, abs(lhs - rhs) / (hs(T) * l2(f) * phi1.norm() * phi2.norm()))
    return worst


# Tauberian rank law


def _rank_law_violations(S: OperatorMatrix, expected_zeros: int | None = None) -> int:
    try:
        report = tb.regularity_report(S)
    except ConsistencyError:
        return 1
    size = report.N * report.N
    zeros = len(report.zero_set)
    bad = [
        report.kernel_dim_A != zeros,
        report.regular != (report.translate_rank == size),
        not report.square_zero_set_agrees,
        expected_zeros is not None and zeros != expected_zeros,
    ]
    return sum(bad)


@finite_check("tauberian_rank_law", 0.0)
def tauberian_rank_law(params, rng, size):
    n = params.N
    violations = _rank_law_violations(
        ops.rank_one(Signal.basis(params), Signal.basis(params)), n * (n - 1)
    )
    violations += _rank_law_violations(OperatorMatrix.identity(params), n * n - 1)
    violations += _rank_law_violations(OperatorMatrix.zeros(params), n * n)
    violations += int(tb.translate_span_rank(OperatorMatrix.identity(params)) != 1)
    for k in (0, 1, n, n * n - 1):
        for _ in range(size):
            S, _ = tb.crafted_operator(params, k, rng)
            violations += _rank_law_violations(S, k)
    for _ in range(size):
        S = qrng.random_operator(params, rng)
        if tb.zero_set(S):
            continue  # not generic
        violations += _rank_law_violations(S, 0)
        violations += int(tb.translate_span_rank(S) != n * n)
    return float(violations)


@finite_check("wiener_rank_law", 0.0)
def wiener_rank_law(params, rng, size):
    n = params.N
    violations = 0
    for k in (0, 1, n):
        for _ in range(size):
            S, mask = tb.crafted_operator(params, k, rng)
            # F_sigma f = F_W S, so f vanishes in frequency exactly on the mask
            f = ps.symplectic_fourier(tr.fourier_wigner(S))
            violations += int(tb.wiener_translate_rank(f) != n * n - k)
            regular = tb.weyl_regularity(f)
            expected = [(int(x), int(w)) for x, w in zip(*np.nonzero(mask))]
            got = [(z.x, z.omega) for z in regular.zero_set]
            violations += int(got != expected)
    return float(violations)


@finite_check("arveson_and_density", 0.0)
def arveson_and_density(params, rng, size):
    n = params.N
    e0 = Signal.basis(params)
    violations = 0
    spectrum = tb.arveson_spectrum(OperatorMatrix.identity(params))
    violations += int([z.as_tuple() for z in spectrum] != [(0, 0)])
    sheet = tb.arveson_spectrum(ops.rank_one(e0, e0))
    violations += int(sorted(z.as_tuple() for z in sheet) != [(0, w) for w in range(n)])
    density = tb.localization_density_check(e0, e0)
    violations += int(density.regular or len(density.zero_set) != n * (n - 1))
    violations += int(density.ambiguity_zero_set_agrees is not True)
    violations += int(not tb.localization_density_check(e0, Signal.zeros(params)).degenerate)
    for _ in range(size):
        phi1, phi2 = qrng.random_signal(params, rng), qrng.random_signal(params, rng)
        report = tb.localization_density_check(phi1, phi2)
        violations += int(report.ambiguity_zero_set_agrees is not True)
        if report.regular:
            violations += int(len(report.arveson_support) != n * n)
    return float(violations)
