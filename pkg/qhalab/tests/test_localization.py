import numpy as np
import pytest

from qhalab.core.exceptions import ConsistencyError, ParameterMismatchError
from qhalab.harmonic import localization as loc
from qhalab.harmonic.operators import hs_inner, schatten_norm, tf_shift_matrix
from qhalab.harmonic.phase_space import all_points, l2_inner, lp_norm
from qhalab.harmonic.transforms import fourier_wigner, stft
from qhalab.models import GroupParams, PhaseFunction, PhasePoint
from qhalab.utils.rng import random_signal

from .conftest import TOL


def test_localization_operator_by_definition(f, psi, phi, rng):
    phi2 = random_signal(f.params, rng)
    A = loc.localization_operator(f, phi, phi2)
    V = stft(psi, phi).values
    expected = sum(
        f.values[z.x, z.omega] * V[z.x, z.omega] * tf_shift_matrix(z).apply(phi2).values
        for z in all_points(f.params)
    ) / f.N
    np.testing.assert_allclose(A.apply(psi).values, expected, atol=TOL)


def test_localization_operator_is_a_convolution(f, psi, phi):
    np.testing.assert_allclose(
        loc.localization_operator(f, psi, phi).entries,
        loc.localization_by_convolution(f, psi, phi).entries,
        atol=TOL,
    )


def test_constant_symbol_gives_multiple_of_identity(params, psi, phi):
    A = loc.localization_operator(PhaseFunction.constant(params), psi, phi)
    np.testing.assert_allclose(A.entries, phi.inner(psi) * np.eye(params.N), atol=1e-12 * params.N)


def test_delta_symbol_is_a_single_rank_one_term(params, psi, phi):
    z = PhasePoint(x=1, omega=2, params=params)
    A = loc.localization_operator(PhaseFunction.delta(z), psi, phi)
    shifted_psi = tf_shift_matrix(z).apply(psi)
    shifted_phi = tf_shift_matrix(z).apply(phi)
    expected = np.outer(shifted_phi.values, shifted_psi.values.conj()) / params.N
    np.testing.assert_allclose(A.entries, expected, atol=TOL)


def test_berezin_transform_two_ways(S, psi, phi):
    B = loc.berezin_transform(S, psi, phi)
    np.testing.assert_allclose(B.values, loc.berezin_by_convolution(S, psi, phi).values, atol=TOL)
    z = PhasePoint(x=2, omega=1, params=S.params)
    U = tf_shift_matrix(z)
    assert B.values[z.x, z.omega] == pytest.approx(S.apply(U.apply(psi)).inner(U.apply(phi)))


def test_localization_and_berezin_are_dual(f, S, psi, phi):
    A = loc.localization_operator(f, psi, phi)
    B = loc.berezin_transform(S, psi, phi)
    assert hs_inner(A, S) == pytest.approx(l2_inner(f, B))


def test_localization_bounds(f, psi, phi):
    A = loc.localization_operator(f, psi, phi)
    windows = psi.norm() * phi.norm()
    for p in (1, 2, np.inf):
        assert schatten_norm(A, p) <= lp_norm(f, p) * windows * (1 + TOL)


def test_twisted_symbol(f, psi, phi):
    symbol = loc.locop_twisted_symbol(f, psi, phi)
    direct = fourier_wigner(loc.localization_operator(f, psi, phi))
    np.testing.assert_allclose(symbol.values, direct.values, atol=1e-10)


def test_twisted_symbol_disagreement_raises(f, psi, phi):
    # a negative tolerance turns every residual into a failure
    with pytest.raises(ConsistencyError):
        loc.locop_twisted_symbol(f, psi, phi, tol=-1.0)


def test_mixed_moduli(f, rng):
    other = random_signal(GroupParams(N=f.N + 2), rng)
    with pytest.raises(ParameterMismatchError):
        loc.localization_operator(f, other, other)
