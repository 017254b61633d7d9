import numpy as np
import pytest

from qhalab.core.exceptions import InvalidExponentError, ParameterMismatchError
from qhalab.harmonic import operators as ops
from qhalab.harmonic.phase_space import unit_root
from qhalab.models import GroupParams, OperatorMatrix, PhasePoint, Signal
from qhalab.utils.rng import random_operator

from .conftest import TOL


def point(params, x, w):
    return PhasePoint(x=x, omega=w, params=params)


def test_tf_shift_is_modulated_translate(psi):
    z = point(psi.params, 2, 1)
    direct = ops.tf_shift_matrix(z).apply(psi)
    composed = ops.modulate_signal(ops.translate_signal(psi, 2), 1)
    np.testing.assert_allclose(direct.values, composed.values, atol=TOL)


def test_tf_shift_composition_law(params):
    z, zp = point(params, 1, 2), point(params, 2, 1)
    product = ops.tf_shift_matrix(z) @ ops.tf_shift_matrix(zp)
    phase = unit_root(params, -zp.omega * z.x)
    np.testing.assert_allclose(
        product.entries, phase * ops.tf_shift_matrix(z + zp).entries, atol=TOL
    )


def test_tf_shift_adjoint(params):
    z = point(params, 1, 2)
    adj = ops.tf_shift_matrix(z).adjoint()
    expected = unit_root(params, -z.x * z.omega) * ops.tf_shift_matrix(-z).entries
    np.testing.assert_allclose(adj.entries, expected, atol=TOL)
    np.testing.assert_allclose(
        (adj @ ops.tf_shift_matrix(z)).entries, np.eye(params.N), atol=TOL
    )


def test_parity_flips_shift(params):
    z = point(params, 2, 1)
    flipped = ops.parity_conjugate(ops.tf_shift_matrix(z))
    np.testing.assert_allclose(
        flipped.entries, ops.PARITY_SHIFT_PHASE * ops.tf_shift_matrix(-z).entries, atol=TOL
    )


def test_parity_signal(params):
    psi = Signal(values=np.arange(params.N, dtype=complex), params=params)
    np.testing.assert_array_equal(ops.parity_signal(psi).values, (-np.arange(params.N)) % params.N)


def test_alpha_shift_conjugates(S):
    z = point(S.params, 1, 2)
    U = ops.tf_shift_matrix(z)
    np.testing.assert_allclose(
        ops.alpha_shift(S, z).entries, (U @ S @ U.adjoint()).entries, atol=TOL
    )


def test_alpha_is_a_group_action(S):
    z, zp = point(S.params, 1, 2), point(S.params, 2, 2)
    np.testing.assert_allclose(
        ops.alpha_shift(ops.alpha_shift(S, zp), z).entries,
        ops.alpha_shift(S, z + zp).entries,
        atol=TOL,
    )


def test_rank_one_action(psi, phi):
    xi = Signal.basis(psi.params, 1)
    out = ops.rank_one(psi, phi).apply(xi)
    np.testing.assert_allclose(out.values, xi.inner(phi) * psi.values, atol=TOL)
    assert ops.trace(ops.rank_one(psi, phi)) == pytest.approx(psi.inner(phi))


def test_hs_inner_is_trace_pairing(S, T):
    assert ops.hs_inner(S, T) == pytest.approx(ops.trace(S @ T.adjoint()))


def test_schatten_norms(S):
    assert ops.schatten_norm(S, 2) == pytest.approx(np.linalg.norm(S.entries))
    assert ops.schatten_norm(S, np.inf) == pytest.approx(np.linalg.norm(S.entries, 2))
    assert ops.schatten_norm(S, 1) == pytest.approx(np.linalg.norm(S.entries, "nuc"))
    norms = [ops.schatten_norm(S, p) for p in (1, 1.5, 2, 4, np.inf)]
    assert all(a >= b - TOL for a, b in zip(norms, norms[1:]))


def test_schatten_norm_is_unitarily_invariant(S):
    U = ops.tf_shift_matrix(point(S.params, 1, 1))
    for p in (1, 3, np.inf):
        assert ops.schatten_norm(U @ S, p) == pytest.approx(ops.schatten_norm(S, p))


def test_schatten_report(params):
    report = ops.schatten_report(OperatorMatrix.identity(params), [1, 2, np.inf])
    assert report.norms == pytest.approx({"1": params.N, "2": np.sqrt(params.N), "inf": 1.0})
    assert report.singular_values == pytest.approx([1.0] * params.N)


def test_schatten_report_rejects_small_exponent(S):
    with pytest.raises(InvalidExponentError):
        ops.schatten_report(S, [2, 0.5])


@pytest.mark.parametrize(
    "p, label", [(1, "1"), (2.0, "2"), (np.inf, "inf"), (4 / 3, repr(4 / 3))]
)
def test_p_label(p, label):
    assert ops.p_label(p) == label


def test_numerical_rank(params, psi, phi):
    assert ops.numerical_rank(OperatorMatrix.zeros(params).entries) == 0
    assert ops.numerical_rank(ops.rank_one(psi, phi).entries) == 1
    assert ops.numerical_rank(OperatorMatrix.identity(params).entries) == params.N


def test_mixed_moduli_rejected(rng):
    A = random_operator(GroupParams(N=3), rng)
    B = random_operator(GroupParams(N=5), rng)
    with pytest.raises(ParameterMismatchError):
        A @ B
