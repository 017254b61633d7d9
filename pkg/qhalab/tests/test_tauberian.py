import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from pydantic import ValidationError

from qhalab.core.exceptions import InvalidToleranceError
from qhalab.harmonic import tauberian as tb
from qhalab.harmonic.operators import rank_one
from qhalab.harmonic.phase_space import symplectic_fourier
from qhalab.harmonic.transforms import rho
from qhalab.models import GroupParams, OperatorMatrix, PhaseFunction, Signal
from qhalab.schemas import RegularityReport
from qhalab.utils.rng import generator, random_function, random_signal

from .strategies import SEEDS


def test_basis_window_has_a_line_of_support():
    params = GroupParams(N=5)
    e0 = Signal.basis(params)
    report = tb.regularity_report(rank_one(e0, e0))
    assert len(report.zero_set) == 20
    assert report.translate_rank == 5
    assert report.range_rank_A == report.range_rank_B == 5
    assert not report.regular
    assert {p.x for p in report.arveson_support} == {0}


def test_identity_has_one_point_of_support(params):
    report = tb.regularity_report(OperatorMatrix.identity(params))
    assert len(report.zero_set) == params.size - 1
    assert report.translate_rank == 1
    assert report.kernel_dim_A == report.kernel_dim_B == params.size - 1
    assert [(p.x, p.omega) for p in report.arveson_support] == [(0, 0)]


def test_zero_operator_is_degenerate(params):
    report = tb.regularity_report(OperatorMatrix.zeros(params))
    assert report.degenerate
    assert len(report.zero_set) == params.size
    assert report.translate_rank == 0
    assert report.kernel_dim_A == report.kernel_dim_B == params.size
    assert report.arveson_support == []


def test_random_operator_is_regular(S):
    report = tb.regularity_report(S)
    assert report.regular
    assert report.translate_rank == S.params.size
    assert report.kernel_dim_A == report.kernel_dim_B == 0
    assert report.square_zero_set_agrees


@settings(max_examples=15, deadline=None)
@given(n=st.sampled_from([3, 5, 7]), seed=SEEDS, data=st.data())
def test_crafted_zero_sets_follow_the_rank_law(n, seed, data):
    params = GroupParams(N=n)
    zeros = data.draw(st.integers(min_value=0, max_value=params.size))
    S, mask = tb.crafted_operator(params, zeros, generator(seed))
    report = tb.regularity_report(S)
    assert {(p.x, p.omega) for p in report.zero_set} == set(zip(*np.nonzero(mask)))
    assert report.translate_rank == report.range_rank_A == report.range_rank_B
    assert report.translate_rank == params.size - zeros
    assert report.square_zero_set_agrees


def test_crafted_operator_rejects_impossible_counts(params, rng):
    with pytest.raises(ValueError):
        tb.crafted_operator(params, params.size + 1, rng)


def test_zero_mask_is_relative():
    values = np.array([[1e6, 1e-4], [0.0, 2.0]])
    np.testing.assert_array_equal(tb.zero_mask(values, 1e-9), [[False, True], [True, False]])
    assert tb.zero_mask(np.zeros((3, 3))).all()


def test_wiener_rank_counts_fourier_support(params, rng):
    f = random_function(params, rng)
    assert tb.wiener_translate_rank(f) == params.size
    spike = PhaseFunction.constant(params)
    assert tb.wiener_translate_rank(spike) == 1
    assert np.count_nonzero(np.abs(symplectic_fourier(spike).values) > 1e-9) == 1


def test_weyl_regularity(params, rng):
    assert tb.weyl_regularity(random_function(params, rng)).regular
    report = tb.weyl_regularity(PhaseFunction.constant(params))
    assert len(report.zero_set) == params.size - 1


def test_window_pair_density(params, rng):
    e0 = Signal.basis(params)
    report = tb.localization_density_check(e0, e0)
    assert not report.regular
    assert report.ambiguity_zero_set_agrees is True

    phi1, phi2 = random_signal(params, rng), random_signal(params, rng)
    report = tb.localization_density_check(phi1, phi2)
    assert report.ambiguity_zero_set_agrees
    assert len(report.zero_set) == params.size - report.translate_rank


def test_arveson_spectrum_is_reflected_support(params, rng):
    S, mask = tb.crafted_operator(params, 3, rng)
    support = {(p.x, p.omega) for p in tb.arveson_spectrum(S)}
    expected = {((-x) % params.N, (-w) % params.N) for x, w in zip(*np.nonzero(~mask))}
    assert support == expected


def dip(value: float, N: int = 5) -> OperatorMatrix:
    """rho of the constant function with a single value lowered at (1, 2)."""
    values = np.ones((N, N), dtype=complex)
    values[1, 2] = value
    return rho(PhaseFunction(values=values, params=GroupParams(N=N)))


@pytest.mark.parametrize(
    "value, tol, is_zero",
    [
        (1e-10, None, True),
        (5e-9, None, False),
        (1e-8, None, False),
        (1e-7, 1e-6, True),
        (1e-5, 1e-6, False),
    ],
)
def test_rank_law_holds_on_both_sides_of_the_cut(value, tol, is_zero):
    report = tb.regularity_report(dip(value), tol)
    zeros = int(is_zero)
    assert [(p.x, p.omega) for p in report.zero_set] == ([(1, 2)] if is_zero else [])
    assert report.support_size == 25 - zeros
    assert report.translate_rank == report.range_rank_A == report.range_rank_B == 25 - zeros
    assert report.kernel_dim_A == report.kernel_dim_B == zeros
    assert report.regular == (not is_zero)
    assert report.square_zero_set_agrees


def test_square_zero_set_keeps_resolvable_small_values():
    S = dip(1e-5)
    assert tb.zero_set(S) == []
    assert tb.self_convolution_zero_set(S) == []
    assert len(tb.self_convolution_zero_set(dip(0.0))) == 1


@pytest.mark.parametrize("tol", [0.0, -1e-9, 1.0, 2.0])
def test_tolerance_outside_unit_interval_is_rejected(params, tol):
    with pytest.raises(InvalidToleranceError, match="0, 1"):
        tb.zero_mask(np.ones((3, 3)), tol)
    with pytest.raises(InvalidToleranceError):
        tb.regularity_report(OperatorMatrix.identity(params), tol)


def test_report_rejects_ranks_off_the_support_size():
    report = tb.regularity_report(dip(1.0))
    fields = report.model_dump()
    with pytest.raises(ValidationError, match="support_size"):
        RegularityReport(**{**fields, "translate_rank": 24})
    with pytest.raises(ValidationError, match="kernel"):
        RegularityReport(**{**fields, "kernel_dim_B": 1})
