import numpy as np
import pytest
from pydantic import ValidationError

from qhalab.core.exceptions import (
    IncompatibleGridError,
    InvalidExponentError,
    ResourceLimitError,
)
from qhalab.harmonic import continuum as ct
from qhalab.models import PhasePlane, SampledLine


def test_line_geometry(line):
    assert line.delta == pytest.approx(0.125)
    assert line.points[0] == pytest.approx(-4.0)
    assert line.points[-1] == pytest.approx(4.0 - line.delta)
    assert line.is_reciprocal_of(line)
    assert SampledLine(n=256, L=8.0).reciprocal().L == pytest.approx(8.0)
    assert SampledLine(n=128, L=8.0).reciprocal().L == pytest.approx(4.0)


@pytest.mark.parametrize("n", [100, 8])
def test_line_needs_power_of_two(n):
    with pytest.raises(ValidationError):
        SampledLine(n=n, L=4.0)


def test_hermite_functions_are_orthonormal():
    line = SampledLine(n=128, L=8.0)
    h = [ct.hermite_signal(line, k) for k in range(6)]
    gram = np.array([[a.inner(b) for b in h] for a in h])
    np.testing.assert_allclose(gram, np.eye(6), atol=1e-10)
    np.testing.assert_allclose(h[0].samples, ct.gaussian_signal(line).samples, atol=1e-14)


def test_gaussian_stft(line):
    phi = ct.gaussian_signal(line)
    assert phi.norm() == pytest.approx(1.0, abs=1e-10)
    v = ct.continuum_stft(phi, phi)
    x, w = v.mesh()
    np.testing.assert_allclose(np.abs(v.values), np.exp(-np.pi * (x**2 + w**2) / 2), atol=1e-8)
    assert ct.plane_lp_norm(v, 2) == pytest.approx(1.0, abs=1e-8)


def test_gaussian_fourier_wigner_closed_form(line):
    assert ct.gaussian_fw_check(line) < 1e-6
    # the printed variant differs by a unimodular factor away from the axes
    assert ct.gaussian_fw_check(line, printed=True) > 1e-3


def test_stft_rejects_foreign_frequency_grid(line):
    phi = ct.gaussian_signal(line)
    with pytest.raises(IncompatibleGridError):
        ct.continuum_stft(phi, phi, frequency=SampledLine(n=64, L=2.0))
    with pytest.raises(IncompatibleGridError):
        ct.continuum_stft(phi, ct.gaussian_signal(SampledLine(n=64, L=2.0)))


@pytest.mark.parametrize("p", [2.0, 3.0, 4.0, 6.0])
def test_lieb_equality_for_gaussians(line, p):
    phi = ct.gaussian_signal(line)
    assert ct.lieb_ratio(phi, phi, p) == pytest.approx(1.0, abs=1e-6)


def test_lieb_strict_for_hermite(line):
    phi = ct.gaussian_signal(line)
    assert ct.lieb_ratio(ct.hermite_signal(line, 2), phi, 4.0) < 1.0


@pytest.mark.parametrize("p", [1.0, 65.0])
def test_lieb_exponent_range(line, p):
    phi = ct.gaussian_signal(line)
    with pytest.raises(InvalidExponentError):
        ct.lieb_ratio(phi, phi, p)


def test_finite_rank_trace_class(line):
    phi = ct.gaussian_signal(line)
    h1 = ct.hermite_signal(line, 1)
    components = [(2.0, phi, phi), (1.0j, h1, h1)]
    np.testing.assert_allclose(ct.finite_rank_singular_values(components), [2.0, 1.0], atol=1e-10)
    assert ct.finite_rank_schatten(components, 1) == pytest.approx(3.0, abs=1e-10)
    assert ct.lieb_traceclass_ratio([(1.0, phi, phi)], 4.0) == pytest.approx(1.0, abs=1e-6)
    assert ct.lieb_traceclass_ratio(components, 4.0) <= 1.0 + 1e-6
    assert ct.hausdorff_young_spot_check(components, 4.0 / 3.0, 4.0) <= 1.0 + 1e-6


def test_riemann_lebesgue_decay(line):
    phi = ct.gaussian_signal(line)
    profile = ct.riemann_lebesgue_profile([(1.0, phi, phi)], radii=(1.0, 2.0))
    assert profile[0] > profile[1]


def test_modulation_norms(line):
    phi = ct.gaussian_signal(line)
    assert ct.modulation_norm(phi, 2, 2) == pytest.approx(1.0, abs=1e-8)
    assert ct.modulation_norm(3.0 * phi, 1, 1) == pytest.approx(3.0 * ct.modulation_norm(phi, 1, 1))
    with pytest.raises(InvalidExponentError):
        ct.modulation_norm(phi, 0.5, 1)


def test_plane_modulation_size_limit():
    big = SampledLine(n=128, L=4.0)
    with pytest.raises(ResourceLimitError):
        ct.modulation_norm(PhasePlane(values=np.zeros((128, 128)), line=big), 1, 1)


def test_constant_symbol_twirls_to_identity(line):
    phi = ct.gaussian_signal(line)
    one = PhasePlane(values=np.ones((line.n, line.n)), line=line)
    out = ct.function_operator_convolution(one, ct.rank_one_kernel(phi, phi))
    np.testing.assert_allclose(out, np.eye(line.n), atol=1e-8)


def test_operator_convolution_integrates_to_traces(line):
    phi = ct.gaussian_signal(line)
    k = ct.rank_one_kernel(phi, phi)
    plane = ct.operator_operator_convolution(k, k)
    assert plane.cell_area * plane.values.sum() == pytest.approx(1.0, abs=1e-6)


def test_kernels_need_self_dual_grid():
    line = SampledLine(n=64, L=8.0)
    phi = ct.gaussian_signal(line)
    with pytest.raises(IncompatibleGridError):
        ct.rank_one_kernel(phi, phi)


def test_refinement_trend():
    assert ct.refinement_monotone([1e-3, 1e-5, 1.05e-5])
    assert not ct.refinement_monotone([1e-5, 1e-3])
    study = ct.refinement_study((64, 128), L=4.0)
    assert [n for n, _ in study] == [64, 128]
    assert all(err < 1e-6 for _, err in study)
