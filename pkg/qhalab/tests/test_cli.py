import json

import numpy as np
import pytest
from typer.testing import CliRunner

from qhalab.cli import create_app
from qhalab.models import GroupParams, OperatorMatrix, PhaseFunction, Signal
from qhalab.repositories import OperatorRepository, PhaseFunctionRepository, SignalRepository

runner = CliRunner()
app = create_app()


def invoke(out, *args):
    return runner.invoke(app, ["--out", str(out), *map(str, args)])


def read_json(path):
    return json.loads(path.read_text())


@pytest.fixture
def e0_files(tmp_path):
    e0 = Signal.basis(GroupParams(N=5))
    signals = SignalRepository()
    return signals.save(e0, tmp_path / "e0.sig"), signals.save(e0, tmp_path / "e0b.sig")


def test_regularity_for_basis_windows(tmp_path, e0_files):
    phi1, phi2 = e0_files
    result = invoke(tmp_path / "out", "regularity", "--phi1", phi1, "--phi2", phi2)
    assert result.exit_code == 0, result.output
    report = read_json(tmp_path / "out" / "regularity.json")
    assert len(report["zero_set"]) == 20
    assert report["translate_rank"] == 5
    assert report["ambiguity_zero_set_agrees"] is True
    heatmap = (tmp_path / "out" / "ambiguity.csv").read_text().splitlines()
    assert heatmap[0] == "x,omega,value"
    assert len(heatmap) == 26


def test_regularity_random_windows_json(tmp_path):
    result = runner.invoke(
        app, ["--seed", "1", "--out", str(tmp_path), "--json", "regularity", "--random-windows", "5"]
    )
    assert result.exit_code == 0, result.output
    assert json.loads(result.stdout)["regular"] is True


def test_regularity_of_zero_operator(tmp_path):
    path = OperatorRepository().save(OperatorMatrix.zeros(GroupParams(N=3)), tmp_path / "zero.mat")
    result = invoke(tmp_path, "regularity", path)
    assert result.exit_code == 0, result.output
    report = read_json(tmp_path / "regularity.json")
    assert report["degenerate"] is True
    assert len(report["zero_set"]) == 9


def test_regularity_needs_one_input(tmp_path, e0_files):
    assert invoke(tmp_path, "regularity").exit_code == 5
    assert invoke(tmp_path, "regularity", "--phi1", e0_files[0]).exit_code == 5


@pytest.mark.parametrize("tol", ["2", "1", "0", "-1e-9"])
def test_regularity_rejects_tolerance_outside_unit_interval(tmp_path, tol):
    path = OperatorRepository().save(OperatorMatrix.identity(GroupParams(N=3)), tmp_path / "I.mat")
    result = invoke(tmp_path / "out", "regularity", path, "--tol", tol)
    assert result.exit_code == 3
    assert not (tmp_path / "out" / "regularity.json").exists()
    assert invoke(tmp_path / "out", "spectrum", path, "--tol", tol).exit_code == 3


def test_regularity_reports_parse_errors(tmp_path):
    bad = tmp_path / "bad.mat"
    bad.write_text("QHA-MAT v1 N=3\n0,0,1,0\n")
    assert invoke(tmp_path, "regularity", bad).exit_code == 6


def test_localize_and_berezin(tmp_path, e0_files):
    params = GroupParams(N=5)
    symbol = PhaseFunctionRepository().save(PhaseFunction.constant(params), tmp_path / "one.fun")
    phi1, phi2 = e0_files
    out = tmp_path / "out"

    result = invoke(out, "localize", symbol, "--phi1", phi1, "--phi2", phi2)
    assert result.exit_code == 0, result.output
    A = OperatorRepository().load(out / "localization.mat")
    np.testing.assert_allclose(A.entries, np.eye(5), atol=1e-12)
    assert read_json(out / "localization.json")["schatten"]["norms"]["1"] == pytest.approx(5.0)

    result = invoke(out, "berezin", out / "localization.mat", "--phi1", phi1, "--phi2", phi2)
    assert result.exit_code == 0, result.output
    B = PhaseFunctionRepository().load(out / "berezin.fun")
    np.testing.assert_allclose(B.values, np.ones((5, 5)), atol=1e-12)


def test_localize_errors(tmp_path, e0_files):
    phi1, phi2 = e0_files
    wrong_n = PhaseFunctionRepository().save(
        PhaseFunction.constant(GroupParams(N=3)), tmp_path / "three.fun"
    )
    assert invoke(tmp_path, "localize", wrong_n, "--phi1", phi1, "--phi2", phi2).exit_code == 3
    empty = tmp_path / "empty.fun"
    empty.write_text("")
    assert invoke(tmp_path, "localize", empty, "--phi1", phi1, "--phi2", phi2).exit_code == 6


def test_spectrum(tmp_path):
    path = OperatorRepository().save(OperatorMatrix.identity(GroupParams(N=3)), tmp_path / "I.mat")
    result = invoke(tmp_path, "--json", "spectrum", path)
    assert result.exit_code == 0, result.output
    assert json.loads(result.stdout) == {
        "N": 3,
        "tol": 1e-9,
        "support": [{"x": 0, "omega": 0}],
        "size": 1,
    }


@pytest.fixture
def small_config(tmp_path):
    path = tmp_path / "suite.cfg"
    path.write_text(f"n_list = 3\nensemble_size = 2\noutput_dir = {tmp_path / 'out'}\n")
    return path


def test_verify(tmp_path, small_config):
    result = runner.invoke(app, ["--config", str(small_config), "verify", "--check", "moyal"])
    assert result.exit_code == 0, result.output
    assert "moyal" in result.stdout
    summary = read_json(tmp_path / "out" / "verify.json")
    assert [r["name"] for r in summary["results"]] == ["moyal"]
    assert summary["results"][0]["status"] == "pass"


def test_verify_is_deterministic(tmp_path, small_config):
    outputs = []
    for _ in range(2):
        result = runner.invoke(app, ["--config", str(small_config), "--json", "verify"])
        assert result.exit_code == 0, result.output
        outputs.append((tmp_path / "out" / "verify.json").read_bytes())
    assert outputs[0] == outputs[1]


def test_verify_rejects_bad_configs(tmp_path):
    even = tmp_path / "even.cfg"
    even.write_text("n_list = 3, 4\n")
    assert runner.invoke(app, ["--config", str(even), "verify"]).exit_code == 3
    assert runner.invoke(app, ["--config", str(tmp_path / "absent.cfg"), "verify"]).exit_code == 5
    assert invoke(tmp_path, "verify", "--check", "no_such_check").exit_code == 5


def test_continuum(tmp_path):
    config = tmp_path / "suite.cfg"
    config.write_text("ensemble_size = 2\n")
    result = runner.invoke(app, ["--config", str(config), "--out", str(tmp_path), "continuum"])
    assert result.exit_code == 0, result.output
    summary = read_json(tmp_path / "continuum.json")
    statuses = {r["name"]: r["status"] for r in summary["results"]}
    assert statuses["gaussian_fourier_wigner_derived_form"] == "pass"
    assert statuses["gaussian_fourier_wigner_printed_form_deviation"] == "report-only"
    assert statuses["refinement"] == "report-only"
    for name in ("stft_gaussian", "fourier_wigner_gaussian"):
        assert (tmp_path / f"{name}.csv").read_text().startswith("x,omega,value\n")
        header = (tmp_path / f"{name}.fun").read_text().splitlines()[0]
        assert header == "QHA-FUN v1 N=256 GRID=continuum n=256 L=8.0"
