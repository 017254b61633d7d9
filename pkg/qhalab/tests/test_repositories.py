import json

import numpy as np
import pytest

from qhalab.core.exceptions import DimensionMismatchError, ParseError, UnsupportedModulusError
from qhalab.models import GroupParams, PhaseFunction, PhasePlane, SampledLine
from qhalab.repositories import (
    OperatorRepository,
    PhaseFunctionRepository,
    PhasePlaneRepository,
    ReportRepository,
    SignalRepository,
)
from qhalab.schemas import PointSchema, SpectrumReport


def test_values_survive_a_save_load_cycle_bit_for_bit(tmp_path, f, S, psi):
    functions, operators, signals = PhaseFunctionRepository(), OperatorRepository(), SignalRepository()
    hard = f.with_values(f.values * np.pi / 7)

    loaded_f = functions.load(functions.save(hard, tmp_path / "f.fun"))
    loaded_S = operators.load(operators.save(S, tmp_path / "S.mat"))
    loaded_psi = signals.load(signals.save(psi, tmp_path / "psi.sig"))

    np.testing.assert_array_equal(loaded_f.values, hard.values)
    np.testing.assert_array_equal(loaded_S.entries, S.entries)
    np.testing.assert_array_equal(loaded_psi.values, psi.values)
    assert loaded_S.params == S.params


def test_phase_plane_header(tmp_path, line):
    plane = PhasePlane(values=np.full((line.n, line.n), 0.5 - 0.25j), line=line)
    repo = PhasePlaneRepository()
    text = repo.dumps(plane)
    assert text.splitlines()[0] == "QHA-FUN v1 N=64 GRID=continuum n=64 L=4.0"
    loaded = repo.loads(text)
    assert loaded.line == line
    np.testing.assert_array_equal(loaded.values, plane.values)
    with pytest.raises(ParseError, match="continuum"):
        PhaseFunctionRepository().loads(text)


def test_file_layout(params):
    rows = "".join(f"{t},{t}.5,-1\n" for t in range(params.N))
    repo = SignalRepository()
    lines = repo.dumps(repo.loads(f"QHA-SIG v1 N={params.N}\n" + rows)).splitlines()
    assert lines[0] == f"QHA-SIG v1 N={params.N}"
    assert lines[2] == "1,1.5,-1"


def body(second_row: str) -> str:
    """A 3x3 QHA-FUN file whose second data row is replaced."""
    rows = [f"{x},{w},1,0" for x in range(3) for w in range(3)]
    rows[1] = second_row
    return "QHA-FUN v1 N=3\n" + "\n".join(rows) + "\n"


@pytest.mark.parametrize(
    "text, line",
    [
        ("", 1),
        ("QHA-MAT v1 N=3\n", 1),
        ("QHA-FUN v2 N=3\n", 1),
        ("QHA-FUN v1 N=3 N=3\n", 1),
        ("QHA-FUN v1 N=three\n", 1),
        (body("0,1,1"), 3),
        (body("0,2,1,0"), 3),
        (body("0,1,nan,0"), 3),
        (body("0,1,x,0"), 3),
        (body("0,1,inf,0"), 3),
    ],
)
def test_parse_errors_name_the_line(text, line):
    with pytest.raises(ParseError) as excinfo:
        PhaseFunctionRepository().loads(text, "bad.fun")
    assert excinfo.value.line == line
    assert str(excinfo.value).startswith(f"bad.fun:{line}: ")


def test_short_and_long_files():
    header = "QHA-SIG v1 N=3\n"
    rows = [f"{t},1,0\n" for t in range(4)]
    with pytest.raises(ParseError) as short:
        SignalRepository().loads(header + "".join(rows[:2]))
    assert short.value.line == 4
    with pytest.raises(ParseError) as long:
        SignalRepository().loads(header + "".join(rows))
    assert long.value.line == 5


def test_header_validates_modulus():
    text = "QHA-SIG v1 N=4\n" + "".join(f"{t},1,0\n" for t in range(4))
    with pytest.raises(UnsupportedModulusError):
        SignalRepository().loads(text)


def test_missing_file(tmp_path):
    with pytest.raises(ParseError, match="cannot read"):
        OperatorRepository().load(tmp_path / "absent.mat")


def test_reports_and_heatmaps(tmp_path, params):
    reports = ReportRepository(tmp_path / "out")
    report = SpectrumReport(N=params.N, tol=1e-9, support=[PointSchema(x=0, omega=0)], size=1)
    path = reports.save_json(report, "spectrum.json")
    assert json.loads(path.read_text())["support"] == [{"x": 0, "omega": 0}]

    g = PhaseFunction.constant(params, -2.0)
    csv = reports.save_heatmap(g, "heat.csv").read_text().splitlines()
    assert csv[0] == "x,omega,value"
    assert len(csv) == params.size + 1
    assert csv[1] == "0,0,2"


def test_spectrum_report_counts_support():
    with pytest.raises(ValueError):
        SpectrumReport(N=3, tol=1e-9, support=[], size=2)


def test_shape_checked_on_construction():
    with pytest.raises(DimensionMismatchError):
        PhaseFunction(values=np.zeros((3, 4)), params=GroupParams(N=3))
    with pytest.raises(DimensionMismatchError):
        PhasePlane(values=np.zeros((3, 3)), line=SampledLine(n=16, L=2.0))
