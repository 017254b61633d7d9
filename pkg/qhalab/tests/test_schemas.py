import json

import pytest
from pydantic import ValidationError

from qhalab.core.config import settings
from qhalab.core.exceptions import ConfigError, UnsupportedModulusError
from qhalab.schemas import CheckResult, CheckSummary, SuiteConfig


def test_defaults():
    config = SuiteConfig()
    assert config.n_list == settings.DEFAULT_N_LIST
    assert config.seed == settings.DEFAULT_SEED
    assert config.tolerances == {}
    assert config.tolerance("moyal", 1e-12) == 1e-12


def test_config_file(tmp_path):
    path = tmp_path / "suite.cfg"
    path.write_text(
        "# finite suites\n"
        "n_list = 3, 5,7\n"
        "seed = 7\n"
        "ensemble_size = 4\n"
        "continuum_L = 4.0\n"
        "tol.moyal = 1e-9\n"
        "output_dir = reports\n"
    )
    config = SuiteConfig.from_file(path, seed=11, output_dir=None)
    assert config.n_list == [3, 5, 7]
    assert config.seed == 11
    assert config.ensemble_size == 4
    assert config.continuum_L == 4.0
    assert config.tolerances == {"moyal": 1e-9}
    assert config.output_dir.name == "reports"


def test_even_modulus_names_the_requirement():
    with pytest.raises(UnsupportedModulusError, match="odd"):
        SuiteConfig(n_list=[3, 4])


@pytest.mark.parametrize(
    "kwargs",
    [{"n_list": []}, {"tolerances": {"moyal": 0.0}}, {"tolerances": {"moyal": -1e-3}}],
)
def test_config_errors(kwargs):
    with pytest.raises(ConfigError):
        SuiteConfig(**kwargs)


@pytest.mark.parametrize("kwargs", [{"ensemble_size": 0}, {"seed": -1}, {"seed": 2**64}])
def test_config_ranges(kwargs):
    with pytest.raises(ValidationError):
        SuiteConfig(**kwargs)


def test_missing_config_file(tmp_path):
    with pytest.raises(ConfigError, match="not readable"):
        SuiteConfig.from_file(tmp_path / "absent.cfg")


def test_check_status_follows_threshold():
    assert CheckResult.thresholded("a", 1e-13, 1e-12).status == "pass"
    assert CheckResult.thresholded("a", 1e-11, 1e-12).status == "fail"
    assert CheckResult.report_only("b", 0.7).threshold is None
    with pytest.raises(ValidationError):
        CheckResult(name="a", status="pass", measured=1.0, threshold=0.5)
    with pytest.raises(ValidationError):
        CheckResult(name="a", status="fail", measured=1.0)


def test_summary_json_has_no_runtimes():
    summary = CheckSummary(
        command="verify",
        seed=1,
        results=[
            CheckResult.thresholded("a", 0.0, 1e-12, runtime=3.5),
            CheckResult.thresholded("b", 1.0, 1e-12),
        ],
    )
    data = json.loads(summary.model_dump_json())
    assert "runtime" not in data["results"][0]
    assert [r.name for r in summary.failed] == ["b"]
