#!/usr/bin/env python3
"""
Tests for the command-line entry point and configuration loading.
"""

import json

import pytest

from onan_moonshine.config import (
    DEFAULTS,
    load_config,
    scan_config_from_config,
    selmer_options_from_config,
)
from onan_moonshine.main import run
from onan_moonshine.selmer import load_completed


def test_classnum(capsys):
    assert run(["classnum", "-D", "-68"]) == 0
    assert capsys.readouterr().out.strip() == "h(-68)=4"


def test_classnum_with_hurwitz(capsys):
    assert run(["classnum", "-D", "-16", "--hurwitz"]) == 0
    assert capsys.readouterr().out.split() == ["h(-16)=1", "H(16)=3/2"]


def test_qexp(capsys):
    assert run(["qexp", "--fn", "j", "--prec", "4"]) == 0
    out = capsys.readouterr().out.strip()
    assert out == "q^-1 + 744 + 196884 q + 21493760 q^2 + 864299970 q^3 + O(q^4)"


def test_selmer_summary(capsys):
    assert run(["selmer", "-D", "-8", "--no-cross-check"]) == 0
    out = capsys.readouterr().out.strip()
    assert out == "D=-8 admissible; h=1; C3A=-188; C3A+h=-187 ≡ 3 (mod 5); Sel5 trivial"


def test_selmer_json(capsys):
    assert run(["--format", "json", "selmer", "-D", "-68", "--no-cross-check"]) == 0
    record = json.loads(capsys.readouterr().out)
    assert record["D"] == -68
    assert record["c3a_series"] == "-15834144"
    assert record["sel5_nontrivial"] is True


def test_trace(capsys):
    assert run(["trace", "--fn", "FON", "-D", "-7"]) == 0
    assert capsys.readouterr().out.strip() == "tr_1(FON|-7) = 8288256"


def test_curve_json(capsys):
    assert run(["--format", "json", "curve", "--twist", "-68"]) == 0
    record = json.loads(capsys.readouterr().out)
    assert record["coefficients"] == [0, 0, 0, -60051888, 82842141312]
    assert record["j_invariant"] == "111284641/50625"


def test_usage_errors_exit_2(capsys):
    assert run(["selmer"]) == 2
    assert run(["--bogus"]) == 2
    assert run(["--config", "/nonexistent/settings.yaml", "classnum", "-D", "-8"]) == 2


def test_computational_errors_exit_1(capsys):
    assert run(["selmer", "-D", "-11"]) == 1
    assert "mod 5" in capsys.readouterr().err
    assert run(["classnum", "-D", "-5"]) == 1


def test_scan_writes_results(tmp_path, capsys):
    out = tmp_path / "scan.jsonl"
    assert run(["scan", "--from", "-30", "--no-cross-check", "--out", str(out)]) == 0
    assert load_completed(out) == {-8, -23}
    assert capsys.readouterr().out


def test_default_config():
    config = load_config()
    for section, values in DEFAULTS.items():
        assert set(values) <= set(config[section])
    assert config["numerics"]["twisted_trace_sign"] == -1


def test_config_env_override(monkeypatch):
    monkeypatch.setenv("ONAN_PRECISION", "40")
    assert load_config()["series"]["mt_precision"] == 40
    monkeypatch.setenv("ONAN_PRECISION", "forty")
    with pytest.raises(ValueError):
        load_config()


def test_config_file_overrides_defaults(tmp_path):
    path = tmp_path / "settings.yaml"
    path.write_text("selmer:\n  cross_check: false\n")
    config = load_config(path)
    assert config["selmer"]["cross_check"] is False
    assert config["selmer"]["sha_safety_factor"] == DEFAULTS["selmer"]["sha_safety_factor"]


def test_missing_config_file(tmp_path):
    with pytest.raises(FileNotFoundError):
        load_config(tmp_path / "missing.yaml")


def test_option_bundles():
    config = load_config()
    opts = selmer_options_from_config(config, with_lvalue=True, precision=None)
    assert opts.with_lvalue
    assert opts.precision == config["series"]["mt_precision"]
    scan_config = scan_config_from_config(config, -100, options=opts, num_workers=2)
    assert scan_config.num_workers == 2
    assert scan_config.options is opts
    assert scan_config.D_max == -1


def test_numeric_flags_are_echoed_in_json(capsys):
    assert run(["--format", "json", "trace", "--fn", "FON", "-D", "-7", "--tol", "1e-8", "--dps", "60"]) == 0
    record = json.loads(capsys.readouterr().out)
    assert record["rounded"] == "8288256"
    assert record["settings"]["tolerance"] == 1e-8
    assert record["settings"]["dps"] == 60

    assert run(["--format", "json", "identities", "--name", "j_i", "--dps", "40"]) == 0
    record = json.loads(capsys.readouterr().out)
    assert [check["name"] for check in record["checks"]] == ["j_i"]
    assert record["settings"]["dps"] == 40


@pytest.mark.parametrize("argv", [
    ["qexp", "--fn", "j", "--prec", "3"],
    ["classnum", "-D", "-23"],
    ["mt-series", "--prec", "10"],
    ["curve", "--twist", "-8"],
    ["lvalue", "--tol", "1e-6"],
    ["selmer", "-D", "-8", "--no-cross-check"],
])
def test_every_json_record_carries_settings(capsys, argv):
    assert run(["--format", "json", *argv]) == 0
    settings = json.loads(capsys.readouterr().out)["settings"]
    assert set(settings) >= {"tolerance", "dps", "prime_bound", "mt_precision", "l_tolerance"}


def test_lvalue_tolerance_flag(capsys):
    assert run(["--format", "json", "lvalue", "--tol", "1e-6"]) == 0
    assert json.loads(capsys.readouterr().out)["settings"]["l_tolerance"] == 1e-6


def test_selmer_flags_reach_options(capsys):
    argv = ["--format", "json", "selmer", "-D", "-8", "--no-cross-check", "--precision", "25", "--dps", "40"]
    assert run(argv) == 0
    record = json.loads(capsys.readouterr().out)
    assert record["opt_precision"] == 25
    assert record["opt_dps"] == 40
    assert record["settings"]["mt_precision"] == 25


def test_scan_json_lines_carry_settings(tmp_path, capsys):
    out = tmp_path / "scan.jsonl"
    argv = ["--format", "json", "scan", "--from", "-30", "--no-cross-check", "--precision", "25", "--out", str(out)]
    assert run(argv) == 0
    lines = [json.loads(line) for line in capsys.readouterr().out.splitlines()]
    assert [line["D"] for line in lines] == [-8, -23]
    assert all(line["settings"]["mt_precision"] == 25 for line in lines)


def test_curve_counts_on_minimal_model_of_e15(capsys):
    assert run(["--format", "json", "curve", "--ap", "2,3,5", "--prime-bound", "500"]) == 0
    record = json.loads(capsys.readouterr().out)
    assert record["a_p"] == {"2": -1, "3": -1, "5": 1}
    assert record["a_p_model"] == [1, 1, 1, -10, -10]
    assert record["settings"]["prime_bound"] == 500

    assert run(["--format", "json", "curve", "--ap", "7", "--short-model"]) == 0
    record = json.loads(capsys.readouterr().out)
    assert record["a_p_model"] == record["coefficients"]


def test_prime_bound_flag_is_enforced(capsys):
    assert run(["curve", "--ap", "101", "--prime-bound", "50"]) == 1
    assert capsys.readouterr().err
