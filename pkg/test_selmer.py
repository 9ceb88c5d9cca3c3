#!/usr/bin/env python3
"""
Tests for admissibility, the Selmer verdict and the resumable scanner.
"""

import pytest

from onan_moonshine.errors import NotAdmissible, UnknownCoefficient
from onan_moonshine.selmer import (
    G15_TABLE,
    ScanConfig,
    SelmerOptions,
    SelmerVerdict,
    ShaStatement,
    admissible,
    admissible_range,
    g15_coeff,
    load_completed,
    load_results,
    run_scan,
    save_results,
    scan,
    selmer_criterion,
)
from onan_moonshine.selmer import scanner

FAST = SelmerOptions(cross_check=False)


def test_admissibility():
    assert admissible(-8)
    assert admissible(-68)
    report = admissible(-11)
    assert not report
    assert report.reasons() == ["-11 = 4 mod 5, need 2 or 3"]
    # -53 = 3 mod 4 is not a discriminant
    assert not admissible(-53)
    assert "-53 is not a fundamental discriminant" in admissible(-53).reasons()
    assert not admissible(40).negative
    with pytest.raises(ValueError):
        admissible(0)


def test_admissible_range():
    assert admissible_range(-100, -1) == [-8, -23, -47, -68, -83]
    assert admissible_range(-7, -1) == []


def test_verdict_at_minus_8():
    verdict = selmer_criterion(-8)
    assert verdict.h == 1
    assert verdict.c3a_series == -188
    assert verdict.c3a_traces == -188
    assert verdict.congruence == 3
    assert not verdict.sel5_nontrivial
    assert not verdict.sha_statement.applies
    assert verdict.summary_line() == (
        "D=-8 admissible; h=1; C3A=-188; C3A+h=-187 ≡ 3 (mod 5); Sel5 trivial"
    )


def test_verdict_at_minus_68():
    verdict = selmer_criterion(-68, FAST)
    assert verdict.h == 4
    assert verdict.c3a_series == -15834144
    assert verdict.c3a_traces is None
    assert verdict.congruence == 0
    assert verdict.sel5_nontrivial


def test_sha_clause_with_nonzero_l_value():
    verdict = selmer_criterion(-8, SelmerOptions(cross_check=False, with_lvalue=True))
    assert verdict.l_twist is not None
    assert verdict.sha_statement == ShaStatement(True, False)
    assert str(verdict.sha_statement) == "Applies(mod5_divides=False)"


def test_sha_clause_skipped_for_vanishing_l_value():
    verdict = selmer_criterion(-68, SelmerOptions(cross_check=False, with_lvalue=True))
    assert str(verdict.sha_statement) == "NotApplicable"
    assert verdict.sha_statement.mod5_divides is None


def test_inadmissible_discriminant_rejected():
    with pytest.raises(NotAdmissible):
        selmer_criterion(-11)
    with pytest.raises(NotAdmissible):
        selmer_criterion(-20)


def test_g15_table():
    assert g15_coeff(-3) == 1
    assert g15_coeff(-8) == -2
    assert sorted(G15_TABLE) == [-20, -15, -8, -3]
    with pytest.raises(UnknownCoefficient):
        g15_coeff(-4)


def test_verdict_record_round_trip():
    verdict = selmer_criterion(-8, SelmerOptions(with_lvalue=True))
    record = verdict.to_dict()
    assert record["c3a_series"] == "-188"
    assert record["opt_with_lvalue"] is True
    assert SelmerVerdict.from_dict(record) == verdict


def test_scan_config_validation():
    with pytest.raises(ValueError):
        ScanConfig(D_min=-100, D_max=0)
    config = ScanConfig(D_min=-100, output_file="out.jsonl")
    assert config.output_file.suffix == ".jsonl"
    assert "range=[-100, -1]" in repr(config)


def test_scan_in_memory():
    verdicts = scan(-70, -1, FAST)
    assert [v.D for v in verdicts] == [-8, -23, -47, -68]
    assert [v.sel5_nontrivial for v in verdicts][-1]
    assert scan(-1, -5, FAST) == []


@pytest.mark.parametrize("name", ["verdicts.jsonl", "verdicts.csv"])
@pytest.mark.parametrize("with_lvalue", [False, True])
def test_results_file_round_trip(tmp_path, name, with_lvalue):
    path = tmp_path / name
    opts = SelmerOptions(cross_check=False, with_lvalue=with_lvalue)
    verdicts = run_scan(ScanConfig(-70, -1, opts, output_file=path))
    assert load_completed(path) == {-8, -23, -47, -68}
    assert load_results(path) == verdicts
    if with_lvalue:
        assert load_results(path)[0].l_twist.value == verdicts[0].l_twist.value


def test_empty_results_file(tmp_path):
    path = tmp_path / "empty.jsonl"
    save_results([], path)
    assert path.exists()
    assert load_results(path) == []
    assert load_completed(tmp_path / "missing.jsonl") == set()


def test_scan_resumes(tmp_path, monkeypatch):
    path = tmp_path / "verdicts.jsonl"
    run_scan(ScanConfig(-30, -1, FAST, output_file=path))
    assert load_completed(path) == {-8, -23}

    computed = []
    original = scanner._verdict_for

    def tracking(D, opts):
        computed.append(D)
        return original(D, opts)

    monkeypatch.setattr(scanner, "_verdict_for", tracking)
    verdicts = run_scan(ScanConfig(-50, -1, FAST, output_file=path))
    assert computed == [-47]
    assert [v.D for v in verdicts] == [-8, -23, -47]

    computed.clear()
    run_scan(ScanConfig(-50, -1, FAST, output_file=path, resume=False))
    assert computed == [-8, -23, -47]


@pytest.mark.parametrize("name", ["verdicts.jsonl", "verdicts.csv"])
def test_interrupted_scan_keeps_finished_verdicts(tmp_path, monkeypatch, name):
    path = tmp_path / name
    original = scanner._verdict_for
    calls = []

    def interrupted(D, opts):
        calls.append(D)
        if len(calls) == 3:
            raise KeyboardInterrupt
        return original(D, opts)

    monkeypatch.setattr(scanner, "_verdict_for", interrupted)
    with pytest.raises(KeyboardInterrupt):
        run_scan(ScanConfig(-70, -1, FAST, output_file=path))
    assert load_completed(path) == {-8, -23}

    computed = []

    def tracking(D, opts):
        computed.append(D)
        return original(D, opts)

    monkeypatch.setattr(scanner, "_verdict_for", tracking)
    verdicts = run_scan(ScanConfig(-70, -1, FAST, output_file=path))
    assert computed == [-47, -68]
    assert [v.D for v in verdicts] == [-8, -23, -47, -68]
    assert [v.D for v in load_results(path)] == [-8, -23, -47, -68]


def test_resume_recomputes_verdicts_with_other_options(tmp_path, monkeypatch):
    path = tmp_path / "verdicts.jsonl"
    run_scan(ScanConfig(-30, -1, FAST, output_file=path))

    computed = []
    original = scanner._verdict_for

    def tracking(D, opts):
        computed.append(D)
        return original(D, opts)

    monkeypatch.setattr(scanner, "_verdict_for", tracking)
    finer = SelmerOptions(cross_check=False, precision=40)
    verdicts = run_scan(ScanConfig(-30, -1, finer, output_file=path))
    assert computed == [-8, -23]
    assert all(v.options["precision"] == 40 for v in verdicts)
    assert [v.options["precision"] for v in load_results(path)] == [40, 40]


def test_results_outside_range_are_kept(tmp_path):
    path = tmp_path / "verdicts.jsonl"
    run_scan(ScanConfig(-30, -1, FAST, output_file=path))
    run_scan(ScanConfig(-50, -40, FAST, output_file=path))
    assert load_completed(path) == {-8, -23, -47}
