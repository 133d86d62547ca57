import inspect
import json

import pytest

from corona_spectra import corona, coronals
from corona_spectra.algebra import RationalFunction
from corona_spectra.verify import SUITES, SweepConfig, all_match, family_instances, run_suite, summarize
from corona_spectra.verify.suites import VerificationReport, run_trial, thread_cap


def _public_formula_ops():
    ops = set()
    for mod in (coronals, corona):
        for name, fn in inspect.getmembers(mod, inspect.isfunction):
            if fn.__module__ != mod.__name__ or name.startswith("_"):
                continue
            if name in ("parse_family_spec", "validate_partition", "normalize_direction",
                        "build_corona", "copy_count", "kron_schur_block", "coronal_from_quotient"):
                continue  # plumbing, exercised through the formula suites
            ops.add(name)
    ops |= {f"arc_corona_charpoly_closed:{name}" for name in corona.COROLLARY_NAMES}
    return ops


def test_every_formula_op_is_covered():
    covered = {op for s in SUITES.values() for op in s.covers}
    missing = _public_formula_ops() - covered
    assert not missing, f"formula ops without a verification suite: {sorted(missing)}"


def test_sweep_is_deterministic_byte_for_byte():
    config = SweepConfig(seed=11, trials=4, max_n=6)
    first = json.dumps([r.to_json() for r in run_suite(config)], sort_keys=True)
    second = json.dumps([r.to_json() for r in run_suite(config)], sort_keys=True)
    assert first == second


def test_parallel_matches_serial():
    config = SweepConfig(seed=3, trials=3, max_n=5, suites=("vertex-corona-A", "complement"))
    assert run_suite(config, workers=1) == run_suite(config, workers=2)


def test_default_sweep_all_match():
    reports = run_suite(SweepConfig(seed=1, trials=5))
    bad = [r for r in reports if r.verdict != "match"]
    assert not bad, bad[:3]
    assert set(summarize(reports)) == set(SUITES)


def test_corrupted_formula_is_caught(monkeypatch):
    real = coronals.coronal_path

    def broken(n, kind):
        return real(n, kind) + RationalFunction(1)

    monkeypatch.setattr(coronals, "coronal_path", broken)
    reports = run_suite(SweepConfig(seed=1, trials=12, suites=("coronal-formulas",)))
    path_reports = [r for r in reports if r.instance.get("family") == "path"]
    assert path_reports and all(r.verdict == "mismatch" for r in path_reports)
    assert not all_match(reports)


def test_corrupted_corona_theorem_is_caught(monkeypatch):
    real = corona.arc_corona_charpoly
    monkeypatch.setattr(corona, "arc_corona_charpoly", lambda *a: real(*a) * 2)
    reports = run_suite(SweepConfig(seed=1, trials=3, suites=("arc-corona-Q",)))
    assert all(r.verdict == "mismatch" for r in reports)


def test_tournament_trial_zero_is_pinned():
    (report,) = run_trial("tournament-backward-arc", 99, 0, SweepConfig(seed=99))
    assert report.instance["d1"] == {"n": 2, "arcs": [[0, 1]]}
    assert report.instance["d2"] == {"n": 1, "arcs": []}
    assert report.verdict == "match"
    assert report.actual == {"var": "lambda", "coeffs": ["-1", "0", "0", "1"]}


def test_oracle_failure_is_skipped(monkeypatch):
    from corona_spectra.verify import suites

    def explode(m):
        raise RuntimeError("boom")

    monkeypatch.setattr(suites, "oracle_charpoly", explode)
    reports = run_suite(SweepConfig(seed=1, trials=2, suites=("charpoly-oracle",)))
    assert {r.verdict for r in reports} == {"skipped"}


def test_report_json_excludes_timing():
    r = VerificationReport("s", 0, {}, 1, 1, "match", timing=0.5)
    assert "timing" not in r.to_json() and r.to_json(include_timing=True)["timing"] == 0.5
    assert r == VerificationReport("s", 0, {}, 1, 1, "match", timing=9.0)


def test_config_validation():
    for kwargs in [dict(seed=-1), dict(seed=2**64), dict(trials=0), dict(max_n=0), dict(density=(0.9, 0.1))]:
        with pytest.raises(ValueError):
            SweepConfig(**kwargs)
    with pytest.raises(ValueError):
        SweepConfig(suites=("nope",)).suite_names()


def test_thread_cap_env(monkeypatch):
    monkeypatch.setenv("CORONA_SPECTRA_THREADS", "3")
    assert thread_cap() == 3
    monkeypatch.setenv("CORONA_SPECTRA_THREADS", "many")
    assert thread_cap() == 1


def test_family_instances_are_realizable():
    insts = list(family_instances(5))
    assert insts
    assert len(set(insts)) == len(insts)
    for spec in insts:
        assert spec.realize().n <= 5
