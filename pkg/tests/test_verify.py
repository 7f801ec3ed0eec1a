import json

import pytest

from diracoh import DomainError, SweepPlan, Weight, build_root_system, check_theorem, run_sweep
from diracoh.verify import ALL_CHECKS, default_seeds


def test_default_seeds_cover_required_regimes():
    seeds = default_seeds(2)
    assert Weight([0, 0]) in seeds
    assert Weight([-1, 0]) in seeds and Weight([0, -1]) in seeds
    assert any(any(c.denominator != 1 for c in s) for s in seeds)


def test_a1_sweep_all_pass():
    report = run_sweep(SweepPlan(systems=("A1",)))
    assert report.passed
    summary = report.summary()
    assert summary["param_chain"]["pass"] >= 3  # at least 3 weights per parabolic
    assert summary["param_chain"]["fail"] == 0
    assert report.coverage["A1"]["complete"]


def test_empty_plan():
    report = run_sweep(SweepPlan(systems=()))
    assert report.records == [] and report.passed


def test_unknown_check_rejected():
    with pytest.raises(DomainError):
        run_sweep(SweepPlan(systems=("A1",), checks=("no_such_check",)))


def test_incomplete_coverage_flagged():
    report = run_sweep(
        SweepPlan(systems=("A1",), seeds=("0",), checks=("structural_counts",))
    )
    assert not report.coverage["A1"]["singular_seed"]
    assert not report.coverage["A1"]["complete"]


def test_report_determinism():
    plan = SweepPlan(systems=("A2",))
    first = run_sweep(plan).to_json()
    second = run_sweep(plan).to_json()
    assert first == second
    assert "timings" not in json.loads(first)


def test_workers_do_not_change_report():
    plan = SweepPlan(systems=("A2",), checks=("param_chain", "geometric_params_check", "algebraic_params_check"))
    assert run_sweep(plan).to_json() == run_sweep(plan, workers=4).to_json()


def test_timings_optional():
    plan = SweepPlan(systems=("A1",), checks=("structural_counts",))
    report = run_sweep(plan)
    assert "timings" in report.to_json_dict(include_timings=True)


def test_check_theorem_dispatch():
    a2 = build_root_system("A2")
    rec = check_theorem("geometric_params_check", a2, (0,), Weight([0, 0]))
    assert rec.passed and rec.parabolic == (1,)
    alias = check_theorem("geometric", a2, (0,), Weight([0, 0]))
    assert alias.passed and alias.name == "geometric_params_check"
    rec = check_theorem("para_verma_simple", a2, (0,), Weight([0, 0]))
    assert rec.passed and rec.name == "parabolic_simplicity"
    rec = check_theorem("verma_simplicity", a2, (), Weight([-1, -1]))
    assert rec.passed and rec.details["simple"]
    rec = check_theorem("parabolic_simplicity", a2, (0,), Weight([0, 0]))
    assert rec.passed and not rec.details["simple"]
    rec = check_theorem("linkage_equivalences", a2, (0,), Weight([0, 0]), Weight([0, 0]))
    assert rec.passed
    rec = check_theorem("structural_counts", a2)
    assert rec.passed
    rec = check_theorem("param_injectivity", a2, (0,))
    assert rec.passed
    with pytest.raises(DomainError):
        check_theorem("nonsense", a2)
    with pytest.raises(DomainError):
        check_theorem("param_chain", a2)  # needs a weight


def test_corollary_equivalence_record():
    a2 = build_root_system("A2")
    rec = check_theorem("parabolic_simplicity", a2, (0,), Weight([0, 0]))
    # both sides false, equivalence holds
    assert rec.passed and rec.details["simple"] is False


def test_known_failures_are_reported_not_raised():
    # the hull-set equality genuinely fails on the orthogonal-pair blocks
    report = run_sweep(SweepPlan(systems=("B2",), checks=("geometric_params_check",)))
    assert not report.passed
    fails = report.failures()
    assert all(r.name == "geometric_params_check" for r in fails)
    assert all(r.details["linkage_matches"] for r in fails)
    table = report.to_table()
    assert "RESULT: FAIL" in table


def test_all_checks_have_names():
    assert len(set(ALL_CHECKS)) == len(ALL_CHECKS)


def test_resource_cap_surfaces_per_system():
    report = run_sweep(SweepPlan(systems=("E8", "A1"), checks=("structural_counts",)))
    assert not report.passed
    fails = report.failures()
    assert len(fails) == 1 and fails[0].name == "system_setup"
    assert fails[0].system == "E8"
    assert any(r.system == "A1" and r.passed for r in report.records)


def test_composite_type_sweep():
    report = run_sweep(SweepPlan(systems=("A2xA1",)))
    assert report.passed


def test_known_rank3_failure_pattern_is_stable():
    """Regression net: the checks that encode the genuinely-false statements
    fail on the principal block of A3 with exactly the known counts."""
    plan = SweepPlan(
        systems=("A3",),
        parabolics=((),),
        seeds=("0,0,0",),
        checks=("geometric_params_check", "linkage_equivalences", "kostant_comparison"),
    )
    report = run_sweep(plan)
    counts = {}
    for r in report.failures():
        counts[r.name] = counts.get(r.name, 0) + 1
    assert counts == {
        "geometric_params_check": 4,
        "linkage_equivalences": 8,
        "kostant_comparison": 8,
    }
