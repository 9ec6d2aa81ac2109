from fractions import Fraction

import pytest

from modules.report import FAIL, PASS, VerificationReport, render_exact
from modules.verification import (
    REGISTRY,
    VerifyOptions,
    identity_ids,
    run_all,
    run_identity,
)

SMALL = VerifyOptions(max_index=6, order=8, samples=3, power_sum_n=20, newton_degree=5,
                      inverse_factorial_m=2, inverse_factorial_k=3)

REQUIRED_IDS = [
    "eq1.1", "eq1.2", "eq1.9", "eq1.10", "eq1.11", "eq3.5", "eq3.10", "eq5.3", "eq5.4",
    "eq5.6", "eq6.3", "eq7.6", "eq7.13", "eq7.14", "eq7.15", "eq7.18", "eq7.19", "eq8.3",
    "eq8.4", "eq9.1", "eq9.2", "eq9.6", "eq9.7", "eq10.2", "eq10.3",
]


def test_registry_holds_every_identity():
    for identity_id in REQUIRED_IDS + ["eq1.4", "eq1.8", "eq3.9", "eq6.2", "eq9.3", "eq10.1"]:
        assert identity_id in REGISTRY


def test_identity_ids_are_in_equation_order():
    ids = identity_ids()
    assert ids[0] == "eq1.1"
    assert ids.index("eq1.11") > ids.index("eq1.10")
    assert ids.index("eq10.1") > ids.index("eq9.7")


@pytest.mark.parametrize("identity_id", sorted(REGISTRY))
def test_each_identity_passes_on_small_ranges(identity_id):
    report = run_identity(identity_id, SMALL)
    assert report.identity_id == identity_id
    assert report.checked > 0
    assert report.failures == []
    assert report.status == PASS


def test_orthogonality_sweep_counts_pairs():
    report = run_identity("eq10.2", VerifyOptions(max_index=20))
    assert report.checked == 441
    assert report.passed


def test_bernoulli_routes_at_order_24():
    assert run_identity("eq8.3", VerifyOptions(order=24)).passed


def test_unknown_identity():
    with pytest.raises(ValueError):
        run_identity("eq99.9")


def test_runs_are_deterministic_for_a_seed():
    first = run_identity("eq1.2", VerifyOptions(max_index=4, samples=2, seed=7))
    second = run_identity("eq1.2", VerifyOptions(max_index=4, samples=2, seed=7))
    assert first.to_dict() == second.to_dict()


def test_run_all_covers_registry():
    reports = run_all(SMALL)
    assert [r.identity_id for r in reports] == identity_ids()
    assert all(r.passed for r in reports)


def test_full_default_suite_passes():
    assert all(r.passed for r in run_all(VerifyOptions()))


def test_report_records_failures():
    report = VerificationReport("eqX", "test")
    assert report.check({"m": 1}, 1, 1)
    assert not report.check({"m": 2}, Fraction(1, 2), 1)
    assert report.checked == 2
    assert report.status == FAIL
    assert report.to_dict() == {
        "identity_id": "eqX",
        "range": "test",
        "checked": 2,
        "failures": [{"inputs": {"m": 2}, "expected": "1/2", "actual": 1}],
        "status": "fail",
    }


def test_merge_adds_counts():
    a = VerificationReport("eqX", "a", checked=3)
    b = VerificationReport("eqX", "b", checked=2, failures=[({}, 1, 2)])
    a.merge(b)
    assert a.checked == 5
    assert not a.passed


def test_render_exact():
    assert render_exact(Fraction(4, 2)) == 2
    assert render_exact([Fraction(-1, 2), 3]) == ["-1/2", 3]
    assert render_exact({"x": Fraction(1, 3)}) == {"x": "1/3"}
