import math

import pytest

import thetakit


def test_version():
    assert thetakit.__version__.count(".") == 2


def test_eval_a_matches_reference():
    v = thetakit.eval_a("2", "3", digits=40)
    assert v["value"].startswith("7.347200992619984331776078639352746")
    assert v["forms"] == ["theta_quotient", "alternative_theta_quotient", "eta_quotient"]
    assert math.isclose(v["float"], 0.7347200992619984)


def test_trivial_degree():
    assert thetakit.eval_b("3", "1", digits=30)["value"].startswith("1.00000000000000000000")


def test_invariant_and_nome():
    g = thetakit.eval_invariant("G", "5", digits=30)
    assert math.isclose(g["float"], ((1 + 5**0.5) / 2) ** 0.25, rel_tol=1e-14)
    q = thetakit.eval_nome("4", "1", digits=20)
    assert math.isclose(q["float"], math.exp(-2 * math.pi), rel_tol=1e-14)


def test_radicals():
    lhs = thetakit.eval_radical("sqrt(39 + 12*sqrt(10))", digits=60)["value"]
    rhs = thetakit.eval_radical("sqrt(15) + 2*sqrt(6)", digits=60)["value"]
    assert lhs == rhs
    with pytest.raises(ValueError):
        thetakit.eval_radical("sqrt(2 - 3)")


def test_identity_suite():
    assert len(thetakit.identity_ids()) == 20
    report = thetakit.verify_identity("pq_deg7", digits=60, series_order=240, probes=["0.1", "natural"])
    assert report["summary"]["success"]
    assert [c["inputs"]["mode"] for c in report["checks"]] == ["numeric", "numeric", "series"]


def test_corollaries_report_misprints():
    report = thetakit.verify_corollary(digits=60)
    failed = sorted(c["id"] for c in report["checks"] if c["verdict"] == "fail")
    assert failed == ["a_26_5", "a_38_5"]


def test_reproduce_single():
    report = thetakit.reproduce("a_6_13", digits=60)
    (check,) = report["checks"]
    assert check["verdict"] == "pass"
    assert check["digits"] == 60


def test_unknown_id():
    with pytest.raises(IndexError):
        thetakit.verify_identity("no_such_identity")
