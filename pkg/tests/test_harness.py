import json

import pytest

from ncpb import closed_forms as cf
from ncpb import harness
from ncpb.enumeration import ETA_LABELS, THETA_LABELS, enumerate_colored
from ncpb.errors import CostGuardError, OracleError, RegistryError
from ncpb.harness import REGISTRY, format_table, oracle_crosscheck, verify, verify_all
from ncpb.involutions import eta, in_eta_fixed_set, in_theta_fixed_set, theta
from ncpb.poly import X
from ncpb.weights import partition_weight, total_weight


def values(report, n):
    return {p for _, p in report.values[n]}


def test_examples():
    assert values(verify("i6", [2]), 2) == {"2*x"}
    assert values(verify("i7", [1]), 1) == {"2*x"}
    assert values(verify("bi", [2]), 2) == {"1 - 6*x + 6*x^2"}
    assert values(verify("i4", [4]), 4) == {"6"}
    assert values(verify("dawson", [2]), 2) == {"2"}
    assert values(verify("i3", [0]), 0) == {"1"}


def test_registry_contents():
    assert harness.IDENTITY_IDS == ("i1", "i2", "i3", "i4", "i5", "re1", "re2", "i6", "dawson",
                                    "i7", "twice", "bi", "bi2", "bi3", "legendre")
    for spec in REGISTRY.values():
        assert len(spec.evaluators) >= 2
    names = dict(REGISTRY["i7"].evaluators)
    assert "WETA total over D_n" in names and "D_n direct sum" in names


def test_verify_all_small():
    for n_max in (0, 2, 4):
        reports = verify_all(n_max)
        assert [r.id for r in reports] == list(REGISTRY)
        assert all(r.passed for r in reports), format_table(reports)


def test_unknown_and_guard(monkeypatch):
    monkeypatch.delenv("NCPB_GUARD_OVERRIDE", raising=False)
    with pytest.raises(RegistryError):
        verify("nope", 2)
    with pytest.raises(CostGuardError):
        verify("i6", 6)
    # verify_all clips instead of raising
    r = [r for r in verify_all(6) if r.id == "i6"][0]
    assert r.n_values == list(range(6))


def test_negative_control():
    spec = REGISTRY["bi"].with_evaluator("closed RHS", lambda n: cf.bi_rhs(n) + (X if n == 3 else 0))
    reg = dict(REGISTRY, bi=spec)
    report = verify("bi", 4, registry=reg)
    assert not report.passed
    w = report.witness
    assert w["n"] == 3
    assert w["difference"] == "x"
    assert [rec["verdict"] for rec in report.records()] == ["pass", "pass", "pass", "fail", "pass"]
    assert "witness n=3" in format_table([report])


def test_records_are_deterministic():
    a = json.dumps([rec for r in verify_all(3) for rec in r.records()])
    b = json.dumps([rec for r in verify_all(3) for rec in r.records()])
    assert a == b


def test_oracle_crosscheck():
    assert oracle_crosscheck(0)["reiner"] == 1
    assert oracle_crosscheck(2)["bruteforce"] == 6
    assert oracle_crosscheck(4) == {"n": 4, "bruteforce": 70, "reiner": 70, "roundtrip": True}


def test_oracle_crosscheck_detects_mismatch(monkeypatch):
    real = harness.enumerate_ncb
    monkeypatch.setattr(harness, "enumerate_ncb", lambda n: list(real(n))[1:])
    with pytest.raises(OracleError):
        oracle_crosscheck(2)


def test_theta_eta_cancellation():
    # every 2-cycle cancels, so the signed total equals the fixed-set weight
    for n in range(0, 6):
        objs = list(enumerate_colored(n, THETA_LABELS))
        free = [c for c in objs if not in_theta_fixed_set(c)]
        for c in free:
            assert (partition_weight(c, "WTHETA") + partition_weight(theta(c), "WTHETA")).is_zero()
        fixed = [c for c in objs if in_theta_fixed_set(c)]
        assert total_weight(fixed, "WTHETA") == cf.i6_rhs(n)
        objs = list(enumerate_colored(n, ETA_LABELS))
        for c in objs:
            if not in_eta_fixed_set(c):
                assert (partition_weight(c, "WETA") + partition_weight(eta(c), "WETA")).is_zero()
        fixed = [c for c in objs if in_eta_fixed_set(c)]
        assert total_weight(fixed, "WETA") == cf.i7_rhs(n)
