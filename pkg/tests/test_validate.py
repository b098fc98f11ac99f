from su3singlet.basis import SingletLabelSU3
from su3singlet.validate import (CoeffFormulaId, audit_reference, non_orthogonal_pairs,
                                 thread_count, validate_against_oracle, verify_su2)


def test_examples():
    assert validate_against_oracle(0, ["a+(1).a(2)"]) == []
    assert validate_against_oracle(2, ["a+(1).b+(2)"]) == []
    assert validate_against_oracle(3, ["eps(a+(1),a+(2),a+(3))"]) == []


def test_formula_ids():
    assert str(CoeffFormulaId("d", 1)) == "d_1"
    assert str(CoeffFormulaId("i", 2, unnormalized=True)) == "ibar_2"
    assert str(CoeffFormulaId("c", 1, sigma="231", conj=True)) == "c_1[legs->231]*"


def test_audit_finds_known_items():
    recs = audit_reference(6)
    names = {r.formula for r in recs}
    assert {"S(0,p) base", "ibar_2", "n_1"} <= names
    ibar = [r for r in recs if r.formula == "ibar_2"]
    assert ibar[0].label.weight == 6
    assert all(r.paper_ref for r in recs)
    assert all(r.to_json()["label"] == r.label.to_json() for r in recs)


def test_non_orthogonal_pairs():
    assert non_orthogonal_pairs(5) == []
    (pair,) = non_orthogonal_pairs(6)
    assert {pair[0], pair[1]} == {SingletLabelSU3(l12=1, l23=1, l31=1), SingletLabelSU3(l21=1, l32=1, l13=1)}


def test_thread_cap(monkeypatch):
    monkeypatch.setenv("SINGLET_THREADS", "1")
    assert thread_count() == 1
    assert validate_against_oracle(3, ["a(1).b(2)", "eps(a(3),a(2),a(1))"]) == []


def test_verify_su2_small():
    checks, _ = verify_su2(6)
    assert all(c.passed for c in checks)
