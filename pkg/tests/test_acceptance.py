"""One pass/fail line per acceptance criterion."""

import random
import subprocess
import sys
from fractions import Fraction

from su3singlet import oracle as O
from su3singlet.basis import SingletLabelSU3, enumerate_su2, enumerate_su3, irreps, labels_with_irreps
from su3singlet.cli import cmd_matrix, cmd_verify
from su3singlet.opexpr import canonicalize, catalog_ops, op_image, parse
from su3singlet.sqrtrational import SqrtRational
from su3singlet.su2 import act_su2, norm_sq_su2
from su3singlet.su3 import act_su3, base_norm_sq, norm_chain_su3, unnormalized_act
from su3singlet.validate import _constraint_failures, audit_reference, oracle_coefficients, su2_ops


def _su2_oracle(op, l):
    s = O.norm_sq(l)
    return {t: SqrtRational.from_rational(c) * SqrtRational.sqrt(O.norm_sq(t) / s)
            for t, c in O.oracle_unnormalized_su2(op.factors, l).items()}


def test_c1_su2_oracle_equivalence():
    bad = [(str(op), l) for op in su2_ops() for l in enumerate_su2(12)
           if {t.target: t.coeff for t in act_su2(op, l)} != _su2_oracle(op, l)]
    assert bad == []


def test_c2_su2_norm_formula():
    assert all(norm_sq_su2(l) == O.norm_sq(l) for l in enumerate_su2(12))


def test_c3_su3_constraints_and_diagonal_gram():
    labels = enumerate_su3(6)
    assert [l for l in labels if _constraint_failures(l)] == []
    off = [(l, r) for l in labels for r in labels_with_irreps(irreps(l))
           if r.sort_key() > l.sort_key() and O.inner(O.build_state_su3(l), O.build_state_su3(r))]
    assert off == [], f"non-orthogonal basis pairs: {off}"


def test_c4_su3_verify_exits_zero():
    _, code = cmd_verify("su3", 6)
    assert code == 0
    assert all(r.paper_ref for r in audit_reference(6))


def test_c5_norm_recursion():
    assert all(norm_chain_su3(l) == O.norm_sq(l) for l in enumerate_su3(6))
    assert all(base_norm_sq(p) == O.norm_sq(SingletLabelSU3(p=p)) for p in range(-2, 3))


# -- commutator identities ---------------------------------------------------------

def _apply(op, vec):
    out = {}
    for l, c in vec.items():
        for t, d in unnormalized_act(op, l).items():
            out[t] = out.get(t, 0) + c * d
    return {k: v for k, v in out.items() if v}


def _comm(x, y, vec):
    a, b = _apply(x, _apply(y, vec)), _apply(y, _apply(x, vec))
    return {k: a.get(k, 0) - b.get(k, 0) for k in set(a) | set(b) if a.get(k, 0) != b.get(k, 0)}


def _ntilde(leg, vec):
    return {l: c * Fraction(1, l.N(leg) + 2) for l, c in vec.items()}


def test_c6_commutator_identities():
    for l in enumerate_su3(5):
        v = {l: Fraction(1)}
        lhs = _comm("b+(3).b(2)", "a+(2).a(1)", v)
        assert lhs == {k: -c for k, c in _ntilde(2, _apply("a+(2).b+(3)", _apply("a(1).b(2)", v))).items()}
        lhs = _comm("b+(1).b(3)", "eps(a+(3),b(2),a+(2))", v)
        rhs = _ntilde(3, _apply("a+(3).b+(1)", _apply("eps(b(3),b(2),a+(2))", v)))
        assert lhs == {k: -c for k, c in rhs.items()}
        lhs = _comm("a(1).b(2)", "eps(a(3),a(2),b+(2))", v)
        assert lhs == O.oracle_unnormalized_su3(parse("eps(a(3),a(2),a(1))").factors, l)
        assert _comm("eps(a+(3),b(2),a+(2))", "eps(a+(1),a+(2),a+(3))", v) == {}


def test_c7_symmetry_closure():
    rng = random.Random(20261017)
    ops = [op for op in catalog_ops() if canonicalize(op).word]
    labels = enumerate_su3(5)
    for _ in range(20):
        op, l = rng.choice(ops), rng.choice(labels)
        assert {t.target: t.coeff for t in act_su3(op, l)} == oracle_coefficients(op, l)


def _matrix(op, labels):
    keep = set(labels)
    return {(t.target, l): t.coeff for l in labels for t in act_su3(op, l) if t.target in keep}


def test_c8_adjointness():
    labels = enumerate_su3(5)
    for op in catalog_ops():
        adj = op_image(op, "adjoint")
        m, madj = _matrix(op, labels), _matrix(adj, labels)
        assert m == {(c, r): x for (r, c), x in madj.items()}, str(op)


def test_c9_determinism_and_roundtrip():
    runs = [cmd_matrix("su3", "eps(b(3),b(2),a+(2))", 5) for _ in range(2)]
    assert runs[0] == runs[1]
    cli = [subprocess.run([sys.executable, "-m", "su3singlet.cli", "matrix", "--op", "a(1).b(2)", "--wmax", "4"],
                          capture_output=True, check=True).stdout for _ in range(2)]
    assert cli[0] == cli[1] == cmd_matrix("su3", "a(1).b(2)", 4).encode()
    for op in catalog_ops():
        assert parse(str(op)) == op
        assert str(parse(str(op))) == str(op)
