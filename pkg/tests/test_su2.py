from fractions import Fraction
from math import factorial

import pytest

from su3singlet import oracle as O
from su3singlet.basis import SingletLabelSU2, enumerate_su2
from su3singlet.sqrtrational import SqrtRational
from su3singlet.su2 import act_su2, norm_sq_su2, unnormalized_act_su2
from su3singlet.validate import su2_ops

L = SingletLabelSU2(2, 1, 3)


def coeff(op, l, target):
    return {t.target: t.coeff for t in act_su2(op, l)}[target]


def test_norm_formula():
    assert norm_sq_su2(L) == factorial(2) * factorial(1) * factorial(3) * factorial(7)
    for l in enumerate_su2(8):
        assert norm_sq_su2(l) == O.norm_sq(l)


def test_table_values():
    assert coeff("a+(3).a(1)", L, SingletLabelSU2(1, 2, 3)) == SqrtRational.from_rational(-2)
    assert coeff("a(3).a(1)", L, SingletLabelSU2(2, 1, 2)) == SqrtRational.sqrt(21)
    assert coeff("a+(3).a+(1)", L, SingletLabelSU2(2, 1, 4)) == SqrtRational.sqrt(32)


def test_number_operator_is_diagonal():
    assert [(t.target, t.coeff) for t in act_su2("a+(2).a(2)", L)] == [(L, SqrtRational.from_rational(3))]


@pytest.mark.parametrize("op", su2_ops(), ids=str)
def test_matches_oracle(op):
    for l in enumerate_su2(8):
        assert unnormalized_act_su2(op, l) == O.oracle_unnormalized_su2(op.factors, l)


def test_raise_then_lower_is_norm_ratio():
    l = SingletLabelSU2(1, 0, 2)
    up = unnormalized_act_su2("a+(1).a+(2)", l)
    t, = up
    back = unnormalized_act_su2("a(1).a(2)", t)
    assert back == {l: norm_sq_su2(t) / norm_sq_su2(l)}
    assert all(isinstance(c, Fraction) for c in back.values())
