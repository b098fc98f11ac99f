from fractions import Fraction
from itertools import permutations

import pytest

from su3singlet import oracle as O
from su3singlet.basis import SingletLabelSU2, SingletLabelSU3, enumerate_su3, irreps


def c2(p, q):
    return Fraction(p * p + q * q + p * q + 3 * p + 3 * q, 3)


def test_inner_product_of_single_quanta():
    v = O.apply_op_su3((("a", True, 1), ("b", True, 2)), O.vacuum(O.SU3_MODES))
    assert O.inner(v, v) == 3


@pytest.mark.parametrize("l", enumerate_su3(4))
def test_states_are_singlets_with_right_casimirs(l):
    v = O.build_state_su3(l)
    for a in range(1, 9):
        assert O.gauss_generator(a)(O.ComplexVector(v)).is_zero()
    for leg, (p, q) in enumerate(irreps(l), 1):
        c = O.casimir(v, leg)
        assert not c.im
        assert O.vsub(c.re, O.scale(v, c2(p, q))) == {}
        assert O.k_minus(v, leg) == {}


def test_bilinear_order_independence():
    l = SingletLabelSU3(1, 1, 1, 0, 1, 1, 0)
    ref = O.build_state_su3(l)
    for order in list(permutations(O.BILINEAR_ORDER))[::97]:
        assert O.build_state_su3(l, order) == ref


def test_base_norms():
    assert O.norm_sq(SingletLabelSU3()) == 1
    assert O.norm_sq(SingletLabelSU3(p=1)) == 6
    assert O.norm_sq(SingletLabelSU3(p=-1)) == 6
    assert O.norm_sq(SingletLabelSU3(p=2)) == 144


def test_weight_six_overlap():
    x = SingletLabelSU3(l12=1, l23=1, l31=1)
    y = SingletLabelSU3(l21=1, l32=1, l13=1)
    assert O.inner(O.build_state_su3(x), O.build_state_su3(y)) == Fraction(-16, 3)
    assert O.norm_sq(x) == O.norm_sq(y) == Fraction(56, 3)


def test_expand_detects_span():
    l = SingletLabelSU3(l12=1)
    v = O.build_state_su3(l)
    assert O.expand_su3(O.scale(v, 5), irreps(l)) == {l: 5}
    stray = O.create(O.vacuum(O.SU3_MODES), O.mode3(1, "a", 1))
    with pytest.raises(O.NotInSpan):
        O.expand_su3(stray, irreps(l))


def test_su2_states_and_casimir():
    l = SingletLabelSU2(2, 1, 3)
    v = O.build_state_su2(l)
    for a in range(1, 4):
        assert O.gauss_generator(a, group="su2")(O.ComplexVector(v)).is_zero()
    for leg in (1, 2, 3):
        j = Fraction(l.ns[leg - 1], 2)
        assert O.vsub(O.casimir(v, leg, "su2").re, O.scale(v, j * (j + 1))) == {}


def test_creation_then_lowering():
    l = SingletLabelSU3(l12=2)
    out = O.oracle_unnormalized_su3((("a", False, 1), ("b", False, 2)), l)
    assert list(out) == [SingletLabelSU3(l12=1)]
