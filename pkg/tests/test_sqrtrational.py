from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from su3singlet.sqrtrational import IncompatibleSqrt, SqrtRational

fracs = st.fractions(min_value=-50, max_value=50, max_denominator=40)
pos = st.fractions(min_value=0, max_value=200, max_denominator=40)


@given(fracs)
def test_rational_roundtrip(q):
    x = SqrtRational.from_rational(q)
    assert x.square == q * abs(q)
    assert x.is_rational()
    assert SqrtRational.from_json(x.to_json()) == x


@given(pos, pos)
def test_product_of_roots(a, b):
    assert SqrtRational.sqrt(a) * SqrtRational.sqrt(b) == SqrtRational.sqrt(a * b)


@given(pos, fracs)
def test_json_roundtrip_and_float(r, s):
    x = SqrtRational.sqrt(r) * SqrtRational.from_rational(s)
    assert SqrtRational.from_json(x.to_json()) == x
    assert abs(float(x) - float(s) * float(r) ** 0.5) < 1e-9 * (1 + abs(float(x)))


@given(pos, fracs, fracs)
def test_addition_of_like_terms(r, a, b):
    root = SqrtRational.sqrt(r)
    lhs = root * SqrtRational.from_rational(a) + root * SqrtRational.from_rational(b)
    assert lhs == root * SqrtRational.from_rational(a + b)


def test_incompatible_sum():
    with pytest.raises(IncompatibleSqrt):
        SqrtRational.sqrt(2) + SqrtRational.sqrt(3)


def test_canonical_text():
    x = SqrtRational.sqrt(Fraction(8, 3))
    assert x.to_json() == {"sign": 1, "radicand": "8/3"}
    assert -x == SqrtRational(-1, Fraction(8, 3))
    assert not SqrtRational.zero()
    assert str(SqrtRational.sqrt(4)) == "2"
