from hypothesis import given, strategies as st

from su3singlet.basis import (PAIRS, SingletLabelSU2, SingletLabelSU3, enumerate_su2, enumerate_su3,
                              irreps, labels_with_irreps, leg_irrep, quanta_weight, sector_key)

small = st.integers(0, 3)
labels = st.builds(SingletLabelSU3, small, small, small, small, small, small, st.integers(-2, 2))


def test_small_enumerations():
    assert enumerate_su3(0) == [SingletLabelSU3()]
    w2 = enumerate_su3(2)
    assert len(w2) == 1 + 6
    assert all(l.weight <= 2 for l in w2)
    assert SingletLabelSU3(p=1) in enumerate_su3(3)
    assert SingletLabelSU2.from_ns(1, 1, 1) is None
    assert SingletLabelSU2.from_ns(2, 2, 2) == SingletLabelSU2(1, 1, 1)


def test_enumeration_sorted_and_unique():
    ls = enumerate_su3(6)
    assert ls == sorted(set(ls), key=SingletLabelSU3.sort_key)


@given(labels)
def test_irrep_weight_relation(l):
    reps = irreps(l)
    assert sum(p + q for p, q in reps) == l.weight
    assert quanta_weight(l) == l.weight
    for leg, (p, q) in enumerate(reps, 1):
        assert leg_irrep(l, leg) == (p, q)
        assert l.N(leg) == p + q


@given(labels)
def test_labels_with_irreps_contains_label(l):
    same = labels_with_irreps(irreps(l))
    assert l in same
    assert all(sector_key(r) == sector_key(l) for r in same)


@given(labels)
def test_json_roundtrip(l):
    assert SingletLabelSU3.from_json(l.to_json()) == l
    assert set(l.to_json()) == {f"l{i}{j}" for i, j in PAIRS} | {"p"}


def test_su2_enumeration():
    ls = enumerate_su2(4)
    assert all(sum(l.ns) <= 4 and sum(l.ns) % 2 == 0 for l in ls)
    assert SingletLabelSU2.from_ns(*SingletLabelSU2(1, 2, 0).ns) == SingletLabelSU2(1, 2, 0)
