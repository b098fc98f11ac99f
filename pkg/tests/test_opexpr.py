import pytest
from hypothesis import given, strategies as st

from su3singlet.opexpr import (BASES, Factor, InvalidLeg, InvariantOp, OpSyntaxError,
                               UnrecognizedShape, UnreachableShape, apply_word, canonicalize,
                               catalog_ops, normal_form, op_image, parse)


def test_parse_examples():
    op = parse("a+(1).b+(2)")
    assert op.kind == "Bilinear"
    assert op.factors == (Factor("a", True, 1), Factor("b", True, 2))
    tri = parse(" eps( a+(3), b(2), a+(2) ) ")
    assert tri.kind == "TrilinearEps"
    assert str(tri) == "eps(a+(3),b(2),a+(2))"
    assert parse("N(2)") == parse("a+(2).a(2)")


@pytest.mark.parametrize("text,exc", [
    ("a+(4).b(2)", InvalidLeg),
    ("a+(0).b(2)", InvalidLeg),
    ("", OpSyntaxError),
    ("a+(1)b(2)", OpSyntaxError),
    ("c(1).a(2)", OpSyntaxError),
    ("eps(a(1),a(2))", OpSyntaxError),
    ("a+(1).b+(2)x", OpSyntaxError),
    ("a+(1).a+(2)", UnrecognizedShape),
    ("eps(a+(1),a(2),a+(3))", UnrecognizedShape),
])
def test_parse_errors(text, exc):
    with pytest.raises(exc):
        parse(text)


def test_syntax_error_has_position():
    with pytest.raises(OpSyntaxError) as info:
        parse("a+(1)?b(2)")
    assert info.value.pos == 5


def test_su2_shapes():
    assert parse("a+(3).a+(1)", "su2").factors[1] == Factor("a", True, 1)
    with pytest.raises(UnrecognizedShape):
        parse("a+(1).b(2)", "su2")


def test_catalog_size_and_roundtrip():
    ops = catalog_ops()
    assert len(ops) == 64
    for op in ops:
        assert parse(str(op)) == op


def test_canonical_form_reproduces_operator():
    for op in catalog_ops():
        form = canonicalize(op)
        nf, s = normal_form(op)
        nf_w, s_w = normal_form(apply_word(form.base_op, form.word))
        assert nf == nf_w
        assert s == form.sign * s_w


def test_canonicalize_examples():
    assert canonicalize(parse("a+(1).b+(2)")).word == ()
    form = canonicalize(parse("a+(2).b+(3)"))
    assert (form.base, form.word) == ("c", ("cycle",))
    form = canonicalize(parse("b+(1).a+(2)"))
    assert form.base == "c" and "conj_flip" in form.word
    assert canonicalize(parse("eps(a+(2),a+(1),a+(3))")).sign == -1
    assert set(BASES) >= {canonicalize(op).base for op in catalog_ops()}


def test_unreachable_shape_points_to_oracle():
    with pytest.raises(UnreachableShape, match="via-oracle"):
        canonicalize(parse("eps(a+(1),b(2),a+(3))"))


def test_adjoint_is_involution():
    for op in catalog_ops():
        assert op_image(op_image(op, "adjoint"), "adjoint") == op


leg = st.integers(1, 3)
factor = st.builds(Factor, st.sampled_from("ab"), st.booleans(), leg)


@given(factor, factor)
def test_print_parse_roundtrip_bilinear(f1, f2):
    op = InvariantOp((f1, f2))
    try:
        parse(str(op))
    except UnrecognizedShape:
        assert f1.triplet_type == f2.triplet_type
    else:
        assert parse(str(op)) == op


@given(st.sampled_from(["cycle", "reflect", "conj_flip"]), st.data())
def test_generators_preserve_catalog(gen, data):
    op = data.draw(st.sampled_from(catalog_ops()))
    canonicalize(op_image(op, gen))
