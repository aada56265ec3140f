from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from companionforms import GF, Q, FieldSpec
from companionforms.errors import DivisionByZero, FieldMismatch, ParseError
from companionforms.field import field_add, field_inv, field_mul, field_parse, render

from .conftest import elements, fields


def test_add_examples():
    assert GF(5)(3) + GF(5)(4) == GF(5)(2)
    assert Q(Fraction(1, 2)) + Q(Fraction(1, 3)) == Q(Fraction(5, 6))
    assert GF(2)(1) + GF(2)(1) == GF(2).zero


def test_mul_examples():
    assert field_mul(GF(5)(3), GF(5)(2)) == GF(5)(1)
    assert field_mul(Q("2/3"), Q("3/4")) == Q("1/2")


def test_inv_examples():
    assert field_inv(GF(5)(3)) == GF(5)(2)
    assert field_inv(Q("-2/7")) == Q("-7/2")
    assert field_inv(GF(7)(1)) == GF(7)(1)


def test_parse_examples():
    assert Q.parse("−3/6") == Q(Fraction(-1, 2))
    assert Q.parse("-3/6").value == Fraction(-1, 2)
    assert GF(7).parse("9") == GF(7)(2)
    assert Q.parse("0") == Q.zero
    assert GF(3).parse("-1") == GF(3)(2)
    assert field_parse("+4/2", Q) == Q(2)


@pytest.mark.parametrize("bad", ["", "1/", "/2", "1.5", "abc", "1/-2", "--1", "1 2"])
def test_parse_rejects_malformed(bad):
    with pytest.raises(ParseError):
        Q.parse(bad)


def test_parse_gf_rejects_fraction():
    with pytest.raises(ParseError):
        GF(5).parse("1/2")


def test_parse_zero_denominator():
    with pytest.raises(DivisionByZero):
        Q.parse("1/0")


def test_inverse_of_zero():
    for f in (Q, GF(7)):
        with pytest.raises(DivisionByZero):
            f.zero.inverse()
        with pytest.raises(ZeroDivisionError):
            f.one / f.zero


def test_cross_field_rejected():
    with pytest.raises(FieldMismatch):
        GF(5)(1) + GF(7)(1)
    with pytest.raises(FieldMismatch):
        field_add(Q(1), GF(2)(1))
    with pytest.raises(FieldMismatch):
        Q(1) * GF(3)(1)


@pytest.mark.parametrize("m", [0, 1, 4, 9, 15, 561])
def test_composite_modulus_rejected(m):
    with pytest.raises(ValueError):
        GF(m)


def test_field_tags_roundtrip():
    for tag in ("Q", "GF:2", "GF:101"):
        assert FieldSpec.from_tag(tag).tag == tag
    for bad in ("GF:4", "GF:", "R", "GF:x"):
        with pytest.raises(ParseError):
            FieldSpec.from_tag(bad)


def test_equality_is_structural():
    assert GF(5)(7) == GF(5)(2)
    assert GF(5)(2) != GF(7)(2)
    assert Q("2/4") == Q("1/2")
    assert hash(Q("2/4")) == hash(Q("1/2"))


def test_canonical_forms():
    x = Q(Fraction(6, -4))
    assert x.value.denominator > 0 and x.value == Fraction(-3, 2)
    y = GF(7)(-1)
    assert y.value == 6


@given(st.data())
def test_field_axioms(data):
    f = data.draw(fields)
    a, b, c = (data.draw(elements(f)) for _ in range(3))
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a + f.zero == a
    assert a * f.one == a
    assert a + (-a) == f.zero
    assert a - b == a + (-b)
    if not a.is_zero():
        assert a * a.inverse() == f.one


@given(st.data())
def test_parse_render_roundtrip(data):
    f = data.draw(fields)
    a = data.draw(elements(f))
    assert f.parse(render(a)) == a


@given(st.integers(), st.integers(min_value=1))
def test_rational_parse_reduces(num, den):
    x = Q.parse(f"{num}/{den}")
    assert x.value == Fraction(num, den)


def test_elements_are_immutable():
    x = GF(3)(1)
    with pytest.raises(AttributeError):
        x.value = 2


def test_big_prime_field():
    f = GF(2**61 - 1)
    x = f(123456789)
    assert x * x.inverse() == f.one


@given(st.integers(min_value=-50, max_value=50))
def test_int_coercion_matches_element_arithmetic(k):
    f = GF(7)
    assert f(3) * k == f(3) * f(k)
    assume(k != 0)
    assert Q(1) / k == Q(Fraction(1, k))
