"""Exact cyclotomic scalar arithmetic against independent oracles."""

from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from colorhom.errors import InputError
from colorhom.scalars import (
    Scalar,
    cyclotomic_field,
    cyclotomic_polynomial,
    scalar_from_text,
    scalar_to_text,
)
from oracles import FieldOracle, poly_invmod

ORDERS = [1, 2, 3, 4, 5, 6, 8, 12]


def oracle_field(order):
    poly = sympy.polys.specialpolys.cyclotomic_poly(order, sympy.Symbol("x"))
    coeffs = list(reversed(sympy.Poly(poly, sympy.Symbol("x")).all_coeffs()))
    return FieldOracle([Fraction(int(c)) for c in coeffs])


@pytest.mark.parametrize("order", range(1, 31))
def test_cyclotomic_polynomial_matches_sympy(order):
    x = sympy.Symbol("x")
    expected = sympy.Poly(
        sympy.polys.specialpolys.cyclotomic_poly(order, x), x
    ).all_coeffs()
    got = list(reversed(cyclotomic_polynomial(order)))
    assert got == [int(c) for c in expected]


def test_field_descriptor_shape():
    f = cyclotomic_field(12)
    assert f.degree == 4
    assert f.minimal_polynomial == (1, 0, -1, 0, 1)  # 1 - x^2 + x^4
    f1 = cyclotomic_field(1)
    assert f1.degree == 1
    assert cyclotomic_field(12) is f  # cached


rationals = st.fractions(min_value=-8, max_value=8, max_denominator=12)


def scalars(order):
    field = cyclotomic_field(order)
    return st.lists(rationals, min_size=field.degree, max_size=field.degree).map(
        lambda cs: Scalar(field, cs)
    )


@settings(max_examples=60)
@given(st.sampled_from(ORDERS), st.data())
def test_mul_matches_polynomial_oracle(order, data):
    a = data.draw(scalars(order))
    b = data.draw(scalars(order))
    oracle = oracle_field(order)
    expected = oracle.mul(
        oracle.widen(a.coefficients), oracle.widen(b.coefficients)
    )
    assert list((a * b).coefficients) == expected


@settings(max_examples=60)
@given(st.sampled_from(ORDERS), st.data())
def test_field_axioms(order, data):
    a = data.draw(scalars(order))
    b = data.draw(scalars(order))
    c = data.draw(scalars(order))
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == Scalar.zero(a.field)
    assert a + Scalar.zero(a.field) == a
    assert a * Scalar.one(a.field) == a


@settings(max_examples=60)
@given(st.sampled_from(ORDERS), st.data())
def test_inverse(order, data):
    a = data.draw(scalars(order))
    if a.is_zero():
        with pytest.raises(ZeroDivisionError):
            a.inverse()
        return
    assert a * a.inverse() == Scalar.one(a.field)
    oracle = oracle_field(order)
    expected = poly_invmod(
        [Fraction(c) for c in a.coefficients], oracle.minpoly
    )
    assert list(a.inverse().coefficients) == oracle.widen(expected)


@pytest.mark.parametrize("order", ORDERS)
def test_root_of_unity_is_primitive(order):
    field = cyclotomic_field(order)
    z = Scalar.root(field)
    assert z ** order == Scalar.one(field)
    for k in range(1, order):
        assert z ** k != Scalar.one(field)


def test_root_small_orders():
    assert Scalar.root(cyclotomic_field(1)).is_one()
    minus = Scalar.root(cyclotomic_field(2))
    assert minus == Scalar.rational(cyclotomic_field(2), -1)
    i = Scalar.root(cyclotomic_field(4))
    assert i * i == Scalar.rational(cyclotomic_field(4), -1)


def test_pow_negative_and_zero():
    field = cyclotomic_field(8)
    z = Scalar.root(field)
    assert z ** 0 == Scalar.one(field)
    assert z ** -3 == (z ** 3).inverse()
    two = Scalar.rational(field, 2)
    assert two ** -1 == Scalar.rational(field, Fraction(1, 2))


def test_rational_arithmetic_is_fraction_arithmetic():
    field = cyclotomic_field(1)
    a = Scalar.rational(field, Fraction(1, 2))
    b = Scalar.rational(field, Fraction(1, 3))
    assert (a + b).coefficients == (Fraction(5, 6),)
    assert (a * b).coefficients == (Fraction(1, 6),)
    assert (a / b).coefficients == (Fraction(3, 2),)


def test_mixed_int_and_fraction_operands():
    field = cyclotomic_field(3)
    z = Scalar.root(field)
    assert 2 * z == z + z
    assert z - 1 == z + (-1)
    assert (z + 1) * Fraction(1, 2) == (z + 1) / 2


def test_cross_field_operations_rejected():
    a = Scalar.one(cyclotomic_field(3))
    b = Scalar.one(cyclotomic_field(4))
    with pytest.raises(InputError):
        a + b


@settings(max_examples=60)
@given(st.sampled_from(ORDERS), st.data())
def test_text_round_trip(order, data):
    a = data.draw(scalars(order))
    assert scalar_from_text(a.field, scalar_to_text(a)) == a


def test_text_format_shapes():
    f1 = cyclotomic_field(1)
    assert scalar_to_text(Scalar.rational(f1, Fraction(-3, 4))) == "-3/4"
    assert scalar_to_text(Scalar.rational(f1, 5)) == "5"
    f4 = cyclotomic_field(4)
    assert scalar_to_text(Scalar.root(f4)) == ["0", "1"]


@pytest.mark.parametrize(
    "bad",
    ["1.5", "1/0", "", "--2", "2/-3", "a", "1/", " 1", "1\n", "0x2"],
)
def test_text_rejects_malformed(bad):
    with pytest.raises(InputError):
        scalar_from_text(cyclotomic_field(1), bad)


def test_text_rejects_wrong_shape_for_field():
    with pytest.raises(InputError):
        scalar_from_text(cyclotomic_field(4), "1")  # needs a 2-list
    with pytest.raises(InputError):
        scalar_from_text(cyclotomic_field(4), ["1"])
    with pytest.raises(InputError):
        scalar_from_text(cyclotomic_field(1), ["1"])  # needs a bare string


def test_scalar_is_immutable_and_hashable():
    field = cyclotomic_field(4)
    z = Scalar.root(field)
    with pytest.raises(AttributeError):
        z.nums = (9, 9)
    assert len({z, z ** 1, z ** 5}) == 1  # z^5 = z


def test_zeta12_identity():
    # zeta_12^2 is a primitive 6th root: zeta_12^2 - zeta_12^... check
    # the defining relation z^4 = z^2 - 1 in Q(zeta_12)
    field = cyclotomic_field(12)
    z = Scalar.root(field)
    assert z ** 4 == z ** 2 - 1
    assert z ** 6 == Scalar.rational(field, -1)
