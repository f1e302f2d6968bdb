"""Rational-function field contracts: canonical form, arithmetic, evaluation."""

from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from cauchylu import (
    DivisionByZero,
    PoleAtPoint,
    Polynomial,
    RationalFunction,
    SYMBOLIC_T,
    T,
    parse_ratfunc,
)

coefficients = st.builds(Fraction, st.integers(-12, 12), st.integers(1, 6))
polys = st.builds(Polynomial, st.lists(coefficients, max_size=4))
nonzero_polys = polys.filter(lambda p: not p.is_zero)
ratfuncs = st.builds(RationalFunction, polys, nonzero_polys)
nonzero_ratfuncs = ratfuncs.filter(lambda f: not f.is_zero)
points = st.builds(Fraction, st.integers(-10, 10), st.integers(1, 10))


def test_canonical_form_moves_sign_into_numerator():
    f = RationalFunction(1, 4 - T**2)
    assert f.num == Polynomial((-1,))
    assert f.den == T**2 - 4
    assert str(f) == "(-1)/(t^2 - 4)"


def test_canonical_denominator_is_integer_primitive_positive():
    f = RationalFunction(T, Fraction(2, 3) * T**2 - Fraction(4, 3))
    assert f.den == T**2 - 2
    assert f.num == Fraction(3, 2) * T
    assert f.den.content() == 1
    assert f.den.leading > 0


def test_quotient_example_keeps_denominator_leading_9():
    f = RationalFunction(T**2 - 4, 9 * T**2 - 4)
    assert f.den.leading == 9
    assert str(f) == "(t^2 - 4)/(9*t^2 - 4)"


def test_inverse_pair_example():
    f = RationalFunction(1, 4 - T**2)
    assert f * (4 - T**2) == 1


def test_additive_identity_example():
    f = RationalFunction(1, 4 - T**2)
    assert f + 0 == f


def test_zero_is_zero_over_one():
    f = RationalFunction(0, 7 * T**2 + 1)
    assert f.num.is_zero
    assert f.den == 1
    assert f == 0


def test_zero_denominator_rejected():
    with pytest.raises(DivisionByZero):
        RationalFunction(T, Polynomial())


def test_division_by_zero_function_raises():
    with pytest.raises(DivisionByZero):
        SYMBOLIC_T / RationalFunction(0)
    with pytest.raises(DivisionByZero):
        RationalFunction(0).invert()


def test_eval_example_is_minus_three_fifths():
    f = RationalFunction(T**2 - 4, 9 * T**2 - 4)
    assert f(Fraction(1)) == Fraction(-3, 5)


def test_eval_at_pole_raises_with_point():
    f = RationalFunction(1, 4 - T**2)
    with pytest.raises(PoleAtPoint) as info:
        f(Fraction(2))
    assert info.value.point == 2


def test_eval_constant():
    assert RationalFunction(7)(Fraction(123, 7)) == 7


def test_normalization_idempotent():
    f = RationalFunction(6 * T - 12, -3 * T**2 + 12)
    again = RationalFunction(f.num, f.den)
    assert again.num == f.num and again.den == f.den


def test_reduction_cancels_common_factor():
    f = RationalFunction((T - 1) * (T + 2), (T - 1) * (T + 3))
    assert f == RationalFunction(T + 2, T + 3)


def test_negative_power_inverts():
    f = RationalFunction(T, T**2 + 1)
    assert f**-2 == (f.invert()) ** 2
    assert f**0 == 1


def test_cross_type_equality():
    assert RationalFunction(Polynomial((3,))) == Fraction(3)
    assert RationalFunction(T**2 - 4, 1) == T**2 - 4
    assert SYMBOLIC_T != 1


@given(ratfuncs)
def test_str_parse_round_trip(f):
    assert parse_ratfunc(str(f)) == f


@given(ratfuncs, ratfuncs, ratfuncs)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0
    assert a * 1 == a


@given(nonzero_ratfuncs)
def test_multiplicative_inverse(f):
    assert f * f.invert() == 1


@given(ratfuncs, ratfuncs, points)
def test_eval_is_a_homomorphism(f, g, x):
    try:
        fx, gx = f(x), g(x)
        sum_at = (f + g)(x)
        prod_at = (f * g)(x)
    except PoleAtPoint:
        assume(False)
    assert sum_at == fx + gx
    assert prod_at == fx * gx


@given(ratfuncs)
def test_canonical_invariants_hold(f):
    assert not f.den.is_zero
    assert f.num.gcd(f.den).degree <= 0
    if not f.is_zero:
        assert f.den.content() == 1
        assert f.den.leading > 0
    else:
        assert f.den == 1
