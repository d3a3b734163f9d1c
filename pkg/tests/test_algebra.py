"""Exact rational scalars, sparse polynomials and rational functions."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from vbraid.algebra import (
    Polynomial,
    RationalFunction,
    format_field_value,
    format_monomial,
    parse_expression,
    parse_field_value,
    parse_monomial,
    parse_rational,
)
from vbraid.errors import SingularPoint

X1 = RationalFunction.variable(1)
X2 = RationalFunction.variable(2)
X3 = RationalFunction.variable(3)
X4 = RationalFunction.variable(4)


# --- scalars ----------------------------------------------------------------


def test_rational_add():
    assert Fraction(1, 2) + Fraction(1, 3) == Fraction(5, 6)


def test_rational_inverse():
    assert 1 / Fraction(-2, 3) == Fraction(-3, 2)


def test_rational_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        Fraction(1) / Fraction(0)
    with pytest.raises(ZeroDivisionError):
        Fraction(1, 0)


def test_rational_canonical_form():
    q = Fraction(6, -8)
    assert (q.numerator, q.denominator) == (-3, 4)
    assert Fraction(0, 7) == Fraction(0, 1)


def test_parse_rational_wire_format():
    assert parse_rational("-44/19") == Fraction(-44, 19)
    assert parse_rational("7") == Fraction(7)
    for bad in ("1.5", "1e3", "a/b", "1/(2)", ""):
        with pytest.raises(ValueError):
            parse_rational(bad)


rationals = st.fractions()


@given(rationals, rationals)
def test_rational_commutative(a, b):
    assert a + b == b + a
    assert a * b == b * a


@given(rationals, rationals, rationals)
def test_rational_associative_distributive(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


# --- polynomials ------------------------------------------------------------


def test_polynomial_add_variable_plus_one():
    f = X1 + 1
    assert f.num == Polynomial.variable(1) + Polynomial.one()
    assert f.den == Polynomial.one()


def test_polynomial_mul_no_cancellation():
    # z1/(1+z1) * (1+z1)/z4 stays unreduced but equals z1/z4
    f = X1 / (1 + X1)
    g = (1 + X1) / X4
    prod = f * g
    assert prod.num != Polynomial.variable(1)  # no gcd cancellation happened
    assert prod == X1 / X4


def test_polynomial_zero_and_inverse_errors():
    zero = RationalFunction.constant(0)
    with pytest.raises(ZeroDivisionError):
        1 / zero
    with pytest.raises(ZeroDivisionError):
        X1 / zero
    with pytest.raises(ZeroDivisionError):
        RationalFunction(Polynomial.variable(1), Polynomial.zero())


def test_cross_multiplication_equality():
    lhs = (X1 + X1 * X1) / (X4 + X1 * X4)
    assert lhs == X1 / X4
    assert X1 / RationalFunction.constant(1) != X2


def test_distributed_product_equals_expansion():
    lhs = (1 + X1) * (1 + X4) * (1 + RationalFunction.variable(6))
    x6 = RationalFunction.variable(6)
    rhs = 1 + X1 + X4 + x6 + X1 * X4 + X1 * x6 + X4 * x6 + X1 * X4 * x6
    assert lhs == rhs


def test_polynomial_canonical_order_unique():
    # same content assembled in different orders formats identically
    a = Polynomial([(((1, 2),), Fraction(3)), (((2, 1),), Fraction(-1)), ((), Fraction(5))])
    b = Polynomial([((), Fraction(5)), (((2, 1),), Fraction(-1)), (((1, 2),), Fraction(3))])
    assert a == b
    assert a.format() == b.format() == "3*x1^2 - x2 + 5"
    assert a.to_json() == b.to_json()


def test_format_zero_and_one():
    assert Polynomial.zero().format() == "0"
    assert Polynomial.one().format() == "1"
    assert RationalFunction.constant(0).format() == "0"


# --- substitution -----------------------------------------------------------


def test_substitute_full():
    # first component of the crossing kernel at (z1,z3,z4) = (1,2,1)
    f = -(X1 * X3 * X4) / (1 + X1 + X4)
    assert f.substitute({1: 1, 3: 2, 4: 1}) == Fraction(-2, 3)


def test_substitute_singular():
    f = 1 / (1 + X1 + X4)
    with pytest.raises(SingularPoint):
        f.substitute({1: Fraction(1), 4: Fraction(-2)})


def test_substitute_partial_slice():
    y2, y3, y4, y5, y6 = (RationalFunction.variable(i) for i in (2, 3, 4, 5, 6))
    f = y2 * y4 * y5 * y6 / (1 + y2 + y6 + y2 * y6 + y2 * y4 * y6)
    sliced = f.substitute({4: -1}, partial=True)
    assert isinstance(sliced, RationalFunction)
    assert sliced == -(y2 * y5 * y6) / (1 + y2 + y6)


def test_substitute_partial_singular_denominator():
    f = 1 / (1 + X1)
    with pytest.raises(SingularPoint):
        f.substitute({1: -1}, partial=True)


def test_substitute_requires_full_cover():
    f = X1 + X2
    with pytest.raises(ValueError):
        f.substitute({1: 1})


# --- parsing and serialization ----------------------------------------------


def test_parse_expression_basics():
    f = parse_expression("-z1*z3*z4/(1 + z1 + z4)")
    g = -(X1 * X3 * X4) / (1 + X1 + X4)
    assert f == g
    assert parse_expression("3/2*x1 - 5") == Fraction(3, 2) * X1 - 5
    assert parse_expression("x1^-1") == 1 / X1
    assert parse_expression("(x1 + 1)^2") == (X1 + 1) * (X1 + 1)


def test_parse_expression_errors():
    for bad in ("", "x1 +", "x + 1", "2 ** x1", "(x1", "x1^x2", "1..2"):
        with pytest.raises(ValueError):
            parse_expression(bad)


def test_parse_field_value_tags():
    v = parse_field_value("2/3")
    assert isinstance(v, Fraction)
    assert isinstance(parse_field_value("(2+1)/3"), Fraction)  # constant expression collapses
    assert isinstance(parse_field_value("x2"), RationalFunction)


@pytest.mark.parametrize(
    "text",
    ["0", "1", "-x1", "x1^3*x2 - 2", "(x1 + 1)/(x2)", "(2*x1^2 - x2 + 5/3)/(x3 + x4)"],
)
def test_text_round_trip(text):
    f = parse_expression(text)
    again = parse_expression(f.format())
    assert again.num == f.num and again.den == f.den


def test_monomial_round_trip():
    m = parse_monomial("x1^2*x3")
    assert m == ((1, 2), (3, 1))
    assert format_monomial(m) == "x1^2*x3"
    assert parse_monomial(format_monomial(m)) == m
    assert parse_monomial("1") == ()


def test_json_round_trip():
    f = parse_expression("(2*x1^2 - x2 + 5)/(3*x3 + x1*x2)")
    g = RationalFunction.from_json(f.to_json())
    assert g.num == f.num and g.den == f.den
    p = Polynomial.parse("x1^2 - 7/3*x2")
    assert Polynomial.from_json(p.to_json()) == p


def test_normalization_invariants():
    f = RationalFunction(Polynomial.parse("1/2*x1"), Polynomial.parse("-1/3*x2 - x3"))
    # integer coefficients, joint content 1, positive leading denominator coeff
    coeffs = [c for _, c in f.num.terms()] + [c for _, c in f.den.terms()]
    assert all(c.denominator == 1 for c in coeffs)
    import math
    assert math.gcd(*[c.numerator for c in coeffs]) == 1
    assert f.den.leading_coefficient() > 0


# --- property tests over rational functions ---------------------------------


@st.composite
def small_polys(draw, nonzero=False):
    terms = draw(
        st.lists(
            st.tuples(
                st.lists(st.tuples(st.integers(1, 3), st.integers(1, 2)), max_size=2),
                st.integers(-4, 4),
            ),
            min_size=1 if nonzero else 0,
            max_size=3,
        )
    )
    p = Polynomial((tuple(mono), Fraction(c)) for mono, c in terms)
    if nonzero and p.is_zero():
        p = p + Polynomial.one()
    return p


@st.composite
def small_rfs(draw):
    num = draw(small_polys())
    den = draw(small_polys(nonzero=True))
    return RationalFunction(num, den)


@settings(max_examples=60, deadline=None)
@given(small_rfs(), small_rfs(), small_rfs())
def test_rf_field_axioms(f, g, h):
    assert f + g == g + f
    assert f * g == g * f
    assert (f + g) + h == f + (g + h)
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h


@settings(max_examples=60, deadline=None)
@given(small_rfs())
def test_rf_multiplicative_inverse(f):
    if not f.is_zero():
        assert f * (1 / f) == RationalFunction.constant(1)


@settings(max_examples=60, deadline=None)
@given(small_rfs(), small_rfs(), small_rfs())
def test_rf_equality_equivalence(f, g, h):
    assert f == f
    if f == g:
        assert g == f
        if g == h:
            assert f == h


@settings(max_examples=40, deadline=None)
@given(small_rfs())
def test_rf_format_parse_round_trip(f):
    again = parse_expression(format_field_value(f))
    assert again.num == f.num and again.den == f.den
