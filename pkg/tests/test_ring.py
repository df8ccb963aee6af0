from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from degenmat.errors import NonUnitConstant, NotDivisible, OrderMismatch, ParseError
from degenmat.ring import (
    LAMBDA,
    ONE,
    X,
    Y,
    ZERO,
    EGFSeries,
    MultiPoly,
    as_poly,
    gff,
    parse_poly,
    parse_rational,
    poly_arith,
    poly_eval,
    poly_exact_div_symbol,
    rising,
    series_inv,
    series_mul,
    series_pow,
)

B2 = parse_poly("x^2 - x - 1/6*lambda^2 + 1/6")

rationals = st.builds(Fraction, st.integers(-20, 20), st.integers(1, 12))
monomials = st.tuples(*[st.integers(0, 3)] * 4)
polys = st.dictionaries(monomials, rationals, max_size=5).map(MultiPoly)


# -- examples -------------------------------------------------------------------


def test_mul_distributes():
    assert poly_arith(X, X - LAMBDA, "mul") == parse_poly("x^2 - x*lambda")


def test_add_zero_and_cancellation():
    p = parse_poly("x + lambda/2 - 1/2")
    assert poly_arith(p, ZERO, "add") == p
    assert poly_arith(p, X, "sub") == parse_poly("1/2*lambda - 1/2")


def test_eval():
    assert poly_eval(B2, {"lambda": 0}) == parse_poly("x^2 - x + 1/6")
    assert poly_eval(B2, {}) == B2
    assert poly_eval(X * LAMBDA, {"x": 3, "lambda": Fraction(1, 3)}) == ONE


def test_eval_symbol_for_symbol():
    assert poly_eval(X * X, {"x": Y + 1}) == Y * Y + 2 * Y + 1


def test_exact_division():
    assert poly_exact_div_symbol(LAMBDA * X + LAMBDA**2, "lambda") == X + LAMBDA
    assert poly_exact_div_symbol(LAMBDA, "lambda") == ONE
    with pytest.raises(NotDivisible):
        poly_exact_div_symbol(X, "lambda")


def test_gff():
    assert gff(X, LAMBDA, 3) == parse_poly("x^3 - 3*x^2*lambda + 2*x*lambda^2")
    assert gff(X, LAMBDA, 0) == ONE
    assert gff(2, 0, 4) == as_poly(16)


def test_rising():
    assert rising(2, 3) == as_poly(24)
    assert rising(X, 2) == X * X + X
    assert rising(parse_poly("x*y - 7"), 0) == ONE


def test_print_order():
    assert str(B2) == "x^2 - x - 1/6*lambda^2 + 1/6"
    assert str(gff(X, LAMBDA, 3)) == "x^3 - 3*x^2*lambda + 2*x*lambda^2"
    assert str(ZERO) == "0"
    assert str(as_poly(Fraction(-3, 4))) == "-3/4"


def test_parse_errors():
    for bad in ("x +", "z", "x^-1", "1/0", "(x"):
        with pytest.raises((ParseError, ZeroDivisionError)):
            parse_poly(bad)
    with pytest.raises(ParseError):
        parse_rational("one half")


# -- series ------------------------------------------------------------------------


def test_series_gff_addition():
    n = 5
    sx = EGFSeries.from_function(lambda m: gff(X, LAMBDA, m), n)
    sy = EGFSeries.from_function(lambda m: gff(Y, LAMBDA, m), n)
    assert series_mul(sx, sy) == EGFSeries.from_function(lambda m: gff(X + Y, LAMBDA, m), n)


def test_series_small_cases():
    ones = EGFSeries([1, 1, 1])
    assert series_mul(ones, EGFSeries.identity(2)) == ones
    assert series_mul(ones, ones) == EGFSeries([1, 2, 4])
    assert series_inv(EGFSeries.identity(3)) == EGFSeries.identity(3)
    assert series_inv(ones) == EGFSeries([1, -1, 1])
    assert series_pow(ones, 0) == EGFSeries.identity(2)
    assert series_pow(ones, 1) == ones


def test_series_square_of_unit_gff():
    n = 4
    one = EGFSeries.from_function(lambda m: gff(1, LAMBDA, m), n)
    assert series_pow(one, 2) == EGFSeries.from_function(lambda m: gff(2, LAMBDA, m), n)


def test_series_inverse_needs_unit():
    with pytest.raises(NonUnitConstant):
        series_inv(EGFSeries([2, 1]))


def test_series_order_mismatch():
    with pytest.raises(OrderMismatch):
        series_mul(EGFSeries([1, 1]), EGFSeries([1, 1, 1]))


# -- properties ----------------------------------------------------------------------


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == ZERO
    assert a * ONE == a


@given(polys)
def test_print_parse_roundtrip(p):
    assert parse_poly(str(p)) == p


@given(polys, polys, rationals, rationals)
def test_eval_is_homomorphism(a, b, lam, x):
    at = {"lambda": lam, "x": x}
    assert poly_eval(a * b, at) == poly_eval(a, at) * poly_eval(b, at)
    assert poly_eval(a + b, at) == poly_eval(a, at) + poly_eval(b, at)


@given(polys)
def test_divide_after_multiply(p):
    assert poly_exact_div_symbol(p * LAMBDA, "lambda") == p


@given(st.lists(rationals, max_size=5))
def test_series_inverse_property(tail):
    a = EGFSeries([1, *tail])
    assert series_mul(a, series_inv(a)) == EGFSeries.identity(a.order)


@given(st.integers(0, 5), st.integers(0, 5))
def test_gff_splits(j, k):
    # (x|λ)_{j+k} = (x|λ)_j (x − jλ|λ)_k
    assert gff(X, LAMBDA, j + k) == gff(X, LAMBDA, j) * gff(X - j * LAMBDA, LAMBDA, k)
