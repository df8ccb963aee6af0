from fractions import Fraction
from math import comb, factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from degenmat import oracles
from degenmat import sequences as nb
from degenmat.errors import BadParams
from degenmat.ring import LAMBDA, ONE, X, as_poly, gff, parse_poly, poly_eval

# first few degenerate Bernoulli polynomials, transcribed from the source
BETA_FIRST_FEW = [
    "1",
    "x + 1/2*lambda - 1/2",
    "x^2 - x - 1/6*lambda^2 + 1/6",
    "x^3 - 3/2*x^2 + 1/2*x - 3/2*x^2*lambda + 3/2*x*lambda + 1/4*lambda^3 - 1/4*lambda",
    "x^4 - 2*x^3 + x^2 - 4*x^3*lambda + 4*x^2*lambda^2 + 6*x^2*lambda - 4*x*lambda^2"
    " - 2*x*lambda - 19/30*lambda^4 + 2/3*lambda^2 - 1/30",
]


def at(p, **vals):
    return poly_eval(p, vals)


@pytest.mark.parametrize("m", range(5))
def test_beta_first_few(m):
    assert nb.beta(m, 1, LAMBDA, X) == parse_poly(BETA_FIRST_FEW[m])


def test_beta_values():
    assert nb.beta(4, 1, LAMBDA, 0) == parse_poly("-19/30*lambda^4 + 2/3*lambda^2 - 1/30")
    assert nb.beta(2, 2, 0, 0) == as_poly(Fraction(5, 6))
    for w in range(-2, 4):
        assert nb.beta(0, w, LAMBDA, X) == ONE


def test_beta_at_zero_lambda_is_classical():
    for m in range(6):
        for w in range(-1, 3):
            assert at(nb.beta(m, w, LAMBDA, X), **{"lambda": 0}) == nb.bernoulli_classic(m, w, X)


def test_bernoulli_values():
    assert nb.bernoulli_classic(2, 1, 0) == as_poly(Fraction(1, 6))
    assert nb.bernoulli_classic(1, 1, X) == X - Fraction(1, 2)
    for m in range(5):
        assert nb.bernoulli_classic(m, 0, X) == X**m
        assert nb.bernoulli_second(0, m - 2, X) == ONE
    assert nb.bernoulli_second(1, 1, 0) == as_poly(Fraction(1, 2))
    assert nb.bernoulli_second(2, 0, 3) == as_poly(3)


@pytest.mark.parametrize("w", [-1, 1, 2])
def test_bernoulli_against_independent_expansions(w):
    for m in range(6):
        assert nb.bernoulli_classic(m, w, X) == oracles.bernoulli_from_exp(m, w, X)
        assert nb.bernoulli_second(m, w, X) == oracles.bernoulli2_from_log(m, w, X)


def test_alpha():
    assert nb.alpha(2, 0, LAMBDA, 3) == as_poly(6)
    for m in range(6):
        for w in (-1, 1, 2):
            assert at(nb.alpha(m, w, LAMBDA, X), **{"lambda": 0}) == factorial(m) * nb.bernoulli_second(m, w, X)


@pytest.mark.parametrize("lam", [Fraction(2), Fraction(1, 3), Fraction(-3, 2)])
def test_alpha_beta_rescaling(lam):
    # β_m^{(w)}(1/λ, x/λ) = λ^{-m} α_m^{(w)}(λ, x)
    for m in range(5):
        for w in (1, 2):
            for x in (0, Fraction(1, 2)):
                lhs = nb.beta(m, w, 1 / lam, x / lam)
                assert lhs == nb.alpha(m, w, lam, x) * (1 / lam) ** m


# -- generalized Stirling numbers ------------------------------------------------------


def test_stirling_values():
    assert nb.stirling1_gen(4, 1, (1, 0, 1)) == as_poly(2)
    assert nb.stirling1_gen(4, 2, (1, 0, 0)) == as_poly(11)
    assert nb.stirling2_gen(4, 2, (1, 0, 0)) == as_poly(7)
    assert nb.stirling2_gen(4, 2, (1, -1, 0)) == as_poly(36)
    assert nb.stirling2(4, 2) == as_poly(7)
    assert nb.stirling_gen(2, 0, 0, (1, 0, 0)) == ONE


def test_eq17_column():
    # S1(m,1 | 1,0,1) = (−1)^m (m−2)! for m > 1
    for m in range(2, 7):
        assert nb.stirling1_gen(m, 1, (1, 0, 1)) == as_poly((-1) ** m * factorial(m - 2))


def test_diagonal_is_one():
    for m in range(7):
        for p in [(1, 0, 0), (1, LAMBDA, X), (Fraction(1, 2), 3, Fraction(-1, 3))]:
            assert nb.stirling1_gen(m, m, p) == ONE
            assert nb.stirling2_gen(m, m, p) == ONE


def test_excluded_triple():
    with pytest.raises(BadParams, match="0, 0, 0"):
        nb.stirling2_gen(2, 1, (0, 0, 0))


@pytest.mark.parametrize("m", range(7))
def test_classical_against_brute_force(m):
    for k in range(m + 1):
        assert nb.stirling2_gen(m, k, (1, 0, 0)) == as_poly(oracles.count_partitions(m, k))
        s1 = nb.stirling1_gen(m, k, (1, 0, 0))
        assert s1 == as_poly((-1) ** (m - k) * oracles.count_cycles(m, k))


@pytest.mark.parametrize("kind", [1, 2])
def test_generating_function_matches_recurrence(kind):
    for p, top in [((1, 0, 0), 7), ((1, LAMBDA, X), 6), ((Fraction(2, 3), -1, Fraction(1, 2)), 6)]:
        for m in range(top):
            for k in range(m + 1):
                assert nb.stirling_gen(kind, m, k, p) == nb.oracle_stirling_recurrence(kind, m, k, p)


@given(st.integers(1, 3), st.integers(-3, 3), st.integers(-3, 3))
def test_recurrence_at_random_integer_params(mu, lam, x):
    p = (mu, lam, x)
    for m in range(5):
        for k in range(m + 1):
            assert nb.stirling2_gen(m, k, p) == nb.oracle_stirling_recurrence(2, m, k, p)


def test_r_stirling():
    for m in range(1, 6):  # m < r is zero by convention, so m = 0 is excluded
        for k in range(m + 1):
            unsigned = nb.stirling1_unsigned(m, k)
            assert nb.r_stirling1(m, k, 0) == unsigned == nb.r_stirling1(m, k, 1)
    for r in range(4):
        for m in range(r, r + 4):
            for k in range(r, m + 1):
                assert nb.r_stirling2(m, k, r) == as_poly(oracles.count_partitions(m, k, r))
                assert nb.r_stirling1(m, k, r) == as_poly(oracles.count_cycles(m, k, r))


def test_lah():
    assert nb.lah(4, 2) == as_poly(36) == nb.stirling2_gen(4, 2, (1, -1, 0))
    for m in range(1, 7):
        for k in range(1, m + 1):
            assert nb.lah(m, k) == as_poly(nb.lah_closed(m, k))
            assert nb.lah_closed(m, k) == Fraction(factorial(m), factorial(k)) * comb(m - 1, k - 1)
            assert nb.lah(m, k) == as_poly(oracles.count_ordered_lists(m, k))


def test_hyperharmonic():
    assert nb.hyperharmonic(3, 0) == Fraction(1, 3)
    assert nb.hyperharmonic(3, 1) == Fraction(11, 6)
    assert nb.hyperharmonic(2, -1) == 0
    assert nb.harmonic(4) == Fraction(25, 12)
    for m in range(1, 7):
        for r in range(5):
            # m! H_m^r = [m+r, 1+r]_r
            assert factorial(m) * nb.hyperharmonic(m, r) == nb.r_stirling1(m + r, 1 + r, r).constant_value()


def test_degenerate_views():
    for m in range(6):
        for k in range(m + 1):
            # λ = 0 collapses the degenerate numbers to the classical ones
            assert at(nb.degen_stirling2(m, k, LAMBDA), **{"lambda": 0}) == nb.stirling2(m, k)
            assert at(nb.degen_stirling1(m, k, LAMBDA), **{"lambda": 0}) == nb.stirling1_unsigned(m, k)


def test_change_of_basis():
    # the two kinds convert between the (x|1)_k and (x|λ)_k bases
    for m in range(6):
        s1 = sum((nb.stirling1_gen(m, k, (1, LAMBDA, 0)) * gff(X, LAMBDA, k) for k in range(m + 1)), as_poly(0))
        s2 = sum((nb.stirling2_gen(m, k, (1, LAMBDA, 0)) * gff(X, 1, k) for k in range(m + 1)), as_poly(0))
        assert s1 == gff(X, 1, m)
        assert s2 == gff(X, LAMBDA, m)
