"""Degenerate Bernoulli polynomials, generalized Stirling numbers and relatives.

Every quantity is a polynomial in whichever of lambda, mu, x, y are left
symbolic.  Values come from truncated EGF arithmetic; an independent
triangular recurrence (:func:`oracle_stirling_recurrence`) and the brute-force
counts in :mod:`degenmat.oracles` cross-check the Stirling family.

Parameters may be given as ints, Fractions, symbol names or MultiPoly.
Orders ``w`` are integers; negative orders are just positive powers of the
unit-constant kernel series, so no special case is needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .errors import BadParams
from .ring import ONE, ZERO, EGFSeries, MultiPoly, as_poly, gff, series_mul, series_pow

# every series is computed to at least this order so small queries share a cache entry
_MIN_ORDER = 8


def _order(m: int) -> int:
    return max(m, _MIN_ORDER)


@dataclass(frozen=True)
class StirlingParams:
    """The triple (mu, lambda, x) of the Hsu-Shiue numbers."""

    mu: MultiPoly
    lam: MultiPoly
    x: MultiPoly

    def __post_init__(self):
        object.__setattr__(self, "mu", as_poly(self.mu))
        object.__setattr__(self, "lam", as_poly(self.lam))
        object.__setattr__(self, "x", as_poly(self.x))
        if self.mu.is_zero() and self.lam.is_zero() and self.x.is_zero():
            raise BadParams("generalized Stirling numbers need (mu, lambda, x) != (0, 0, 0)")


def _params(p) -> StirlingParams:
    if isinstance(p, StirlingParams):
        return p
    mu, lam, x = p
    return StirlingParams(mu, lam, x)


# -- degenerate Bernoulli polynomials ---------------------------------------


@lru_cache(maxsize=None)
def _beta_kernel(lam: MultiPoly, order: int) -> EGFSeries:
    # ((1 + lam t)^(1/lam) - 1)/t, coefficient k is (1|lam)_{k+1}/(k+1)
    return EGFSeries._from_polys(gff(1, lam, k + 1) / (k + 1) for k in range(order + 1))


@lru_cache(maxsize=None)
def _beta_series(w: int, lam: MultiPoly, x: MultiPoly, order: int) -> EGFSeries:
    power = series_pow(_beta_kernel(lam, order), -w)
    tail = EGFSeries._from_polys(gff(x, lam, k) for k in range(order + 1))
    return series_mul(power, tail)


def beta(m: int, w: int, lam, xx) -> MultiPoly:
    """Degenerate Bernoulli polynomial of the first kind, order w.

    >>> str(beta(1, 1, "lambda", "x"))
    'x + 1/2*lambda - 1/2'
    """
    lam, xx = as_poly(lam), as_poly(xx)
    return _beta_series(int(w), lam, xx, _order(m))[m]


@lru_cache(maxsize=None)
def _alpha_kernel(lam: MultiPoly, order: int) -> EGFSeries:
    # ((1+t)^lam - 1)/(lam t); the factor lam of (lam|1)_{k+1} is cancelled symbolically
    return EGFSeries._from_polys(gff(lam - 1, 1, k) / (k + 1) for k in range(order + 1))


@lru_cache(maxsize=None)
def _alpha_series(w: int, lam: MultiPoly, x: MultiPoly, order: int) -> EGFSeries:
    power = series_pow(_alpha_kernel(lam, order), -w)
    tail = EGFSeries._from_polys(gff(x, 1, k) for k in range(order + 1))
    return series_mul(power, tail)


def alpha(m: int, w: int, lam, xx) -> MultiPoly:
    """Degenerate Bernoulli polynomial of the second kind, order w."""
    lam, xx = as_poly(lam), as_poly(xx)
    return _alpha_series(int(w), lam, xx, _order(m))[m]


def bernoulli_classic(m: int, w: int, xx) -> MultiPoly:
    """Higher-order Bernoulli polynomial B_m^(w)(x), the lambda = 0 case of beta."""
    return beta(m, w, 0, xx)


def bernoulli_second(m: int, w: int, xx) -> MultiPoly:
    """Bernoulli polynomial of the second kind b_m^(w)(x) (ordinary, not EGF, coefficient)."""
    return alpha(m, w, 0, xx) / factorial(m)


# -- generalized Stirling numbers -------------------------------------------


@lru_cache(maxsize=None)
def _stirling_triangle(kind: int, p: StirlingParams, order: int) -> tuple:
    """Rows ``k = 0..order`` of [t^m/m!] F^k G / k!."""
    if kind == 1:
        # ((1 + mu t)^(lam/mu) - 1)/lam: the j-th coefficient (lam|mu)_j / lam = (lam-mu|mu)_{j-1}
        step, lead, tail_base = p.mu, p.lam, p.x
    else:
        step, lead, tail_base = p.lam, p.mu, -p.x
    f = EGFSeries._from_polys(
        [ZERO] + [gff(lead - step, step, j - 1) for j in range(1, order + 1)]
    )
    phi = EGFSeries._from_polys(gff(tail_base, step, j) for j in range(order + 1))
    rows = []
    for k in range(order + 1):
        if k:
            phi = series_mul(phi, f)
        rows.append(tuple(c / factorial(k) for c in phi.coeffs))
    return tuple(rows)


def _stirling(kind: int, m: int, k: int, p) -> MultiPoly:
    p = _params(p)
    if k < 0 or m < 0:
        return ZERO
    if k > m:
        return ZERO
    return _stirling_triangle(kind, p, _order(m))[k][m]


def stirling1_gen(m: int, k: int, p) -> MultiPoly:
    """S_1(m, k | mu, lambda, x); ``p`` is a StirlingParams or a (mu, lambda, x) tuple."""
    return _stirling(1, m, k, p)


def stirling2_gen(m: int, k: int, p) -> MultiPoly:
    """S_2(m, k | mu, lambda, x)."""
    return _stirling(2, m, k, p)


def stirling_gen(kind: int, m: int, k: int, p) -> MultiPoly:
    if kind not in (1, 2):
        raise ValueError("kind must be 1 or 2")
    return _stirling(kind, m, k, p)


@lru_cache(maxsize=None)
def _recurrence_table(kind: int, p: StirlingParams, order: int) -> tuple:
    # From (1 + s t) d/dt applied to F^k G / k!:
    #   kind 2: S(m+1, k) = S(m, k-1) + (k mu - m lam - x) S(m, k)
    #   kind 1: S(m+1, k) = S(m, k-1) + (k lam - m mu + x) S(m, k)
    if kind == 1:
        a, b, c = p.lam, p.mu, p.x
    else:
        a, b, c = p.mu, p.lam, -p.x
    table = [[ONE] + [ZERO] * order]
    for m in range(order):
        prev = table[-1]
        row = []
        for k in range(order + 1):
            left = prev[k - 1] if k else ZERO
            row.append(left + (a.scale(k) - b.scale(m) + c) * prev[k])
        table.append(row)
    return tuple(tuple(r) for r in table)


def oracle_stirling_recurrence(kind: int, m: int, k: int, p) -> MultiPoly:
    """S_kind(m, k | mu, lambda, x) from the triangular recurrence, not the GF."""
    p = _params(p)
    if m < 0 or k < 0 or k > m:
        return ZERO
    return _recurrence_table(kind, p, _order(m))[m][k]


# -- classical specializations ----------------------------------------------


def _sign(e: int) -> int:
    return -1 if e % 2 else 1


def stirling1(m: int, k: int) -> MultiPoly:
    """Signed Stirling numbers of the first kind s(m, k)."""
    return stirling1_gen(m, k, (1, 0, 0))


def stirling1_unsigned(m: int, k: int) -> MultiPoly:
    """Cycle numbers [m k] = (-1)^(m-k) s(m, k)."""
    return stirling1(m, k).scale(_sign(m - k))


def stirling2(m: int, k: int) -> MultiPoly:
    """Stirling numbers of the second kind {m k}."""
    return stirling2_gen(m, k, (1, 0, 0))


def howard1(m: int, k: int, lam, xx) -> MultiPoly:
    """Howard's degenerate weighted numbers S_1(m, k, x | lambda).

    Uses S_1(m, k | 1, lambda, -x) = (-1)^(m-k) S_1(m, k, x + lambda | lambda).
    """
    lam, xx = as_poly(lam), as_poly(xx)
    return stirling1_gen(m, k, (1, lam, lam - xx)).scale(_sign(m - k))


def howard2(m: int, k: int, lam, xx) -> MultiPoly:
    """Howard's degenerate weighted numbers S_2(m, k, x | lambda) = S_2(m, k | 1, lambda, -x)."""
    return stirling2_gen(m, k, (1, lam, -as_poly(xx)))


def carlitz_R1(m: int, k: int, xx) -> MultiPoly:
    """Carlitz weighted Stirling numbers R_1(m, k, x) = (-1)^(m-k) S_1(m, k | 1, 0, -x)."""
    return stirling1_gen(m, k, (1, 0, -as_poly(xx))).scale(_sign(m - k))


def carlitz_R2(m: int, k: int, xx) -> MultiPoly:
    """Carlitz weighted Stirling numbers R_2(m, k, x) = S_2(m, k | 1, 0, -x)."""
    return stirling2_gen(m, k, (1, 0, -as_poly(xx)))


def degen_stirling1(m: int, k: int, lam) -> MultiPoly:
    """Carlitz degenerate Stirling numbers S_1(m, k | lambda) = (-1)^(m-k) S_1(m, k | 1, lambda, 0)."""
    return stirling1_gen(m, k, (1, lam, 0)).scale(_sign(m - k))


def degen_stirling2(m: int, k: int, lam) -> MultiPoly:
    """Carlitz degenerate Stirling numbers S_2(m, k | lambda) = S_2(m, k | 1, lambda, 0)."""
    return stirling2_gen(m, k, (1, lam, 0))


def r_stirling1(m: int, k: int, r: int) -> MultiPoly:
    """r-Stirling numbers of the first kind [m k]_r, via S_1(m-r, k-r | -1, 0, r).

    Zero whenever m < r or k < r (the r distinguished elements need r cycles).
    """
    if r < 0:
        raise ValueError("r must be nonnegative")
    if m < r or k < r:
        return ZERO
    return stirling1_gen(m - r, k - r, (-1, 0, r))


def r_stirling2(m: int, k: int, r: int) -> MultiPoly:
    """r-Stirling numbers of the second kind {m k}_r = (-1)^(m-k) S_2(m-r, k-r | -1, 0, r)."""
    if r < 0:
        raise ValueError("r must be nonnegative")
    if m < r or k < r:
        return ZERO
    return stirling2_gen(m - r, k - r, (-1, 0, r)).scale(_sign(m - k))


def lah(m: int, k: int) -> MultiPoly:
    """Unsigned Lah numbers L(m, k) = S_1(m, k | -1, 1, 0)."""
    return stirling1_gen(m, k, (-1, 1, 0))


def lah_closed(m: int, k: int) -> Fraction:
    """Closed form L(m, k) = m!/k! C(m-1, k-1), with L(0, 0) = 1."""
    if m < 0 or k < 0 or k > m:
        return Fraction(0)
    if m == 0:
        return Fraction(1)
    if k == 0:
        return Fraction(0)
    return Fraction(factorial(m), factorial(k)) * comb(m - 1, k - 1)


# -- harmonic numbers -------------------------------------------------------


@lru_cache(maxsize=None)
def hyperharmonic(m: int, r: int) -> Fraction:
    """Hyperharmonic number H_m^r; zero for r < 0 or m <= 0."""
    if r < 0 or m <= 0:
        return Fraction(0)
    if r == 0:
        return Fraction(1, m)
    return sum((hyperharmonic(k, r - 1) for k in range(1, m + 1)), Fraction(0))


def harmonic(m: int) -> Fraction:
    return hyperharmonic(m, 1)
