"""Shared shorthand for catalog entries."""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .. import sequences as nb
from ..matrices import LowerTri
from ..ring import LAMBDA, MU, ONE, X, Y, ZERO, MultiPoly, as_poly, gff, rising
from .core import Grid, IdentitySpec

__all__ = [
    "C", "F", "Fraction", "Grid", "LAMBDA", "MU", "ONE", "X", "Y", "ZERO",
    "RATIONAL_SAMPLES", "RT_BINDINGS", "S1", "S2", "bracket", "brace", "fact",
    "falling", "gff", "rising", "sign", "total", "upto", "restrict", "register",
    "SPECS", "as_poly", "nb",
]

# nonzero, mixed signs and non-integers
RATIONAL_SAMPLES = tuple(Fraction(v) for v in ("1", "-1", "1/2", "-1/2", "2", "3/5"))

# (lambda, x) pairs keeping every (x - lambda | lambda)_{j-1}, j <= 7, nonzero
RT_BINDINGS = (
    (Fraction(1, 2), Fraction(3, 5)),
    (Fraction(-1), Fraction(1, 2)),
    (Fraction(2), Fraction(-1, 2)),
    (Fraction(3, 5), Fraction(-1)),
)

SPECS: list[IdentitySpec] = []


def register(ident: str, anchor: str, domain: str, grid, admits=None):
    """Decorator adding the instantiator to the catalog under ``ident``."""

    def deco(fn):
        SPECS.append(IdentitySpec(ident, anchor, domain, fn, grid, admits))
        return fn

    return deco


def C(n: int, k: int) -> Fraction:
    """Binomial coefficient with integer (possibly negative) upper index; 0 for k < 0."""
    if k < 0:
        return Fraction(0)
    num = 1
    for i in range(k):
        num *= n - i
    return Fraction(num, factorial(k))


def F(a, b=1) -> Fraction:
    return Fraction(a) / Fraction(b)


def fact(n: int) -> int:
    return factorial(n)


def sign(e: int) -> int:
    return -1 if e % 2 else 1


def falling(base, k: int) -> MultiPoly:
    return gff(base, 1, k)


def total(terms) -> MultiPoly:
    acc = ZERO
    for t in terms:
        acc = acc + t
    return acc


def S1(m, k, mu, lam, x) -> MultiPoly:
    return nb.stirling1_gen(m, k, (mu, lam, x))


def S2(m, k, mu, lam, x) -> MultiPoly:
    return nb.stirling2_gen(m, k, (mu, lam, x))


def bracket(m: int, k: int, r: int = 0) -> MultiPoly:
    """[m k]_r (r = 0: unsigned Stirling numbers of the first kind)."""
    if r == 0:
        return nb.stirling1_unsigned(m, k) if m >= 0 and k >= 0 else ZERO
    return nb.r_stirling1(m, k, r)


def brace(m: int, k: int, r: int = 0) -> MultiPoly:
    """{m k}_r (r = 0: Stirling numbers of the second kind)."""
    if r == 0:
        return nb.stirling2(m, k) if m >= 0 and k >= 0 else ZERO
    return nb.r_stirling2(m, k, r)


def upto(limit: int, start: int = 0):
    return range(start, limit + 1)


def restrict(m: LowerTri, h: int) -> LowerTri:
    """Zero the columns j < h (only columns j >= h are claimed to agree)."""
    return LowerTri.from_function(m.n, lambda i, j: m[i, j] if j >= h else ZERO)
