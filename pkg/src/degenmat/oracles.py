"""Independent reference computations.

The counts enumerate set partitions and permutations explicitly; the classical
Bernoulli families are expanded as ordinary (not exponential) power series in
e^t and log(1+t).  None of it shares code with the EGF machinery it checks.
"""

from __future__ import annotations

from functools import lru_cache
from fractions import Fraction
from itertools import permutations
from math import factorial

from .ring import ONE, ZERO, MultiPoly, as_poly


def set_partitions(n: int):
    """Yield every partition of ``range(n)`` as a list of blocks (lists)."""
    if n == 0:
        yield []
        return
    for smaller in set_partitions(n - 1):
        for i in range(len(smaller)):
            yield smaller[:i] + [smaller[i] + [n - 1]] + smaller[i + 1:]
        yield smaller + [[n - 1]]


def cycles(perm) -> list[list[int]]:
    """Cycle decomposition of a permutation given in one-line form."""
    seen = [False] * len(perm)
    out = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        cyc = []
        i = start
        while not seen[i]:
            seen[i] = True
            cyc.append(i)
            i = perm[i]
        out.append(cyc)
    return out


def _distinct_owners(groups, r: int) -> bool:
    owner = {}
    for idx, g in enumerate(groups):
        for e in g:
            if e < r:
                if idx in owner.values():
                    return False
                owner[e] = idx
    return True


@lru_cache(maxsize=None)
def count_partitions(n: int, k: int, r: int = 0) -> int:
    """Partitions of an n-set into k blocks with elements 0..r-1 in distinct blocks.

    r = 0 gives the Stirling numbers of the second kind; r > 0 the r-Stirling
    numbers ``{n k}_r``.
    """
    if n < 0 or k < 0:
        return 0
    return sum(
        1 for p in set_partitions(n) if len(p) == k and _distinct_owners(p, r)
    )


@lru_cache(maxsize=None)
def count_cycles(n: int, k: int, r: int = 0) -> int:
    """Permutations of an n-set with k cycles and elements 0..r-1 in distinct cycles."""
    if n < 0 or k < 0:
        return 0
    total = 0
    for perm in permutations(range(n)):
        cs = cycles(perm)
        if len(cs) == k and _distinct_owners(cs, r):
            total += 1
    return total


@lru_cache(maxsize=None)
def count_ordered_lists(n: int, k: int) -> int:
    """Partitions of an n-set into k nonempty linearly ordered lists (Lah numbers)."""
    total = 0
    for p in set_partitions(n):
        if len(p) == k:
            prod = 1
            for block in p:
                prod *= factorial(len(block))
            total += prod
    return total


# -- ordinary power series (coefficient of t^m, no factorial scaling) -------


def _ops_mul(a, b):
    n = len(a)
    return [sum((a[k] * b[m - k] for k in range(m + 1)), ZERO) for m in range(n)]


def _ops_inv(a):
    if a[0] != ONE:
        raise ValueError("constant term must be 1")
    out = [ONE]
    for m in range(1, len(a)):
        out.append(-sum((a[k] * out[m - k] for k in range(1, m + 1)), ZERO))
    return out


def _ops_pow(a, w: int):
    if w < 0:
        a, w = _ops_inv(a), -w
    out = [ONE] + [ZERO] * (len(a) - 1)
    for _ in range(w):
        out = _ops_mul(out, a)
    return out


def bernoulli_from_exp(m: int, w: int, xx) -> MultiPoly:
    """B_m^(w)(x) from (t/(e^t - 1))^w e^(xt) as an ordinary power series in t."""
    xx = as_poly(xx)
    n = m + 1
    kernel = [MultiPoly.const(Fraction(1, factorial(k + 1))) for k in range(n)]
    tail = [(xx**k).scale(Fraction(1, factorial(k))) for k in range(n)]
    series = _ops_mul(_ops_pow(kernel, -w), tail)
    return series[m].scale(factorial(m))


def bernoulli2_from_log(m: int, w: int, xx) -> MultiPoly:
    """b_m^(w)(x) from (t/log(1+t))^w (1+t)^x as an ordinary power series in t."""
    xx = as_poly(xx)
    n = m + 1
    kernel = [MultiPoly.const(Fraction((-1) ** k, k + 1)) for k in range(n)]
    tail = []
    binom = ONE
    for k in range(n):
        tail.append(binom)
        binom = binom * (xx - k) * Fraction(1, k + 1)
    return _ops_mul(_ops_pow(kernel, -w), tail)[m]
