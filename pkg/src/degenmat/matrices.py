"""Lower-triangular matrices over Q[lambda, mu, x, y] and the Pascal, Bernoulli and Stirling matrix families.

Indices are 1-based in the public API: ``a[i, j]`` with ``1 <= j <= i <= n``.
Strictly upper entries are implicitly zero and never stored.
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from math import comb, factorial
from typing import Callable, Iterable

from . import sequences as nb
from .errors import BadShift, NonUnitDiagonal, SizeMismatch, ZeroDenominator
from .ring import ONE, ZERO, MultiPoly, as_poly, gff


class LowerTri:
    """Immutable n x n lower-triangular matrix with polynomial entries."""

    __slots__ = ("n", "_rows")

    def __init__(self, rows: Iterable[Iterable]):
        rows = tuple(tuple(as_poly(e) for e in row) for row in rows)
        for i, row in enumerate(rows):
            if len(row) != i + 1:
                raise ValueError(f"row {i + 1} has {len(row)} entries, expected {i + 1}")
        if not rows:
            raise ValueError("matrix order must be positive")
        self.n = len(rows)
        self._rows = rows

    @classmethod
    def _trusted(cls, rows) -> "LowerTri":
        obj = cls.__new__(cls)
        obj._rows = tuple(tuple(r) for r in rows)
        obj.n = len(obj._rows)
        return obj

    @classmethod
    def from_function(cls, n: int, f: Callable[[int, int], object]) -> "LowerTri":
        """Build from ``f(i, j)`` evaluated on 1 <= j <= i <= n."""
        if n < 1:
            raise ValueError("matrix order must be positive")
        return cls([f(i, j) for j in range(1, i + 1)] for i in range(1, n + 1))

    def __getitem__(self, ij) -> MultiPoly:
        i, j = ij
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise IndexError(f"index ({i}, {j}) out of range for order {self.n}")
        if j > i:
            return ZERO
        return self._rows[i - 1][j - 1]

    def rows(self) -> list[list[MultiPoly]]:
        """Full square layout, zeros included."""
        return [[self[i, j] for j in range(1, self.n + 1)] for i in range(1, self.n + 1)]

    def diagonal(self) -> tuple:
        return tuple(self._rows[i][i] for i in range(self.n))

    def is_unit(self) -> bool:
        return all(d == ONE for d in self.diagonal())

    def __eq__(self, other):
        if not isinstance(other, LowerTri):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self):
        return hash(self._rows)

    def __matmul__(self, other):
        return mat_mul(self, other)

    def __add__(self, other):
        _same_size(self, other)
        return LowerTri(
            [a + b for a, b in zip(ra, rb)] for ra, rb in zip(self._rows, other._rows)
        )

    def __sub__(self, other):
        _same_size(self, other)
        return LowerTri(
            [a - b for a, b in zip(ra, rb)] for ra, rb in zip(self._rows, other._rows)
        )

    def scale(self, c) -> "LowerTri":
        c = as_poly(c)
        return LowerTri([c * e for e in row] for row in self._rows)

    def map(self, f: Callable[[MultiPoly], MultiPoly]) -> "LowerTri":
        return LowerTri([f(e) for e in row] for row in self._rows)

    def subs(self, bindings) -> "LowerTri":
        return self.map(lambda e: e.subs(bindings))

    def __pow__(self, k: int):
        return mat_pow(self, k)

    def __repr__(self):
        return f"LowerTri({[[str(e) for e in row] for row in self._rows]})"

    def __str__(self):
        cells = [[str(e) for e in row] for row in self.rows()]
        width = max(len(c) for row in cells for c in row)
        return "\n".join("  ".join(c.rjust(width) for c in row) for row in cells)

    # -- dump formats -------------------------------------------------------

    def to_csv(self) -> str:
        """Row-major lower triangle, one matrix row per line, polynomial-text cells."""
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        for row in self._rows:
            writer.writerow(str(e) for e in row)
        return buf.getvalue()

    def to_json(self) -> dict:
        return {"n": self.n, "entries": [[str(e) for e in row] for row in self._rows]}

    @classmethod
    def from_json(cls, data) -> "LowerTri":
        if isinstance(data, str):
            data = json.loads(data)
        m = cls(data["entries"])
        if m.n != data["n"]:
            raise ValueError("declared order does not match entries")
        return m


def _same_size(a: LowerTri, b: LowerTri):
    if a.n != b.n:
        raise SizeMismatch(f"orders differ: {a.n} vs {b.n}")


def identity(n: int) -> LowerTri:
    return LowerTri.from_function(n, lambda i, j: ONE if i == j else ZERO)


def zeros(n: int) -> LowerTri:
    return LowerTri.from_function(n, lambda i, j: ZERO)


def mat_mul(a: LowerTri, b: LowerTri) -> LowerTri:
    _same_size(a, b)
    ra, rb = a._rows, b._rows
    out = []
    for i in range(a.n):
        row = []
        for j in range(i + 1):
            acc = ZERO
            for k in range(j, i + 1):
                x, y = ra[i][k], rb[k][j]
                if x and y:
                    acc = acc + x * y
            row.append(acc)
        out.append(row)
    return LowerTri._trusted(out)


def mat_inv(a: LowerTri) -> LowerTri:
    """Inverse of a unit lower-triangular matrix by forward substitution."""
    if not a.is_unit():
        raise NonUnitDiagonal("only unit lower-triangular matrices are inverted")
    n, r = a.n, a._rows
    inv = [[ZERO] * (i + 1) for i in range(n)]
    for j in range(n):
        inv[j][j] = ONE
        for i in range(j + 1, n):
            acc = ZERO
            for k in range(j, i):
                if r[i][k] and inv[k][j]:
                    acc = acc + r[i][k] * inv[k][j]
            inv[i][j] = -acc
    return LowerTri._trusted(inv)


def mat_pow(a: LowerTri, k: int) -> LowerTri:
    if k < 0:
        return mat_pow(mat_inv(a), -k)
    result, base = identity(a.n), a
    while k:
        if k & 1:
            result = mat_mul(result, base)
        k >>= 1
        if k:
            base = mat_mul(base, base)
    return result


def direct_sum(a: LowerTri, b: LowerTri) -> LowerTri:
    n = a.n + b.n

    def entry(i, j):
        if i <= a.n:
            return a[i, j]
        if j <= a.n:
            return ZERO
        return b[i - a.n, j - a.n]

    return LowerTri.from_function(n, entry)


def _assert_unit(m: LowerTri, name: str) -> LowerTri:
    assert m.is_unit(), f"{name} must have an all-ones diagonal"
    return m


# -- Pascal family ----------------------------------------------------------


def pascal(n: int, lam, xx) -> LowerTri:
    """P_n[lambda, x] with entries C(i-1, j-1) (x|lambda)_{i-j}."""
    lam, xx = as_poly(lam), as_poly(xx)
    powers = [gff(xx, lam, k) for k in range(n)]
    m = LowerTri.from_function(n, lambda i, j: powers[i - j].scale(comb(i - 1, j - 1)))
    return _assert_unit(m, "P_n")


def pascal_bar(k: int, lam, xx) -> LowerTri:
    """[1] (+) P_k[lambda, x], of order k + 1 (just [1] when k = 0)."""
    if k == 0:
        return identity(1)
    return direct_sum(identity(1), pascal(k, lam, xx))


def r_matrix(n: int, lam, xx) -> LowerTri:
    """R_n[lambda, x]: entry (x|lambda)_{i-1} / (x-lambda|lambda)_{j-1} below the diagonal.

    The quotient always cancels to ``x (x - j lambda | lambda)_{i-1-j}``, so the
    matrix is polynomial; it is undefined (ZeroDenominator) only where some
    denominator (x-lambda|lambda)_{j-1}, j < n, vanishes identically.
    """
    lam, xx = as_poly(lam), as_poly(xx)
    for j in range(1, n):
        if gff(xx - lam, lam, j - 1).is_zero():
            raise ZeroDenominator(
                f"(x - lambda | lambda)_{j - 1} vanishes at lambda={lam}, x={xx}"
            )

    def entry(i, j):
        if i == j:
            return ONE
        return xx * gff(xx - lam.scale(j), lam, i - 1 - j)

    return _assert_unit(LowerTri.from_function(n, entry), "R_n")


def r_matrix_literal(n: int, lam, xx) -> LowerTri:
    """R_n built entrywise as the literal quotient; requires rational lambda, x."""
    lam, xx = as_poly(lam).constant_value(), as_poly(xx).constant_value()

    def entry(i, j):
        if i == j:
            return ONE
        den = gff(xx - lam, lam, j - 1).constant_value()
        if den == 0:
            raise ZeroDenominator(f"(x - lambda | lambda)_{j - 1} = 0 at lambda={lam}, x={xx}")
        return gff(xx, lam, i - 1).constant_value() / den

    return LowerTri.from_function(n, entry)


def t_matrix(n: int, lam, xx) -> LowerTri:
    """T_n[lambda, x] = R_n[lambda, x]^{-1}."""
    lam, xx = as_poly(lam), as_poly(xx)

    def entry(i, j):
        if i == j:
            return ONE
        e = i - j
        coeff = (-1) ** e * factorial(i - 2) // factorial(j - 1)
        return (lam ** (e - 1) * xx).scale(coeff)

    return _assert_unit(LowerTri.from_function(n, entry), "T_n")


def embed(n: int, block: LowerTri) -> LowerTri:
    """I_{n-k} (+) block, for a block of order k <= n."""
    if block.n > n:
        raise SizeMismatch(f"block of order {block.n} does not fit in order {n}")
    if block.n == n:
        return block
    return direct_sum(identity(n - block.n), block)


def g_factor(n: int, k: int, lam, xx, *, via_t: bool = False) -> LowerTri:
    """G_k[lambda, x] = I_{n-k} (+) R_k[lambda, x].

    With ``via_t`` the R block is obtained as the inverse of T_k instead.
    """
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    block = mat_inv(t_matrix(k, lam, xx)) if via_t else r_matrix(k, lam, xx)
    return embed(n, block)


def q_factor(n: int, k: int, lam, xx) -> LowerTri:
    """Q_k[lambda, x] = I_{n-k} (+) P_k[lambda, x]."""
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    return embed(n, pascal(k, lam, xx))


def product(mats: Iterable[LowerTri]) -> LowerTri:
    mats = list(mats)
    result = mats[0]
    for m in mats[1:]:
        result = mat_mul(result, m)
    return result


def g_product(n: int, lam, xx, *, via_t: bool = False) -> LowerTri:
    """G_n G_{n-1} ... G_1."""
    return product(g_factor(n, k, lam, xx, via_t=via_t) for k in range(n, 0, -1))


def q_product(n: int, lam, xx) -> LowerTri:
    """Q_n Q_{n-1} ... Q_1."""
    return product(q_factor(n, k, lam, xx) for k in range(n, 0, -1))


# -- Bernoulli family -------------------------------------------------------


def bernoulli_matrix(n: int, w: int, lam, xx) -> LowerTri:
    """B_n^(w)[lambda, x] with entries C(i-1, j-1) beta_{i-j}^(w)(lambda, x)."""
    vals = [nb.beta(k, w, lam, xx) for k in range(n)]
    m = LowerTri.from_function(n, lambda i, j: vals[i - j].scale(comb(i - 1, j - 1)))
    return _assert_unit(m, "B_n")


def l_matrix(n: int, w: int, lam, xx) -> LowerTri:
    """L_n^(w)[lambda, x] with entries C(i-1, j-1) alpha_{i-j}^(w)(lambda, x)."""
    vals = [nb.alpha(k, w, lam, xx) for k in range(n)]
    m = LowerTri.from_function(n, lambda i, j: vals[i - j].scale(comb(i - 1, j - 1)))
    return _assert_unit(m, "L_n")


# -- Stirling families ------------------------------------------------------


def stirling_matrix_first_type(n: int, p, kind: int) -> LowerTri:
    """s_n[mu, lambda, x] (kind 1) or S_n[mu, lambda, x] (kind 2); entry S_kind(i, j)."""
    p = nb._params(p)
    m = LowerTri.from_function(n, lambda i, j: nb.stirling_gen(kind, i, j, p))
    return _assert_unit(m, "first-type Stirling matrix")


def stirling_matrix_second_type(n: int, h: int, lam, xx, kind: int) -> LowerTri:
    """G_{n,h}[1, lambda, x] (kind 2) or g_{n,h}[1, lambda, x] (kind 1).

    Below the diagonal the entry is C(i-1, j-1)/C(i-h, j-h) S_kind(i-h, j-h | 1, lambda, x)
    when j >= h, and zero otherwise.
    """
    p = nb.StirlingParams(1, lam, xx)

    def entry(i, j):
        if i == j:
            return ONE
        if j < h:
            return ZERO
        den = comb(i - h, j - h) if i >= h and j >= h else 0
        if den == 0:
            raise BadShift(f"C({i - h}, {j - h}) vanishes at entry ({i}, {j}), h={h}")
        return nb.stirling_gen(kind, i - h, j - h, p).scale(Fraction(comb(i - 1, j - 1), den))

    return LowerTri.from_function(n, entry)
