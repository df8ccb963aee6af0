"""Exact scalar, polynomial and truncated-EGF arithmetic.

Scalars are :class:`fractions.Fraction` (aliased as ``Rational``); integral
values are kept as plain ``int`` inside polynomials, which is both exact and
noticeably faster.

Polynomials live in the fixed ring Q[lambda, mu, x, y].  A monomial exponent
vector ``(e_lambda, e_mu, e_x, e_y)`` is packed into a single integer key with
16 bits per slot, so multiplying monomials is one integer addition.

Truncated exponential generating functions store ``a_m`` (the coefficient of
``t^m/m!``) rather than ``a_m/m!``, so multiplication is binomial convolution.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import comb
from numbers import Rational as _RationalABC
from typing import Iterable, Mapping, Union

from .errors import NonUnitConstant, NotDivisible, OrderMismatch, ParseError

Rational = Fraction

SYMBOLS = ("lambda", "mu", "x", "y")
_SLOT = {s: i for i, s in enumerate(SYMBOLS)}
_BITS = 16
_MASK = (1 << _BITS) - 1
# printing priority: y, x, mu, lambda (matches how the identities are written)
_PRINT_ORDER = (3, 2, 1, 0)

Scalar = Union[int, Fraction]


def _norm(c):
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


def _pack(exps) -> int:
    key = 0
    for slot, e in enumerate(exps):
        if e < 0 or e > _MASK:
            raise ValueError(f"exponent out of range: {e}")
        key |= e << (_BITS * slot)
    return key


def _unpack(key: int) -> tuple[int, int, int, int]:
    return tuple((key >> (_BITS * s)) & _MASK for s in range(4))


def to_rational(value) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to an exact Fraction."""
    if isinstance(value, bool):
        raise TypeError("bool is not a rational")
    if isinstance(value, _RationalABC):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


_RAT_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


def parse_rational(text: str) -> Fraction:
    m = _RAT_RE.match(text)
    if not m:
        raise ParseError(f"not an exact rational: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ParseError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def _fmt_coeff(c) -> str:
    c = Fraction(c)
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


class MultiPoly:
    """Immutable polynomial over Q in the symbols lambda, mu, x, y.

    Zero coefficients are never stored, so two equal polynomials always have
    identical term maps and compare/hash consistently.
    """

    __slots__ = ("_t", "_hash")

    def __init__(self, terms: Mapping[tuple, Scalar] | None = None):
        t = {}
        if terms:
            for exps, c in terms.items():
                if len(exps) != 4:
                    raise ValueError("exponent vectors have four slots (lambda, mu, x, y)")
                c = _norm(to_rational(c))
                if c:
                    key = _pack(exps)
                    c = _norm(t.get(key, 0) + c)
                    if c:
                        t[key] = c
                    else:
                        t.pop(key, None)
        self._t = t
        self._hash = None

    @classmethod
    def _raw(cls, t: dict) -> "MultiPoly":
        obj = cls.__new__(cls)
        obj._t = t
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c: Scalar) -> "MultiPoly":
        c = _norm(to_rational(c))
        return cls._raw({0: c} if c else {})

    @classmethod
    def symbol(cls, name: str) -> "MultiPoly":
        try:
            slot = _SLOT[name]
        except KeyError:
            raise ParseError(f"unknown symbol {name!r}; expected one of {SYMBOLS}") from None
        return cls._raw({1 << (_BITS * slot): 1})

    # -- inspection ---------------------------------------------------------

    @property
    def terms(self) -> dict[tuple[int, int, int, int], Scalar]:
        return {_unpack(k): c for k, c in self._t.items()}

    def is_zero(self) -> bool:
        return not self._t

    def is_constant(self) -> bool:
        return not self._t or (len(self._t) == 1 and 0 in self._t)

    def constant_value(self) -> Fraction:
        """The value of a constant polynomial; raises if symbols remain."""
        if not self.is_constant():
            raise ValueError(f"polynomial {self} is not constant")
        return Fraction(self._t.get(0, 0))

    def constant_term(self) -> Scalar:
        return self._t.get(0, 0)

    def degree(self, symbol: str | None = None) -> int:
        if not self._t:
            return -1
        if symbol is None:
            return max(sum(_unpack(k)) for k in self._t)
        slot = _SLOT[symbol]
        return max(_unpack(k)[slot] for k in self._t)

    def symbols(self) -> set[str]:
        used = set()
        for k in self._t:
            for s, e in zip(SYMBOLS, _unpack(k)):
                if e:
                    used.add(s)
        return used

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other._t:
            return self
        if not self._t:
            return other
        t = dict(self._t)
        for k, c in other._t.items():
            v = t.get(k)
            if v is None:
                t[k] = c
            else:
                v = _norm(v + c)
                if v:
                    t[k] = v
                else:
                    del t[k]
        return MultiPoly._raw(t)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw({k: -c for k, c in self._t.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, _RationalABC) and not isinstance(other, bool):
            return self.scale(other)
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._t, other._t
        if not a or not b:
            return ZERO
        if len(a) < len(b):
            a, b = b, a
        t: dict = {}
        get = t.get
        for kb, cb in b.items():
            for ka, ca in a.items():
                k = ka + kb
                t[k] = get(k, 0) + ca * cb
        return MultiPoly._raw({k: _norm(c) for k, c in t.items() if c})

    __rmul__ = __mul__

    def scale(self, c: Scalar) -> "MultiPoly":
        c = _norm(to_rational(c))
        if not c:
            return ZERO
        if c == 1:
            return self
        return MultiPoly._raw({k: _norm(v * c) for k, v in self._t.items()})

    def __truediv__(self, other):
        # only division by a nonzero scalar (or constant polynomial) is exact in general
        if isinstance(other, MultiPoly):
            other = other.constant_value()
        c = to_rational(other)
        if c == 0:
            raise ZeroDivisionError("polynomial division by zero")
        return self.scale(1 / c)

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("polynomial powers must be nonnegative integers")
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._t == other._t

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._t.items()))
        return self._hash

    def __bool__(self):
        return bool(self._t)

    # -- substitution -------------------------------------------------------

    def subs(self, bindings: Mapping[str, object]) -> "MultiPoly":
        """Substitute symbols by rationals (or polynomials); unbound symbols remain."""
        if not bindings:
            return self
        values = [None] * 4
        for name, v in bindings.items():
            if name not in _SLOT:
                raise ParseError(f"unknown symbol {name!r}")
            values[_SLOT[name]] = _coerce_strict(v)
        result = ZERO
        cache: dict = {}
        for key, c in self._t.items():
            exps = _unpack(key)
            kept = [0, 0, 0, 0]
            factor = MultiPoly._raw({0: c})
            for slot, e in enumerate(exps):
                if not e:
                    continue
                v = values[slot]
                if v is None:
                    kept[slot] = e
                else:
                    p = cache.get((slot, e))
                    if p is None:
                        p = cache[(slot, e)] = v ** e
                    factor = factor * p
            if any(kept):
                factor = factor * MultiPoly._raw({_pack(kept): 1})
            result = result + factor
        return result

    def div_symbol(self, symbol: str) -> "MultiPoly":
        """Exact division by a single symbol; every term must contain it."""
        shift = 1 << (_BITS * _SLOT[symbol])
        slot = _SLOT[symbol]
        t = {}
        for k, c in self._t.items():
            if not _unpack(k)[slot]:
                raise NotDivisible(f"{self} is not divisible by {symbol}")
            t[k - shift] = c
        return MultiPoly._raw(t)

    # -- text form ----------------------------------------------------------

    def _sorted_items(self):
        def order(item):
            e = _unpack(item[0])
            return tuple(e[s] for s in _PRINT_ORDER)

        return sorted(self._t.items(), key=order, reverse=True)

    def __str__(self):
        if not self._t:
            return "0"
        parts = []
        for key, c in self._sorted_items():
            e = _unpack(key)
            factors = []
            for slot in _PRINT_ORDER:
                if e[slot] == 1:
                    factors.append(SYMBOLS[slot])
                elif e[slot] > 1:
                    factors.append(f"{SYMBOLS[slot]}^{e[slot]}")
            neg = c < 0
            mag = -c if neg else c
            if factors:
                body = "*".join(factors)
                if mag != 1:
                    body = f"{_fmt_coeff(mag)}*{body}"
            else:
                body = _fmt_coeff(mag)
            if not parts:
                parts.append(f"-{body}" if neg else body)
            else:
                parts.append(f" - {body}" if neg else f" + {body}")
        return "".join(parts)

    def __repr__(self):
        return f"MultiPoly({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> "MultiPoly":
        return parse_poly(text)


def _coerce(v):
    if isinstance(v, MultiPoly):
        return v
    if isinstance(v, bool):
        return NotImplemented
    if isinstance(v, _RationalABC):
        return MultiPoly.const(v)
    return NotImplemented


def _coerce_strict(v) -> MultiPoly:
    if isinstance(v, str):
        return as_poly(v)
    p = _coerce(v)
    if p is NotImplemented:
        raise TypeError(f"cannot use {v!r} as a polynomial")
    return p


ZERO = MultiPoly._raw({})
ONE = MultiPoly._raw({0: 1})
LAMBDA = MultiPoly.symbol("lambda")
MU = MultiPoly.symbol("mu")
X = MultiPoly.symbol("x")
Y = MultiPoly.symbol("y")


def as_poly(value) -> MultiPoly:
    """Coerce a parameter to a polynomial.

    Accepts MultiPoly, int, Fraction, a symbol name, or any text the
    polynomial parser understands (``"1/2"``, ``"x - lambda"``).
    """
    if isinstance(value, MultiPoly):
        return value
    if isinstance(value, str):
        return parse_poly(value)
    return _coerce_strict(value)


_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z_]+)|(.))")


def parse_poly(text: str) -> MultiPoly:
    """Parse the canonical text form, e.g. ``"x^2 - x - 1/6*lambda^2 + 1/6"``.

    Grammar: sums/differences of terms, a term being ``*``-separated factors,
    a factor being an integer, ``p/q``, or ``symbol[^k]``; parentheses group.
    """
    tokens = []
    for m in _TOKEN_RE.finditer(text):
        num, name, other = m.groups()
        if num is not None:
            tokens.append(("num", int(num)))
        elif name is not None:
            if name not in _SLOT:
                raise ParseError(f"unknown symbol {name!r} in {text!r}")
            tokens.append(("sym", name))
        elif other is not None and not other.isspace():
            if other not in "+-*/^()":
                raise ParseError(f"unexpected character {other!r} in {text!r}")
            tokens.append(("op", other))
    if not tokens:
        raise ParseError("empty polynomial text")
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else (None, None)

    def take():
        nonlocal pos
        tok = peek()
        pos += 1
        return tok

    def expr():
        sign = 1
        if peek() == ("op", "-"):
            take()
            sign = -1
        elif peek() == ("op", "+"):
            take()
        acc = term().scale(sign)
        while peek() in (("op", "+"), ("op", "-")):
            op = take()[1]
            t = term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term():
        acc = factor()
        while peek() in (("op", "*"), ("op", "/")):
            op = take()[1]
            f = factor()
            if op == "*":
                acc = acc * f
            else:
                acc = acc / f
        return acc

    def factor():
        kind, val = take()
        if kind == "num":
            base = MultiPoly.const(val)
        elif kind == "sym":
            base = MultiPoly.symbol(val)
        elif (kind, val) == ("op", "("):
            base = expr()
            if take() != ("op", ")"):
                raise ParseError(f"unbalanced parentheses in {text!r}")
        elif (kind, val) == ("op", "-"):
            return -factor()
        else:
            raise ParseError(f"unexpected token {val!r} in {text!r}")
        if peek() == ("op", "^"):
            take()
            k, e = take()
            if k != "num":
                raise ParseError(f"exponent must be a nonnegative integer in {text!r}")
            base = base**e
        return base

    result = expr()
    if pos != len(tokens):
        raise ParseError(f"trailing input in {text!r}")
    return result


def poly_arith(a, b, op: str) -> MultiPoly:
    a, b = as_poly(a), as_poly(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


def poly_eval(p, bindings: Mapping[str, object]) -> MultiPoly:
    return as_poly(p).subs(bindings)


def poly_exact_div_symbol(p, symbol: str) -> MultiPoly:
    return as_poly(p).div_symbol(symbol)


def gff(base, step, k: int) -> MultiPoly:
    """Generalized falling factorial ``(base|step)_k = base (base-step) ... (base-(k-1)step)``."""
    if k < 0:
        raise ValueError("gff order must be nonnegative")
    base, step = as_poly(base), as_poly(step)
    result = ONE
    for i in range(k):
        result = result * (base - step.scale(i))
    return result


def rising(base, k: int) -> MultiPoly:
    """Rising factorial ``<base>_k = base (base+1) ... (base+k-1)``."""
    if k < 0:
        raise ValueError("rising factorial order must be nonnegative")
    base = as_poly(base)
    result = ONE
    for i in range(k):
        result = result * (base + i)
    return result


def falling(base, k: int) -> MultiPoly:
    """Ordinary falling factorial, i.e. ``gff(base, 1, k)``."""
    return gff(base, 1, k)


class EGFSeries:
    """Truncated exponential generating function ``sum a_m t^m/m!``, m = 0..order."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable):
        self.coeffs = tuple(as_poly(c) for c in coeffs)
        if not self.coeffs:
            raise ValueError("a series needs at least the constant coefficient")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def _from_polys(cls, polys) -> "EGFSeries":
        obj = cls.__new__(cls)
        obj.coeffs = tuple(polys)
        return obj

    @classmethod
    def identity(cls, order: int) -> "EGFSeries":
        return cls((ONE,) + (ZERO,) * order)

    @classmethod
    def from_function(cls, f, order: int) -> "EGFSeries":
        """Series whose m-th coefficient is ``f(m)``."""
        return cls(f(m) for m in range(order + 1))

    def __getitem__(self, m: int) -> MultiPoly:
        return self.coeffs[m]

    def __eq__(self, other):
        if not isinstance(other, EGFSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"EGFSeries([{', '.join(str(c) for c in self.coeffs)}])"

    def __mul__(self, other):
        if not isinstance(other, EGFSeries):
            return NotImplemented
        return series_mul(self, other)

    def __pow__(self, k: int):
        return series_pow(self, k)

    def truncate(self, order: int) -> "EGFSeries":
        if order > self.order:
            raise OrderMismatch(f"cannot extend order {self.order} series to {order}")
        return EGFSeries(self.coeffs[: order + 1])

    def shift_down(self) -> "EGFSeries":
        """Divide a series with zero constant term by t (order drops by one)."""
        if self.coeffs[0]:
            raise NotDivisible("series has a nonzero constant term")
        return EGFSeries(c / (m + 1) for m, c in enumerate(self.coeffs[1:]))


def series_mul(a: EGFSeries, b: EGFSeries) -> EGFSeries:
    if a.order != b.order:
        raise OrderMismatch(f"orders differ: {a.order} vs {b.order}")
    n = a.order
    out = []
    for m in range(n + 1):
        acc = ZERO
        for k in range(m + 1):
            ak, bk = a.coeffs[k], b.coeffs[m - k]
            if ak and bk:
                acc = acc + (ak * bk).scale(comb(m, k))
        out.append(acc)
    return EGFSeries._from_polys(out)


def series_inv(a: EGFSeries) -> EGFSeries:
    if a.coeffs[0] != ONE:
        raise NonUnitConstant(f"constant term is {a.coeffs[0]}, not 1")
    n = a.order
    b = [ONE]
    for m in range(1, n + 1):
        acc = ZERO
        for k in range(1, m + 1):
            if a.coeffs[k]:
                acc = acc + (a.coeffs[k] * b[m - k]).scale(comb(m, k))
        b.append(-acc)
    return EGFSeries._from_polys(b)


def series_pow(a: EGFSeries, k: int) -> EGFSeries:
    if k < 0:
        return series_pow(series_inv(a), -k)
    result, base = EGFSeries.identity(a.order), a
    while k:
        if k & 1:
            result = series_mul(result, base)
        k >>= 1
        if k:
            base = series_mul(base, base)
    return result
