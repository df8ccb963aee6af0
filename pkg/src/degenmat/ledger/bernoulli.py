"""Degenerate Bernoulli polynomials of both kinds and their matrices."""

from __future__ import annotations

from ..errors import DomainViolation
from ..matrices import (
    bernoulli_matrix,
    g_product,
    identity,
    l_matrix,
    mat_inv,
    mat_mul,
    mat_pow,
    pascal,
    product,
    zeros,
)
from ..oracles import bernoulli2_from_log, bernoulli_from_exp
from ..ring import parse_poly
from ._common import (
    LAMBDA,
    RATIONAL_SAMPLES,
    X,
    Y,
    C,
    F,
    Fraction,
    Grid,
    fact,
    gff,
    nb,
    register,
    sign,
    total,
    upto,
)

ORDERS = (-1, 0, 1, 2)

BETA_LISTED = (
    "1",
    "x + 1/2*lambda - 1/2",
    "x^2 - x - 1/6*lambda^2 + 1/6",
    "x^3 - 3/2*x^2 + 1/2*x - 3/2*x^2*lambda + 3/2*x*lambda + 1/4*lambda^3 - 1/4*lambda",
    "x^4 - 2*x^3 + x^2 - 4*x^3*lambda + 4*x^2*lambda^2 + 6*x^2*lambda - 4*x*lambda^2"
    " - 2*x*lambda - 19/30*lambda^4 + 2/3*lambda^2 - 1/30",
)


def beta(m, w, lam, x):
    return nb.beta(m, w, lam, x)


@register(
    "beta-first-few",
    "§3.1, 'The first few of the degenerate Bernoulli polynomials are'",
    "0 <= m <= 4; symbolic lambda, x",
    lambda lim: Grid(m=upto(4)),
)
def _beta_first_few(c):
    m = c["m"]
    return beta(m, 1, LAMBDA, X), parse_poly(BETA_LISTED[m])


@register(
    "eq-0",
    "Eq. (0), 'β_k^{(w)}(λ,x) β_{m−k}^{(z)}(λ,y)'",
    "0 <= m <= idx; w, z in {-1, 0, 1, 2}; symbolic lambda, x, y",
    lambda lim: Grid(m=upto(lim.idx), w=ORDERS, z=ORDERS),
)
def _eq_0(c):
    m, w, z = c["m"], c["w"], c["z"]
    rhs = total(
        beta(k, w, LAMBDA, X) * beta(m - k, z, LAMBDA, Y) * C(m, k) for k in upto(m)
    )
    return beta(m, w + z, LAMBDA, X + Y), rhs


@register(
    "beta-addition",
    "§3.1, 'β_m(λ, x+y) = Σ C(m,k) β_k(λ,x)(y|λ)_{m−k}'",
    "0 <= m <= idx; symbolic lambda, x, y",
    lambda lim: Grid(m=upto(lim.idx)),
)
def _beta_addition(c):
    m = c["m"]
    rhs = total(beta(k, 1, LAMBDA, X) * gff(Y, LAMBDA, m - k) * C(m, k) for k in upto(m))
    return beta(m, 1, LAMBDA, X + Y), rhs


@register(
    "beta-limit",
    "§3.1, 'it is evident that β_m^{(w)}(0,x) = B_m^{(w)}(x)'",
    "0 <= m <= idx; -2 <= w <= 3; symbolic x; B from (t/(e^t-1))^w e^{xt}",
    lambda lim: Grid(m=upto(lim.idx), w=range(-2, 4)),
)
def _beta_limit(c):
    m, w = c["m"], c["w"]
    return beta(m, w, LAMBDA, X).subs({"lambda": 0}), bernoulli_from_exp(m, w, X)


@register(
    "thm-B-product",
    "§3.1 Theorem, 'B_n^{(w+z)}[λ,x+y] = B_n^{(w)}[λ,x] B_n^{(z)}[λ,y]'",
    "1 <= n <= n_sym; w, z in {-1, 0, 1, 2}; symbolic lambda, x, y",
    lambda lim: Grid(n=upto(lim.n_sym, 1), w=ORDERS, z=ORDERS),
)
def _thm_b_product(c):
    n, w, z = c["n"], c["w"], c["z"]
    lhs = bernoulli_matrix(n, w + z, LAMBDA, X + Y)
    return [
        (lhs, mat_mul(bernoulli_matrix(n, w, LAMBDA, X), bernoulli_matrix(n, z, LAMBDA, Y))),
        (lhs, mat_mul(bernoulli_matrix(n, z, LAMBDA, X), bernoulli_matrix(n, w, LAMBDA, Y))),
    ]


@register(
    "cor-bk",
    "Corollary 'cor bk', '(B_n^{(w)}[λ,x])^k = B_n^{(kw)}[λ,kx]'",
    "1 <= n <= n_sym; 1 <= k <= 3; w in {-1, 0, 1, 2}; symbolic lambda, x, y",
    lambda lim: Grid(n=upto(lim.n_sym, 1), k=upto(3, 1), w=ORDERS),
)
def _cor_bk(c):
    n, k, w = c["n"], c["k"], c["w"]
    power = (
        mat_pow(bernoulli_matrix(n, w, LAMBDA, X), k),
        bernoulli_matrix(n, k * w, LAMBDA, X * k),
    )
    # general product with distinct orders w_i = w + i and arguments x, y, x - y
    ws = [w + i for i in range(k)]
    xs = [X, Y, X - Y][:k]
    general = (
        product(bernoulli_matrix(n, wi, LAMBDA, xi) for wi, xi in zip(ws, xs)),
        bernoulli_matrix(n, sum(ws), LAMBDA, sum(xs[1:], xs[0])),
    )
    return [power, general]


@register(
    "eq-bp",
    "Corollary 'teo bp', Eq. (bp), 'B_n^{(w)}[λ,x+y] = P_n[λ,x] B_n^{(w)}[λ,y]'",
    "1 <= n <= n_sym; w in {-1, 0, 1, 2}; symbolic lambda, x, y",
    lambda lim: Grid(n=upto(lim.n_sym, 1), w=ORDERS),
)
def _eq_bp(c):
    n, w = c["n"], c["w"]
    target = bernoulli_matrix(n, w, LAMBDA, X + Y)
    p, b = pascal(n, LAMBDA, X), bernoulli_matrix(n, w, LAMBDA, Y)
    return [(mat_mul(p, b), target), (mat_mul(b, p), target)]


@register(
    "B-inverse",
    "Corollary 'teo bp', '(B_n^{(w)}[λ,x])^{−1} = B_n^{(−w)}[λ,−x] = P_n[λ,−x] B_n^{(−w)}[λ]'",
    "1 <= n <= n_sym; w in {-1, 0, 1, 2}; symbolic lambda, x",
    lambda lim: Grid(n=upto(lim.n_sym, 1), w=ORDERS),
)
def _b_inverse(c):
    n, w = c["n"], c["w"]
    target = bernoulli_matrix(n, -w, LAMBDA, -X)
    return [
        (mat_inv(bernoulli_matrix(n, w, LAMBDA, X)), target),
        (mat_mul(pascal(n, LAMBDA, -X), bernoulli_matrix(n, -w, LAMBDA, 0)), target),
    ]


@register(
    "B-factorization",
    "§3.1 Corollary, 'The following is a consequence' (B_n[λ,x] = G_n⋯G_1 B_n[λ])",
    "1 <= n <= n_sym; symbolic lambda, x",
    lambda lim: Grid(n=upto(lim.n_sym, 1)),
)
def _b_factorization(c):
    n = c["n"]
    rhs = mat_mul(g_product(n, LAMBDA, X), bernoulli_matrix(n, 1, LAMBDA, 0))
    return bernoulli_matrix(n, 1, LAMBDA, X), rhs


@register(
    "B-nilpotent",
    "§3.1, 'is a lower-triangular matrix, it follows that (B_n[λ,x] − I_n)^h = [0]'",
    "1 <= n <= n_sym; n <= h <= 6; symbolic lambda, x",
    lambda lim: Grid(n=upto(lim.n_sym, 1), h=lambda b: range(b["n"], 7)),
    admits=lambda c: 1 <= c["n"] <= c["h"],
)
def _b_nilpotent(c):
    n, h = c["n"], c["h"]
    b = bernoulli_matrix(n, 1, LAMBDA, X)
    expanded = zeros(n)
    for k in upto(h):
        expanded = expanded + bernoulli_matrix(n, k, LAMBDA, X * k).scale(C(h, k) * sign(h - k))
    return [(mat_pow(b - identity(n), h), zeros(n)), (expanded, zeros(n))]


@register(
    "B-power-sum",
    "§3.1, '(B_n[λ, x/h])^h = B_n^{(h)}[λ,x] = Σ C(h,k)(−1)^{h−1−k} B_n^{(k)}[λ, kx/h]'",
    "1 <= n <= h <= 6, n <= n_sym; symbolic lambda, x",
    lambda lim: Grid(n=upto(lim.n_sym, 1), h=lambda b: range(b["n"], 7)),
    admits=lambda c: 1 <= c["n"] <= c["h"],
)
def _b_power_sum(c):
    n, h = c["n"], c["h"]
    target = bernoulli_matrix(n, h, LAMBDA, X)
    s = zeros(n)
    for k in range(h):
        s = s + bernoulli_matrix(n, k, LAMBDA, X * F(k, h)).scale(C(h, k) * sign(h - 1 - k))
    return [(mat_pow(bernoulli_matrix(n, 1, LAMBDA, X * F(1, h)), h), target), (s, target)]


def _require_m_below_h(c):
    if not c["m"] < c["h"]:
        raise DomainViolation(f"needs 0 <= m < h, got m={c['m']}, h={c['h']}")
    return True


@register(
    "h-sum-beta",
    "§3.1, 'This yields Σ C(h,k)(−1)^{h−1−k} β_m^{(k)}(λ, kx/h) = β_m^{(h)}(λ,x), for 0 ≤ m < h'",
    "1 <= h <= 6; 0 <= m < h; symbolic lambda, x",
    lambda lim: Grid(h=upto(6, 1), m=lambda b: range(0, b["h"])),
    admits=lambda c: 0 <= c["m"] < c["h"],
)
def _h_sum_beta(c):
    _require_m_below_h(c)
    m, h = c["m"], c["h"]
    lhs = total(
        beta(m, k, LAMBDA, X * F(k, h)).scale(C(h, k) * sign(h - 1 - k)) for k in range(h)
    )
    return lhs, beta(m, h, LAMBDA, X)


@register(
    "beta-known-shift",
    "§3.1, 'By the known identity β_m^{(h)}(λ,1) = mβ_{m−1}^{(h−1)}(λ) + β_m^{(h)}(λ)'",
    "1 <= m <= idx; -2 <= h <= 4; symbolic lambda",
    lambda lim: Grid(m=upto(lim.idx, 1), h=range(-2, 5)),
)
def _beta_known_shift(c):
    m, h = c["m"], c["h"]
    return beta(m, h, LAMBDA, 1), beta(m - 1, h - 1, LAMBDA, 0).scale(m) + beta(m, h, LAMBDA, 0)


@register(
    "h-sum-shift",
    "§3.1, 'By the known identity' (Σ C(h,k)(−1)^{h−k} β_m^{(k)}(λ, k/h) = −mβ_{m−1}^{(h−1)}(λ), for 1 ≤ m < h)",
    "2 <= h <= 6; 1 <= m < h; symbolic lambda; k = h term read as beta_m^(h)(lambda, 0)",
    lambda lim: Grid(h=upto(6, 2), m=lambda b: range(1, b["h"])),
    admits=lambda c: 1 <= c["m"] < c["h"],
)
def _h_sum_shift(c):
    _require_m_below_h(c)
    m, h = c["m"], c["h"]
    # the k = h term is taken at argument 0; at argument 1 the sum vanishes identically
    lhs = total(beta(m, k, LAMBDA, F(k, h)).scale(C(h, k) * sign(h - k)) for k in range(h))
    lhs = lhs + beta(m, h, LAMBDA, 0)
    return lhs, beta(m - 1, h - 1, LAMBDA, 0).scale(-m)


@register(
    "h-sum-gff",
    "§3.1, 'by the fact that (P_n[λ,x])^h = P_n[λ,hx]' (Σ C(h,k)(−1)^{h−1−k}(kx|λ)_m = (hx|λ)_m)",
    "1 <= h <= 6; 0 <= m < h; symbolic lambda, x",
    lambda lim: Grid(h=upto(6, 1), m=lambda b: range(0, b["h"])),
    admits=lambda c: 0 <= c["m"] < c["h"],
)
def _h_sum_gff(c):
    _require_m_below_h(c)
    m, h = c["m"], c["h"]
    lhs = total(gff(X * k, LAMBDA, m).scale(C(h, k) * sign(h - 1 - k)) for k in range(h))
    return lhs, gff(X * h, LAMBDA, m)


@register(
    "eq-1b2",
    "Eq. (1b2), §3.2, 'It is clear from (1)' (β_m^{(w)}(1/λ, x/λ) = λ^{−m} α_m^{(w)}(λ,x))",
    "0 <= m <= idx; w in {0, 1, 2}; lambda in the rational samples; x in {0, 1, -2}",
    lambda lim: Grid(
        m=upto(lim.idx), w=(0, 1, 2), lam=RATIONAL_SAMPLES, x=(Fraction(0), Fraction(1), Fraction(-2))
    ),
    admits=lambda c: c["lam"] != 0,
)
def _eq_1b2(c):
    m, w, lam, x = c["m"], c["w"], c["lam"], c["x"]
    return beta(m, w, 1 / lam, x / lam), nb.alpha(m, w, lam, x).scale((1 / lam) ** m)


@register(
    "alpha-limit",
    "§3.2, 'In the limiting case λ = 0 we have α_m^{(w)}(0,x) = m! b_m^{(w)}(x)'",
    "0 <= m <= idx; -2 <= w <= 3; symbolic x; b from (t/log(1+t))^w (1+t)^x",
    lambda lim: Grid(m=upto(lim.idx), w=range(-2, 4)),
)
def _alpha_limit(c):
    m, w = c["m"], c["w"]
    return (
        nb.alpha(m, w, LAMBDA, X).subs({"lambda": 0}),
        bernoulli2_from_log(m, w, X).scale(fact(m)),
    )


@register(
    "zero-order-matrices",
    "§3.1/§3.2, 'B_n^{(0)}[λ,x] = P_n[λ,x]' and 'L_n^{(0)}[λ,x] = P_n[1,x]'",
    "1 <= n <= n_sym; symbolic lambda, x",
    lambda lim: Grid(n=upto(lim.n_sym, 1)),
)
def _zero_order(c):
    n = c["n"]
    return [
        (bernoulli_matrix(n, 0, LAMBDA, X), pascal(n, LAMBDA, X)),
        (l_matrix(n, 0, LAMBDA, X), pascal(n, 1, X)),
        (bernoulli_matrix(n, 0, LAMBDA, 0), identity(n)),
    ]
