"""Pascal functional matrix: addition law, R/T inverse pair, G-factorization."""

from __future__ import annotations

from ..matrices import (
    embed,
    g_factor,
    g_product,
    identity,
    mat_inv,
    mat_mul,
    mat_pow,
    pascal,
    pascal_bar,
    product,
    r_matrix,
    r_matrix_literal,
    t_matrix,
)
from ..ring import parse_poly
from ._common import LAMBDA, RT_BINDINGS, X, Y, C, Grid, gff, register, total, upto


@register(
    "gff-addition",
    "§2, 'Since (x+y|λ)_m = Σ C(m,k)(x|λ)_{m−k}(y|λ)_k'",
    "0 <= m <= idx+1; symbolic lambda, x, y",
    lambda lim: Grid(m=upto(lim.idx + 1)),
)
def _gff_addition(c):
    m = c["m"]
    rhs = total(gff(X, LAMBDA, m - k) * gff(Y, LAMBDA, k) * C(m, k) for k in upto(m))
    return gff(X + Y, LAMBDA, m), rhs


@register(
    "pascal-addition",
    "§2, 'P_n[λ, x+y] = P_n[λ,x] P_n[λ,y]'",
    "1 <= n <= n_sym; symbolic lambda, x, y",
    lambda lim: Grid(n=upto(lim.n_sym, 1)),
)
def _pascal_addition(c):
    n = c["n"]
    return pascal(n, LAMBDA, X + Y), mat_mul(pascal(n, LAMBDA, X), pascal(n, LAMBDA, Y))


@register(
    "pascal-inverse",
    "§2, 'P_n^{−1}[λ,x] = P_n[λ,−x]'",
    "1 <= n <= n_sym; symbolic lambda, x",
    lambda lim: Grid(n=upto(lim.n_sym, 1)),
)
def _pascal_inverse(c):
    n = c["n"]
    return mat_inv(pascal(n, LAMBDA, X)), pascal(n, LAMBDA, -X)


@register(
    "pascal-power",
    "§3.1, 'by the fact that (P_n[λ,x])^h = P_n[λ,hx]'",
    "1 <= n <= n_sym; -2 <= h <= 3; symbolic lambda, x",
    lambda lim: Grid(n=upto(lim.n_sym, 1), h=range(-2, 4)),
)
def _pascal_power(c):
    n, h = c["n"], c["h"]
    return mat_pow(pascal(n, LAMBDA, X), h), pascal(n, LAMBDA, X * h)


@register(
    "thm-2.1",
    "Thm 2.1, 'We apply induction on i' (R_n^{−1}[λ,x] = T_n[λ,x])",
    "1 <= n <= n_rat; rational (lambda, x) with (x-lambda|lambda)_{j-1} != 0",
    lambda lim: Grid(n=upto(lim.n_rat, 1), binding=RT_BINDINGS),
)
def _thm_2_1(c):
    n, (lam, x) = c["n"], c["binding"]
    r = r_matrix_literal(n, lam, x)
    t = t_matrix(n, lam, x)
    return [(mat_mul(r, t), identity(n)), (mat_inv(t), r)]


@register(
    "thm-2.1-symbolic",
    "Thm 2.1, 'R_n^{−1}[λ,x] = T_n[λ,x]' (cancelled polynomial form of R)",
    "1 <= n <= n_sym; symbolic lambda, x",
    lambda lim: Grid(n=upto(lim.n_sym, 1)),
)
def _thm_2_1_symbolic(c):
    n = c["n"]
    return [
        (mat_mul(r_matrix(n, LAMBDA, X), t_matrix(n, LAMBDA, X)), identity(n)),
        (mat_inv(t_matrix(n, LAMBDA, X)), r_matrix(n, LAMBDA, X)),
    ]


@register(
    "lem-rp",
    "Lemma 'lem rp', Eqs. (15)/(16), 'This completes the proof' (R_k P̄_{k−1} = P_k)",
    "1 <= k <= n_rat; rational (lambda, x) with nonzero denominators",
    lambda lim: Grid(k=upto(lim.n_rat, 1), binding=RT_BINDINGS),
)
def _lem_rp(c):
    k, (lam, x) = c["k"], c["binding"]
    return mat_mul(r_matrix_literal(k, lam, x), pascal_bar(k - 1, lam, x)), pascal(k, lam, x)


@register(
    "thm-pg",
    "Thm 'teo pg', 'which generalizes the result of Zhang' (P_n = G_n⋯G_1)",
    "1 <= n <= n_sym; symbolic lambda, x; G built from R and from T^{-1}",
    lambda lim: Grid(n=upto(lim.n_sym, 1)),
)
def _thm_pg(c):
    n = c["n"]
    p = pascal(n, LAMBDA, X)
    return [(g_product(n, LAMBDA, X), p), (g_product(n, LAMBDA, X, via_t=True), p)]


@register(
    "thm-pg-rational",
    "Thm 'teo pg', 'P_n[λ,x] = G_n[λ,x] G_{n−1}[λ,x] ⋯ G_1[λ,x]' (literal R entries)",
    "1 <= n <= n_rat; rational (lambda, x) with nonzero denominators",
    lambda lim: Grid(n=upto(lim.n_rat, 1), binding=RT_BINDINGS),
)
def _thm_pg_rational(c):
    n, (lam, x) = c["n"], c["binding"]
    factors = [embed(n, r_matrix_literal(k, lam, x)) for k in range(n, 0, -1)]
    return product(factors), pascal(n, lam, x)


_EXAMPLE_FACTORS = (
    [["1"], ["x", "1"], ["x^2 - x*lambda", "x", "1"],
     ["x^3 - 3*x^2*lambda + 2*x*lambda^2", "x^2 - 2*x*lambda", "x", "1"]],
    [["1"], ["0", "1"], ["0", "x", "1"], ["0", "x^2 - x*lambda", "x", "1"]],
    [["1"], ["0", "1"], ["0", "0", "1"], ["0", "0", "x", "1"]],
)
_EXAMPLE_PRODUCT = [
    ["1"], ["x", "1"], ["x^2 - x*lambda", "2*x", "1"],
    ["x^3 - 3*x^2*lambda + 2*x*lambda^2", "3*x^2 - 3*x*lambda", "3*x", "1"],
]


def example_matrices():
    """The three displayed factors and the product of the 4 x 4 worked example."""
    from ..matrices import LowerTri

    factors = [LowerTri([[parse_poly(e) for e in row] for row in f]) for f in _EXAMPLE_FACTORS]
    prod = LowerTri([[parse_poly(e) for e in row] for row in _EXAMPLE_PRODUCT])
    return factors, prod


@register(
    "example-p4",
    "§2 Example, '= P₄[λ,x]'",
    "single case n = 4; symbolic lambda, x",
    lambda lim: Grid(n=(4,)),
)
def _example_p4(c):
    factors, prod = example_matrices()
    return [
        (g_factor(4, 4, LAMBDA, X), factors[0]),
        (g_factor(4, 3, LAMBDA, X), factors[1]),
        (g_factor(4, 2, LAMBDA, X), factors[2]),
        (g_factor(4, 1, LAMBDA, X), identity(4)),
        (product(factors), prod),
        (pascal(4, LAMBDA, X), prod),
    ]
