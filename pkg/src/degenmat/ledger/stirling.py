"""Generalized Stirling numbers, first- and second-type Stirling matrices."""

from __future__ import annotations

from ..matrices import (
    LowerTri,
    bernoulli_matrix,
    direct_sum,
    g_product,
    identity,
    l_matrix,
    mat_inv,
    mat_mul,
    pascal,
    product,
    q_product,
    r_matrix_literal,
    embed,
    stirling_matrix_first_type,
    stirling_matrix_second_type,
)
from ..oracles import count_cycles, count_ordered_lists, count_partitions
from ._common import (
    LAMBDA,
    MU,
    ONE,
    RATIONAL_SAMPLES,
    RT_BINDINGS,
    X,
    Y,
    ZERO,
    C,
    F,
    Grid,
    S1,
    S2,
    fact,
    falling,
    gff,
    nb,
    register,
    restrict,
    sign,
    total,
    upto,
)

SHIFTS = range(-2, 3)
KINDS = (1, 2)


def S(kind, m, k, mu, lam, x):
    return S1(m, k, mu, lam, x) if kind == 1 else S2(m, k, mu, lam, x)


def s1(m, k, lam, x):
    return S1(m, k, 1, lam, x)


def s2(m, k, lam, x):
    return S2(m, k, 1, lam, x)


def beta(m, w, lam, x):
    return nb.beta(m, w, lam, x)


def alpha(m, w, lam, x):
    return nb.alpha(m, w, lam, x)


def G(n, h, lam, x):
    return stirling_matrix_second_type(n, h, lam, x, 2)


def g(n, h, lam, x):
    return stirling_matrix_second_type(n, h, lam, x, 1)


def triangle(lim, start=0):
    """i in start..idx, j in start..i."""
    return dict(i=upto(lim.idx, start), j=lambda b: upto(b["i"], start))


def shifted_triangle(lim, shifts=SHIFTS):
    """h in shifts, i <= idx, max(h, 0) <= j <= i."""
    return Grid(
        h=shifts,
        i=lambda b: upto(lim.idx, max(b["h"], 0)),
        j=lambda b: upto(b["i"], max(b["h"], 0)),
    )


def _j_ge_h(c):
    return c["i"] >= c["j"] >= 0 and c["j"] >= c["h"]


# -- first-type relations ---------------------------------------------------


@register(
    "eq-8",
    "Eq. (8), 'From (stx1) and (stx), it follows that' (S_i(m,k|μ,λ,x) = μ^{m−k} S_i(m,k|1,λ/μ,x/μ))",
    "0 <= k <= m <= idx; both kinds; mu in the rational samples; symbolic lambda, x",
    lambda lim: Grid(kind=KINDS, mu=RATIONAL_SAMPLES, **triangle(lim)),
    admits=lambda c: c["mu"] != 0,
)
def _eq_8(c):
    kind, mu, m, k = c["kind"], c["mu"], c["i"], c["j"]
    rhs = S(kind, m, k, 1, LAMBDA / mu, X / mu).scale(mu ** (m - k))
    return S(kind, m, k, mu, LAMBDA, X), rhs


@register(
    "eq-10",
    "Eq. (10), 'Letting λ = 0 and x = 0 in (8)' (S_i(m,k|μ,0,0) = μ^{m−k} S_i(m,k))",
    "0 <= k <= m <= idx; both kinds; symbolic mu; also the matrix form S_n[mu,0,0]",
    lambda lim: Grid(kind=KINDS, **triangle(lim)),
)
def _eq_10(c):
    kind, m, k = c["kind"], c["i"], c["j"]
    classical = nb.stirling1(m, k) if kind == 1 else nb.stirling2(m, k)
    pairs = [(S(kind, m, k, MU, 0, 0), MU ** (m - k) * classical)]
    if m == k and m >= 1:
        n = m
        mat = stirling_matrix_first_type(n, (MU, 0, 0), kind)
        ref = LowerTri.from_function(
            n,
            lambda i, j: MU ** (i - j)
            * (nb.stirling1(i, j) if kind == 1 else nb.stirling2(i, j)),
        )
        pairs.append((mat, ref))
    return pairs


@register(
    "eq-11",
    "Eq. (11)/(11a), 'Setting μ = −1 in (8)' (S_i(m,k|1,−λ,−x) = (−1)^{m−k} S_i(m,k|−1,λ,x))",
    "0 <= k <= m <= idx; both kinds; symbolic lambda, x",
    lambda lim: Grid(kind=KINDS, **triangle(lim)),
)
def _eq_11(c):
    kind, m, k = c["kind"], c["i"], c["j"]
    return S(kind, m, k, 1, -LAMBDA, -X), S(kind, m, k, -1, LAMBDA, X).scale(sign(m - k))


@register(
    "eq-9",
    "Eq. (9), 'yields S_n^{−1}[μ,λ,x] = s_n[μ,λ,x]' (Σ S_1(i,k)S_2(k,j) = Σ S_2(i,k)S_1(k,j) = δ_{i,j})",
    "1 <= n <= n_sym - 1; symbolic mu, lambda, x",
    lambda lim: Grid(n=upto(lim.n_sym - 1, 1)),
)
def _eq_9(c):
    n = c["n"]
    p = (MU, LAMBDA, X)
    s_mat = stirling_matrix_first_type(n, p, 1)
    big = stirling_matrix_first_type(n, p, 2)
    return [(mat_mul(s_mat, big), identity(n)), (mat_mul(big, s_mat), identity(n)),
            (mat_inv(big), s_mat)]


@register(
    "eq-9-scalar",
    "Eq. (9), 'Then the relation' (scalar form, indices from 0, with μ = 1)",
    "0 <= j <= i <= idx; symbolic lambda, x",
    lambda lim: Grid(**triangle(lim)),
)
def _eq_9_scalar(c):
    i, j = c["i"], c["j"]
    delta = ONE if i == j else ZERO
    return [
        (total(s1(i, k, LAMBDA, X) * s2(k, j, LAMBDA, X) for k in upto(i, j)), delta),
        (total(s2(i, k, LAMBDA, X) * s1(k, j, LAMBDA, X) for k in upto(i, j)), delta),
    ]


# -- specializations (i)-(vi) ------------------------------------------------


@register(
    "spec-i",
    "§4 (i), 'are the Stirling numbers of the first' (S_1(m,k|1,0,0) = (−1)^{m−k}[m k], S_2(m,k|1,0,0) = {m k})",
    "0 <= k <= m <= idx; permutation-cycle and set-partition counts",
    lambda lim: Grid(**triangle(lim)),
)
def _spec_i(c):
    m, k = c["i"], c["j"]
    return [
        (S1(m, k, 1, 0, 0), sign(m - k) * count_cycles(m, k)),
        (S2(m, k, 1, 0, 0), count_partitions(m, k)),
    ]


@register(
    "spec-ii",
    "§4 (ii), 'Howard's degenerate weighted Stirling numbers' (checked against their triangular recurrences)",
    "0 <= k <= m <= idx; symbolic lambda, x",
    lambda lim: Grid(**triangle(lim)),
)
def _spec_ii(c):
    m, k = c["i"], c["j"]
    # T(m+1,k) = T(m,k−1) + c(m,k) T(m,k) with c = k − mλ + x (second kind)
    # and c = m − (k+1)λ + x (first kind); λ = 0 gives Carlitz's R_1, R_2 recurrences
    return [
        (nb.howard2(m, k, LAMBDA, X), _recurrence(m, k, lambda mm, kk: kk - mm * LAMBDA + X)),
        (nb.howard1(m, k, LAMBDA, X), _recurrence(m, k, lambda mm, kk: mm - (kk + 1) * LAMBDA + X)),
    ]


def _recurrence(m, k, coeff):
    """T(m+1,k) = T(m,k−1) + coeff(m,k) T(m,k), T(0,0) = 1."""
    rows = [[ONE]]
    for mm in range(m):
        prev = rows[-1]
        row = []
        for kk in range(mm + 2):
            left = prev[kk - 1] if kk >= 1 else ZERO
            here = prev[kk] if kk <= mm else ZERO
            row.append(left + coeff(mm, kk) * here)
        rows.append(row)
    return rows[m][k] if k <= m else ZERO


@register(
    "spec-iii",
    "§4 (iii), 'Carlitz's weighted Stirling numbers of both' (R_1(m,k,r) = [m+r k+r]_r, R_2(m,k,r) = {m+r k+r}_r)",
    "0 <= k <= m <= idx - 1; 0 <= r <= 2; restricted cycle and partition counts",
    lambda lim: Grid(r=upto(2), i=upto(lim.idx - 1), j=lambda b: upto(b["i"])),
)
def _spec_iii(c):
    m, k, r = c["i"], c["j"], c["r"]
    return [
        (nb.carlitz_R1(m, k, r), count_cycles(m + r, k + r, r)),
        (nb.carlitz_R2(m, k, r), count_partitions(m + r, k + r, r)),
    ]


@register(
    "spec-iv",
    "§4 (iv), 'are the r−Stirling numbers of both' (S_1(m,k|−1,0,r) = [m+r k+r]_r, S_2(m,k|−1,0,r) = (−1)^{m−k}{m+r k+r}_r)",
    "0 <= k <= m <= idx - 1; 0 <= r <= 2; restricted cycle and partition counts",
    lambda lim: Grid(r=upto(2), i=upto(lim.idx - 1), j=lambda b: upto(b["i"])),
)
def _spec_iv(c):
    m, k, r = c["i"], c["j"], c["r"]
    return [
        (S1(m, k, -1, 0, r), count_cycles(m + r, k + r, r)),
        (S2(m, k, -1, 0, r), sign(m - k) * count_partitions(m + r, k + r, r)),
        (nb.r_stirling1(m + r, k + r, r), count_cycles(m + r, k + r, r)),
        (nb.r_stirling2(m + r, k + r, r), count_partitions(m + r, k + r, r)),
    ]


@register(
    "spec-v",
    "§4 (v), 'Carlitz's degenerate Stirling numbers of both' (recurrences, and λ = 0 gives (i))",
    "0 <= k <= m <= idx; symbolic lambda",
    lambda lim: Grid(**triangle(lim)),
)
def _spec_v(c):
    m, k = c["i"], c["j"]
    return [
        (nb.degen_stirling2(m, k, LAMBDA), _recurrence(m, k, lambda mm, kk: kk - mm * LAMBDA)),
        (nb.degen_stirling1(m, k, LAMBDA), _recurrence(m, k, lambda mm, kk: mm - kk * LAMBDA)),
        (nb.degen_stirling2(m, k, 0), count_partitions(m, k)),
        (nb.degen_stirling1(m, k, 0), count_cycles(m, k)),
    ]


@register(
    "spec-vi",
    "§4 (vi), 'are the Lah numbers' (S_1(m,k|−1,1,0) = L(m,k), S_2(m,k|−1,1,0) = (−1)^{m−k}L(m,k))",
    "0 <= k <= m <= idx; ordered-list counts and the closed form (m!/k!)C(m−1,k−1)",
    lambda lim: Grid(**triangle(lim)),
)
def _spec_vi(c):
    m, k = c["i"], c["j"]
    lah = count_ordered_lists(m, k)
    return [
        (S1(m, k, -1, 1, 0), lah),
        (S2(m, k, -1, 1, 0), sign(m - k) * lah),
        (nb.lah_closed(m, k), lah),
    ]


# -- recurrences and the Q-factorization -------------------------------------


@register(
    "eq-4",
    "Eq. (4), 'Putting m = i−1 gives' (S_2(i,j|μ,λ,0) = Σ C(i−1,k−1)(μ−λ|λ)_{i−k} S_2(k−1,j−1|μ,λ,0))",
    "1 <= j <= i <= idx; symbolic mu, lambda",
    lambda lim: Grid(**triangle(lim, 1)),
)
def _eq_4(c):
    i, j = c["i"], c["j"]
    rhs = total(
        gff(MU - LAMBDA, LAMBDA, i - k) * S2(k - 1, j - 1, MU, LAMBDA, 0) * C(i - 1, k - 1)
        for k in upto(i, j)
    )
    return S2(i, j, MU, LAMBDA, 0), rhs


@register(
    "eq-19",
    "Eq. (19), 'which yields' (S_n[μ,λ,0] = P_n[λ,μ−λ]([1] ⊕ S_{n−1}[μ,λ,0]))",
    "2 <= n <= n_sym; symbolic mu, lambda",
    lambda lim: Grid(n=upto(lim.n_sym, 2)),
)
def _eq_19(c):
    n = c["n"]
    p = (MU, LAMBDA, 0)
    rhs = mat_mul(
        pascal(n, LAMBDA, MU - LAMBDA),
        direct_sum(identity(1), stirling_matrix_first_type(n - 1, p, 2)),
    )
    return stirling_matrix_first_type(n, p, 2), rhs


@register(
    "vertical-recurrences",
    "§4.1, 'the well known vertical recurrence' and 'The counterpart of (4) is'",
    "1 <= j <= i <= idx; classical S_2; symbolic mu, lambda for the first-kind counterpart",
    lambda lim: Grid(**triangle(lim, 1)),
)
def _vertical(c):
    i, j = c["i"], c["j"]
    classical = total(
        nb.stirling2(k - 1, j - 1) * C(i - 1, k - 1) for k in upto(i, j)
    )
    counterpart = total(
        S1(i - 1, k - 1, MU, LAMBDA, 0) * gff(LAMBDA - MU, LAMBDA, k - j) * C(k - 1, j - 1)
        for k in upto(i, j)
    )
    return [
        (nb.stirling2(i, j), classical),
        (S1(i, j, MU, LAMBDA, 0), counterpart),
    ]


@register(
    "shifted-orth-pair",
    "§4.1, 'We also have' (C(i−1,j−1)(μ−λ|λ)_{i−j} = Σ S_2(i,k)S_1(k−1,j−1), and the (λ−μ|λ) companion)",
    "1 <= j <= i <= idx; symbolic mu, lambda; x = 0",
    lambda lim: Grid(**triangle(lim, 1)),
)
def _shifted_orth(c):
    i, j = c["i"], c["j"]
    first = total(
        S2(i, k, MU, LAMBDA, 0) * S1(k - 1, j - 1, MU, LAMBDA, 0) for k in upto(i, j)
    )
    second = total(
        S2(i - 1, k - 1, MU, LAMBDA, 0) * S1(k, j, MU, LAMBDA, 0) for k in upto(i, j)
    )
    return [
        (gff(MU - LAMBDA, LAMBDA, i - j) * C(i - 1, j - 1), first),
        (gff(LAMBDA - MU, LAMBDA, i - j) * C(i - 1, j - 1), second),
    ]


@register(
    "S-Q-factorization",
    "§4.1, 'we have the following factorization' (S_n[μ,λ,0] = Q_n[λ,μ−λ]⋯Q_1[λ,μ−λ])",
    "1 <= n <= n_sym; symbolic mu, lambda",
    lambda lim: Grid(n=upto(lim.n_sym, 1)),
)
def _s_q(c):
    n = c["n"]
    return stirling_matrix_first_type(n, (MU, LAMBDA, 0), 2), q_product(n, LAMBDA, MU - LAMBDA)


# -- second-type matrices ------------------------------------------------------


@register(
    "g-inverse",
    "§4.2, 'It is obvious from (9) that' (g_{n,h}[1,λ,x] = G_{n,h}[1,λ,x]^{−1})",
    "1 <= n <= n_sym; h in {-2..2} (columns j < h are zero); symbolic lambda, x",
    lambda lim: Grid(n=upto(lim.n_sym, 1), h=SHIFTS),
)
def _g_inverse(c):
    n, h = c["n"], c["h"]
    return [
        (mat_inv(G(n, h, LAMBDA, X)), g(n, h, LAMBDA, X)),
        (mat_mul(g(n, h, LAMBDA, X), G(n, h, LAMBDA, X)), identity(n)),
    ]


def _thm_bs_grid(lim):
    return Grid(n=upto(lim.n_sym, 1), h=SHIFTS)


@register(
    "thm-bs-1",
    "Thm 'th bs', 'By (1) and (stx)' ((G_{n,h}[1,λ,−x])_{i,j} = (B_n^{(h)}[λ,x−y] G_{n,0}[1,λ,−y])_{i,j}, j ≥ h)",
    "1 <= n <= n_sym; -2 <= h <= 2; entries with j >= h; symbolic lambda, x, y",
    _thm_bs_grid,
)
def _thm_bs_1(c):
    n, h = c["n"], c["h"]
    rhs = mat_mul(bernoulli_matrix(n, h, LAMBDA, X - Y), G(n, 0, LAMBDA, -Y))
    return restrict(G(n, h, LAMBDA, -X), h), restrict(rhs, h)


@register(
    "thm-bs-2",
    "Thm 'th bs', 'By (1) and (stx)' ((G_{n,h}[1,λ,−x])_{i,j} = (G_{n,0}[1,λ,−y] L_n^{(−h)}[λ,x−y])_{i,j}, j ≥ h)",
    "1 <= n <= n_sym; -2 <= h <= 2; entries with j >= h; symbolic lambda, x, y",
    _thm_bs_grid,
)
def _thm_bs_2(c):
    n, h = c["n"], c["h"]
    rhs = mat_mul(G(n, 0, LAMBDA, -Y), l_matrix(n, -h, LAMBDA, X - Y))
    return restrict(G(n, h, LAMBDA, -X), h), restrict(rhs, h)


@register(
    "thm-bs-3",
    "Thm 'th bs', 'By (1) and (stx)' ((g_{n,h}[1,λ,−x])_{i,j} = (g_{n,0}[1,λ,−y] B_n^{(−h)}[λ,y−x])_{i,j}, j ≥ h)",
    "1 <= n <= n_sym; -2 <= h <= 2; entries with j >= h; symbolic lambda, x, y",
    _thm_bs_grid,
)
def _thm_bs_3(c):
    n, h = c["n"], c["h"]
    rhs = mat_mul(g(n, 0, LAMBDA, -Y), bernoulli_matrix(n, -h, LAMBDA, Y - X))
    return restrict(g(n, h, LAMBDA, -X), h), restrict(rhs, h)


@register(
    "thm-bs-4",
    "Thm 'th bs', 'By (1) and (stx)' ((g_{n,h}[1,λ,−x])_{i,j} = (L_n^{(h)}[λ,y−x] g_{n,0}[1,λ,−y])_{i,j}, j ≥ h)",
    "1 <= n <= n_sym; -2 <= h <= 2; entries with j >= h; symbolic lambda, x, y",
    _thm_bs_grid,
)
def _thm_bs_4(c):
    n, h = c["n"], c["h"]
    rhs = mat_mul(l_matrix(n, h, LAMBDA, Y - X), g(n, 0, LAMBDA, -Y))
    return restrict(g(n, h, LAMBDA, -X), h), restrict(rhs, h)


@register(
    "thm-bs-p",
    "Thm 'th bs', 'In particular' (P_n[λ,x−y] = G_{n,0}[1,λ,−x] g_{n,0}[1,λ,−y], P_n[1,y−x] = g_{n,0}[1,λ,−x] G_{n,0}[1,λ,−y])",
    "1 <= n <= n_sym; symbolic lambda, x, y",
    lambda lim: Grid(n=upto(lim.n_sym, 1)),
)
def _thm_bs_p(c):
    n = c["n"]
    return [
        (pascal(n, LAMBDA, X - Y), mat_mul(G(n, 0, LAMBDA, -X), g(n, 0, LAMBDA, -Y))),
        (pascal(n, 1, Y - X), mat_mul(g(n, 0, LAMBDA, -X), G(n, 0, LAMBDA, -Y))),
    ]


def _ratio(i, j, h):
    return C(i, j) / C(i - h, j - h)


@register(
    "eq-5",
    "Eq. (5), 'Then' (C(i,j)/C(i−h,j−h) S_2(i−h,j−h|1,λ,−x) = Σ C(i,k) β_{i−k}^{(h)}(λ,x−y) S_2(k,j|1,λ,−y)), and its 'or' form",
    "i >= j >= 0, j >= h, i <= idx; -2 <= h <= 2; symbolic lambda, x, y",
    shifted_triangle,
    admits=_j_ge_h,
)
def _eq_5(c):
    i, j, h = c["i"], c["j"], c["h"]
    lhs = s2(i - h, j - h, LAMBDA, -X).scale(_ratio(i, j, h))
    rhs = total(
        beta(i - k, h, LAMBDA, X - Y) * s2(k, j, LAMBDA, -Y) * C(i, k) for k in upto(i, j)
    )
    pairs = [(lhs, rhs)]
    if j >= 1:
        lhs_or = s2(i - h, j - h, LAMBDA, -X).scale(C(i - 1, j - 1) / C(i - h, j - h))
        rhs_or = total(
            beta(i - k, h, LAMBDA, X - Y) * s2(k, j, LAMBDA, -Y) * (C(i - 1, k - 1) * F(j, k))
            for k in upto(i, j)
        )
        pairs.append((lhs_or, rhs_or))
    return pairs


@register(
    "eq-50",
    "Eq. (50), 'It can be seen from (8) and generating functions that' (S_2(i,j|1,1/λ,x/λ) = λ^{−(i−j)} S_1(i,j|1,λ,−x))",
    "0 <= j <= i <= idx; lambda in the rational samples; symbolic x",
    lambda lim: Grid(lam=RATIONAL_SAMPLES, **triangle(lim)),
    admits=lambda c: c["lam"] != 0,
)
def _eq_50(c):
    lam, i, j = c["lam"], c["i"], c["j"]
    return s2(i, j, 1 / lam, X / lam), s1(i, j, lam, -X).scale((1 / lam) ** (i - j))


@register(
    "eq-5a",
    "Eq. (5a), 'replace (λ,x,y) by' (C(i,j)/C(i−h,j−h) S_1(i−h,j−h|1,λ,−x) = Σ C(i,k) α_{i−k}^{(h)}(λ,y−x) S_1(k,j|1,λ,−y)), and its 'or' form",
    "i >= j >= 0, j >= h, i <= idx; -2 <= h <= 2; symbolic lambda, x, y",
    shifted_triangle,
    admits=_j_ge_h,
)
def _eq_5a(c):
    i, j, h = c["i"], c["j"], c["h"]
    lhs = s1(i - h, j - h, LAMBDA, -X).scale(_ratio(i, j, h))
    rhs = total(
        alpha(i - k, h, LAMBDA, Y - X) * s1(k, j, LAMBDA, -Y) * C(i, k) for k in upto(i, j)
    )
    pairs = [(lhs, rhs)]
    if j >= 1:
        lhs_or = s1(i - h, j - h, LAMBDA, -X).scale(C(i - 1, j - 1) / C(i - h, j - h))
        rhs_or = total(
            alpha(i - k, h, LAMBDA, Y - X) * s1(k, j, LAMBDA, -Y) * (C(i - 1, k - 1) * F(j, k))
            for k in upto(i, j)
        )
        pairs.append((lhs_or, rhs_or))
    return pairs


@register(
    "eq-6",
    "Corollary 'cor bst1', Eq. (6), 'in terms of the Stirling numbers' (C(i,j)β_{i−j}^{(h)}(λ,x−y) = Σ C(i,k)/C(i−h,k−h) S_2(i−h,k−h|1,λ,−x) S_1(k,j|1,λ,−y))",
    "i >= j >= 0, j >= h, i <= idx; -2 <= h <= 2; symbolic lambda, x, y",
    shifted_triangle,
    admits=_j_ge_h,
)
def _eq_6(c):
    i, j, h = c["i"], c["j"], c["h"]
    rhs = total(
        s2(i - h, k - h, LAMBDA, -X) * s1(k, j, LAMBDA, -Y) * _ratio(i, k, h)
        for k in upto(i, j)
    )
    return beta(i - j, h, LAMBDA, X - Y).scale(C(i, j)), rhs


@register(
    "eq-6a",
    "Corollary 'cor bst1', Eq. (6a), 'in terms of the Stirling numbers' (C(i,j)α_{i−j}^{(h)}(λ,y−x) = Σ C(i,k)/C(i−h,k−h) S_1(i−h,k−h|1,λ,−x) S_2(k,j|1,λ,−y))",
    "i >= j >= 0, j >= h, i <= idx; -2 <= h <= 2; symbolic lambda, x, y",
    shifted_triangle,
    admits=_j_ge_h,
)
def _eq_6a(c):
    i, j, h = c["i"], c["j"], c["h"]
    rhs = total(
        s1(i - h, k - h, LAMBDA, -X) * s2(k, j, LAMBDA, -Y) * _ratio(i, k, h)
        for k in upto(i, j)
    )
    return alpha(i - j, h, LAMBDA, Y - X).scale(C(i, j)), rhs


@register(
    "cor-bst1-particulars",
    "Corollary 'cor bst1', 'In particular' (β_i(λ,x) = Σ S_2(i,k|1,λ,−x)(λ−1)_k/(k+1), α_i(λ,x) = Σ S_1(i,k|1,λ,x)(1|λ)_{k+1}/(k+1))",
    "0 <= i <= idx; symbolic lambda, x; (λ−1)_k is the falling factorial (λ−1|1)_k",
    lambda lim: Grid(i=upto(lim.idx)),
)
def _cor_bst1_part(c):
    i = c["i"]
    b = total(s2(i, k, LAMBDA, -X) * falling(LAMBDA - 1, k) * F(1, k + 1) for k in upto(i))
    a = total(s1(i, k, LAMBDA, X) * gff(1, LAMBDA, k + 1) * F(1, k + 1) for k in upto(i))
    return [(beta(i, 1, LAMBDA, X), b), (alpha(i, 1, LAMBDA, X), a)]


@register(
    "eq-2",
    "Eq. (2), 'we can equally well write the result (6) in the form' (shift m on the first-kind factor)",
    "i >= j >= 0, j >= max(h, m), i <= idx; -1 <= h, m <= 2; symbolic lambda, x, y",
    lambda lim: Grid(
        h=range(-1, 3),
        m=range(-1, 3),
        i=lambda b: upto(lim.idx, max(b["h"], b["m"], 0)),
        j=lambda b: upto(b["i"], max(b["h"], b["m"], 0)),
    ),
    admits=lambda c: c["i"] >= c["j"] >= max(c["h"], c["m"], 0),
)
def _eq_2(c):
    i, j, h, m = c["i"], c["j"], c["h"], c["m"]
    rhs = total(
        s2(i - h, k - h, LAMBDA, -X) * s1(k - m, j - m, LAMBDA, -Y) * (C(i - m, k - m) / C(i - h, k - h))
        for k in upto(i, j)
    )
    return beta(i - j, h - m, LAMBDA, X - Y).scale(C(i - m, j - m)), rhs


@register(
    "eq-2-matrix",
    "§4.2, 'because of' (G_{n,h}[1,λ,−x] g_{n,m}[1,λ,−y] = B_n^{(h−m)}[λ,x−y], entries with j ≥ max{h,m})",
    "1 <= n <= n_sym - 1; -1 <= h, m <= 2; entries with j >= max(h, m); symbolic lambda, x, y",
    lambda lim: Grid(n=upto(lim.n_sym - 1, 1), h=range(-1, 3), m=range(-1, 3)),
)
def _eq_2_matrix(c):
    n, h, m = c["n"], c["h"], c["m"]
    cut = max(h, m)
    lhs = mat_mul(G(n, h, LAMBDA, -X), g(n, m, LAMBDA, -Y))
    return restrict(lhs, cut), restrict(bernoulli_matrix(n, h - m, LAMBDA, X - Y), cut)


@register(
    "bernoulli-positive-order",
    "§4.2, 'to compute any positive (integer) order of Bernoulli polynomials'",
    "0 <= j <= i <= idx; 0 <= l <= 3; symbolic x",
    lambda lim: Grid(l=upto(3), **triangle(lim)),
)
def _positive_order(c):
    i, j, l = c["i"], c["j"], c["l"]
    lhs = nb.bernoulli_classic(i - j, l, X).scale(C(i, j) / C(j + l, j))
    rhs = total(
        nb.carlitz_R2(i, k, X) * nb.stirling1(l + k, l + j) / C(l + k, l) for k in upto(i, j)
    )
    return lhs, rhs


@register(
    "B-self-order",
    "§4.2, 'and in particular' (B_i^{(i)} = Σ C(i+k,i)^{−1} S_2(i,k) S_1(i+k,i))",
    "0 <= i <= idx + 1",
    lambda lim: Grid(i=upto(lim.idx + 1)),
)
def _b_self(c):
    i = c["i"]
    rhs = total(nb.stirling2(i, k) * nb.stirling1(i + k, i) / C(i + k, i) for k in upto(i))
    return nb.bernoulli_classic(i, i, 0), rhs


@register(
    "gen-orthogonality",
    "§4.2, 'the generalized orthogonality relations' (C(i,j)(x−y|λ)_{i−j} = Σ S_2(i,k|μ,λ,−x)S_1(k,j|μ,λ,−y) and the (y−x|μ) companion)",
    "0 <= j <= i <= idx - 1; symbolic mu, lambda, x, y",
    lambda lim: Grid(i=upto(lim.idx - 1), j=lambda b: upto(b["i"])),
)
def _gen_orth(c):
    i, j = c["i"], c["j"]
    first = total(
        S2(i, k, MU, LAMBDA, -X) * S1(k, j, MU, LAMBDA, -Y) for k in upto(i, j)
    )
    second = total(
        S1(i, k, MU, LAMBDA, -X) * S2(k, j, MU, LAMBDA, -Y) for k in upto(i, j)
    )
    return [
        (gff(X - Y, LAMBDA, i - j) * C(i, j), first),
        (gff(Y - X, MU, i - j) * C(i, j), second),
    ]


@register(
    "eq-7a",
    "Corollary 'cor bst2', Eq. (7a), 'also entails following' (C(i,j)/C(i−h,j−h) S_2(i−h,j−h|1,λ,−x) = Σ C(k,j) S_2(i,k|1,λ,−y) α_{k−j}^{(−h)}(λ,x−y))",
    "i >= j >= 0, j >= h, i <= idx; -2 <= h <= 2; symbolic lambda, x, y",
    shifted_triangle,
    admits=_j_ge_h,
)
def _eq_7a(c):
    i, j, h = c["i"], c["j"], c["h"]
    rhs = total(
        s2(i, k, LAMBDA, -Y) * alpha(k - j, -h, LAMBDA, X - Y) * C(k, j) for k in upto(i, j)
    )
    return s2(i - h, j - h, LAMBDA, -X).scale(_ratio(i, j, h)), rhs


@register(
    "eq-7",
    "Corollary 'cor bst2', Eq. (7), 'also entails following' (C(i,j)/C(i−h,j−h) S_1(i−h,j−h|1,λ,−x) = Σ C(k,j) S_1(i,k|1,λ,−y) β_{k−j}^{(−h)}(λ,y−x))",
    "i >= j >= 0, j >= h, i <= idx; -2 <= h <= 2; symbolic lambda, x, y",
    shifted_triangle,
    admits=_j_ge_h,
)
def _eq_7(c):
    i, j, h = c["i"], c["j"], c["h"]
    rhs = total(
        s1(i, k, LAMBDA, -Y) * beta(k - j, -h, LAMBDA, Y - X) * C(k, j) for k in upto(i, j)
    )
    return s1(i - h, j - h, LAMBDA, -X).scale(_ratio(i, j, h)), rhs


@register(
    "cor-bst2-particulars",
    "Corollary 'cor bst2', 'In particular' ((j+1)/(i+1) S_2(i+1,j+1|1,λ,−x) = Σ C(k,j) S_2(i,k|λ) α_{k−j}(λ,x) and the first-kind analogue)",
    "0 <= j <= i <= idx; symbolic lambda, x; S_i(i,k|λ) are the degenerate Stirling numbers",
    lambda lim: Grid(**triangle(lim)),
)
def _cor_bst2_part(c):
    i, j = c["i"], c["j"]
    lhs2 = s2(i + 1, j + 1, LAMBDA, -X).scale(F(j + 1, i + 1))
    rhs2 = total(
        nb.degen_stirling2(i, k, LAMBDA) * alpha(k - j, 1, LAMBDA, X) * C(k, j) for k in upto(i, j)
    )
    lhs1 = s1(i + 1, j + 1, LAMBDA, X).scale(F(j + 1, i + 1))
    rhs1 = total(
        nb.degen_stirling1(i, k, LAMBDA) * beta(k - j, 1, LAMBDA, X) * (C(k, j) * sign(i - k))
        for k in upto(i, j)
    )
    return [(lhs2, rhs2), (lhs1, rhs1)]


@register(
    "cor-G-factorization",
    "§4.2 Corollary, 'In consequence of Theorem' (G_{n,0}[1,λ,−x] = G_n[λ,x]⋯G_1[λ,x] G_{n,0}[1,λ,0] = G_{n,0}[1,λ,0] G_n[1,x]⋯G_1[1,x])",
    "1 <= n <= n_sym; symbolic lambda, x (cancelled R)",
    lambda lim: Grid(n=upto(lim.n_sym, 1)),
)
def _cor_g_fact(c):
    n = c["n"]
    target = G(n, 0, LAMBDA, -X)
    base = G(n, 0, LAMBDA, 0)
    return [
        (target, mat_mul(g_product(n, LAMBDA, X), base)),
        (target, mat_mul(base, g_product(n, 1, X))),
    ]


@register(
    "cor-G-factorization-rational",
    "§4.2 Corollary, 'In consequence of Theorem' (G factors from the literal R entries)",
    "1 <= n <= n_rat - 1; rational (lambda, x) with nonzero denominators",
    lambda lim: Grid(n=upto(lim.n_rat - 1, 1), binding=RT_BINDINGS),
)
def _cor_g_fact_rational(c):
    n, (lam, x) = c["n"], c["binding"]
    g_lit = product(embed(n, r_matrix_literal(k, lam, x)) for k in range(n, 0, -1))
    return G(n, 0, lam, -x), mat_mul(g_lit, G(n, 0, lam, 0))


# -- the shift-specified forms -------------------------------------------------


@register(
    "eq-14",
    "Eq. (14), 'It is evident from definitions that' (β_m^{(−h)}(λ,x) = C(m+h,h)^{−1} S_2(m+h,h|1,λ,−x))",
    "0 <= m <= idx; 0 <= h <= 3; symbolic lambda, x",
    lambda lim: Grid(m=upto(lim.idx), h=upto(3)),
)
def _eq_14(c):
    m, h = c["m"], c["h"]
    return beta(m, -h, LAMBDA, X), s2(m + h, h, LAMBDA, -X) / C(m + h, h)


@register(
    "eq-14a",
    "Eq. (14a), 'It is evident from definitions that' (α_m^{(−h)}(λ,x) = C(m+h,h)^{−1} S_1(m+h,h|1,λ,x))",
    "0 <= m <= idx; 0 <= h <= 3; symbolic lambda, x",
    lambda lim: Grid(m=upto(lim.idx), h=upto(3)),
)
def _eq_14a(c):
    m, h = c["m"], c["h"]
    return alpha(m, -h, LAMBDA, X), s1(m + h, h, LAMBDA, X) / C(m + h, h)


def _nonneg_shift_grid(lim):
    return Grid(h=upto(3), i=upto(lim.idx), j=lambda b: upto(b["i"]))


def _j_ge_h_ge_0_grid(lim):
    return Grid(h=upto(3), i=lambda b: upto(lim.idx, b["h"]), j=lambda b: upto(b["i"], b["h"]))


@register(
    "eq-s2s",
    "Eq. (s2s), 'according as h is negative' (C(h+j,j) S_2(m,j+h|1,λ,−(x+y)) = Σ C(m,k) S_2(m−k,h|1,λ,−x) S_2(k,j|1,λ,−y), m = i+h)",
    "0 <= j <= i <= idx; 0 <= h <= 3; symbolic lambda, x, y",
    _nonneg_shift_grid,
    admits=lambda c: c["h"] >= 0 and c["i"] >= c["j"] >= 0,
)
def _eq_s2s(c):
    i, j, h = c["i"], c["j"], c["h"]
    m = i + h
    rhs = total(
        s2(m - k, h, LAMBDA, -X) * s2(k, j, LAMBDA, -Y) * C(m, k) for k in upto(m - h, j)
    )
    return s2(m, j + h, LAMBDA, -(X + Y)).scale(C(h + j, j)), rhs


@register(
    "eq-s1s",
    "Eq. (s1s), 'according as h is negative' (C(h+j,j) S_1(m,j+h|1,λ,−(x+y)) = Σ C(m,k) S_1(m−k,h|1,λ,−x) S_1(k,j|1,λ,−y), m = i+h)",
    "0 <= j <= i <= idx; 0 <= h <= 3; symbolic lambda, x, y",
    _nonneg_shift_grid,
    admits=lambda c: c["h"] >= 0 and c["i"] >= c["j"] >= 0,
)
def _eq_s1s(c):
    i, j, h = c["i"], c["j"], c["h"]
    m = i + h
    rhs = total(
        s1(m - k, h, LAMBDA, -X) * s1(k, j, LAMBDA, -Y) * C(m, k) for k in upto(m - h, j)
    )
    return s1(m, j + h, LAMBDA, -(X + Y)).scale(C(h + j, j)), rhs


@register(
    "eq-7a1",
    "Eq. (7a1), 'according as h is negative' (C(i,j)/C(i+h,j+h) S_2(i+h,j+h|1,λ,−(x+y)) = Σ C(k,j) α_{k−j}^{(h)}(λ,x) S_2(i,k|1,λ,−y))",
    "0 <= j <= i <= idx; 0 <= h <= 3; symbolic lambda, x, y",
    _nonneg_shift_grid,
    admits=lambda c: c["h"] >= 0 and c["i"] >= c["j"] >= 0,
)
def _eq_7a1(c):
    i, j, h = c["i"], c["j"], c["h"]
    rhs = total(
        alpha(k - j, h, LAMBDA, X) * s2(i, k, LAMBDA, -Y) * C(k, j) for k in upto(i, j)
    )
    return s2(i + h, j + h, LAMBDA, -(X + Y)).scale(C(i, j) / C(i + h, j + h)), rhs


@register(
    "eq-71",
    "Eq. (71), 'according as h is negative' (C(i,j)/C(i+h,j+h) S_1(i+h,j+h|1,λ,−(y−x)) = Σ C(k,j) β_{k−j}^{(h)}(λ,x) S_1(i,k|1,λ,−y))",
    "0 <= j <= i <= idx; 0 <= h <= 3; symbolic lambda, x, y",
    _nonneg_shift_grid,
    admits=lambda c: c["h"] >= 0 and c["i"] >= c["j"] >= 0,
)
def _eq_71(c):
    i, j, h = c["i"], c["j"], c["h"]
    rhs = total(
        beta(k - j, h, LAMBDA, X) * s1(i, k, LAMBDA, -Y) * C(k, j) for k in upto(i, j)
    )
    return s1(i + h, j + h, LAMBDA, -(Y - X)).scale(C(i, j) / C(i + h, j + h)), rhs


@register(
    "eq-51",
    "Eq. (51), 'according as h is negative' (C(i,j)/C(i−h,j−h) S_2(i−h,j−h|1,λ,−(x+y)) = Σ C(i,k) β_{i−k}^{(h)}(λ,x) S_2(k,j|1,λ,−y))",
    "i >= j >= h >= 0, i <= idx; h <= 3; symbolic lambda, x, y",
    _j_ge_h_ge_0_grid,
    admits=lambda c: c["i"] >= c["j"] >= c["h"] >= 0,
)
def _eq_51(c):
    i, j, h = c["i"], c["j"], c["h"]
    rhs = total(
        beta(i - k, h, LAMBDA, X) * s2(k, j, LAMBDA, -Y) * C(i, k) for k in upto(i, j)
    )
    return s2(i - h, j - h, LAMBDA, -(X + Y)).scale(_ratio(i, j, h)), rhs


@register(
    "eq-5a1",
    "Eq. (5a1), 'according as h is negative' (C(i,j)/C(i−h,j−h) S_1(i−h,j−h|1,λ,−(y−x)) = Σ C(i,k) α_{i−k}^{(h)}(λ,x) S_1(k,j|1,λ,−y))",
    "i >= j >= h >= 0, i <= idx; h <= 3; symbolic lambda, x, y",
    _j_ge_h_ge_0_grid,
    admits=lambda c: c["i"] >= c["j"] >= c["h"] >= 0,
)
def _eq_5a1(c):
    i, j, h = c["i"], c["j"], c["h"]
    rhs = total(
        alpha(i - k, h, LAMBDA, X) * s1(k, j, LAMBDA, -Y) * C(i, k) for k in upto(i, j)
    )
    return s1(i - h, j - h, LAMBDA, -(Y - X)).scale(_ratio(i, j, h)), rhs


def _eq_7a2_sides(i, j, h, mu):
    lhs = S2(i - h, j - h, mu, LAMBDA, -(Y - X)).scale(C(i, h))
    rhs = total(
        S2(i, k, mu, LAMBDA, -Y) * S1(k - j + h, h, mu, LAMBDA, -X) * C(k, j - h)
        for k in upto(i, j)
    )
    return lhs, rhs


def _eq_72_sides(i, j, h, mu):
    lhs = S1(i - h, j - h, mu, LAMBDA, -(Y - X)).scale(C(i, h))
    rhs = total(
        S1(i, k, mu, LAMBDA, -Y) * S2(k - j + h, h, mu, LAMBDA, -X) * C(k, j - h)
        for k in upto(i, j)
    )
    return lhs, rhs


@register(
    "eq-7a2",
    "Eq. (7a2), 'according as h is negative' (C(i,h) S_2(i−h,j−h|1,λ,−(y−x)) = Σ C(k,j−h) S_2(i,k|1,λ,−y) S_1(k−j+h,h|1,λ,−x))",
    "i >= j >= h >= 0, i <= idx; h <= 3; symbolic lambda, x, y",
    _j_ge_h_ge_0_grid,
    admits=lambda c: c["i"] >= c["j"] >= c["h"] >= 0,
)
def _eq_7a2(c):
    return _eq_7a2_sides(c["i"], c["j"], c["h"], 1)


@register(
    "eq-72",
    "Eq. (72), 'according as h is negative' (C(i,h) S_1(i−h,j−h|1,λ,−(y−x)) = Σ C(k,j−h) S_1(i,k|1,λ,−y) S_2(k−j+h,h|1,λ,−x))",
    "i >= j >= h >= 0, i <= idx; h <= 3; symbolic lambda, x, y",
    _j_ge_h_ge_0_grid,
    admits=lambda c: c["i"] >= c["j"] >= c["h"] >= 0,
)
def _eq_72(c):
    return _eq_72_sides(c["i"], c["j"], c["h"], 1)


@register(
    "eq-7a2-mu",
    "§4.2, '(7a2) and (72) are still valid for S_1(n,m|μ,λ,x) and S_2(n,m|μ,λ,x)' (the (7a2) form)",
    "i >= j >= h >= 0, i <= idx - 1; h <= 2; mu in {-1, 1/2, 2}; symbolic lambda, x, y",
    lambda lim: Grid(
        mu=(F(-1, 1), F(1, 2), F(2, 1)),
        h=upto(2),
        i=lambda b: upto(lim.idx - 1, b["h"]),
        j=lambda b: upto(b["i"], b["h"]),
    ),
    admits=lambda c: c["i"] >= c["j"] >= c["h"] >= 0,
)
def _eq_7a2_mu(c):
    return _eq_7a2_sides(c["i"], c["j"], c["h"], c["mu"])


@register(
    "eq-72-mu",
    "§4.2, '(7a2) and (72) are still valid for S_1(n,m|μ,λ,x) and S_2(n,m|μ,λ,x)' (the (72) form)",
    "i >= j >= h >= 0, i <= idx - 1; h <= 2; mu in {-1, 1/2, 2}; symbolic lambda, x, y",
    lambda lim: Grid(
        mu=(F(-1, 1), F(1, 2), F(2, 1)),
        h=upto(2),
        i=lambda b: upto(lim.idx - 1, b["h"]),
        j=lambda b: upto(b["i"], b["h"]),
    ),
    admits=lambda c: c["i"] >= c["j"] >= c["h"] >= 0,
)
def _eq_72_mu(c):
    return _eq_72_sides(c["i"], c["j"], c["h"], c["mu"])
