"""Specializations: Carlitz weighted, r-Stirling, hyperharmonic and Lah identities."""

from __future__ import annotations

from ._common import (
    LAMBDA,
    X,
    Y,
    C,
    F,
    Grid,
    S1,
    S2,
    bracket,
    brace,
    fact,
    falling,
    nb,
    register,
    rising,
    sign,
    total,
    upto,
)

A51 = "§5.1, 'Carlitz's weighted Stirling numbers and Bernoulli'"
A52 = "§5.2, 'The following are special cases'"
A52B = "§5.2, 'Some identities deduced from (7a2)'"
A52C = "§5.2, 'The following are special cases of (6)'"
A53 = "§5.3, 'A combinatorial proof of this fact'"
A54 = "§5.4, 'it follows from (6a), (7a1) and (7a2)'"
A54B = "§5.4, 'In general, for arbitrary x'"


def R1(m, k, x):
    return nb.carlitz_R1(m, k, x)


def R2(m, k, x):
    return nb.carlitz_R2(m, k, x)


def s(m, k):
    """Signed Stirling numbers of the first kind (0 off the triangle)."""
    return nb.stirling1(m, k) if m >= 0 and k >= 0 else 0


def B(m, x=0, order=1):
    return nb.bernoulli_classic(m, order, x)


def b(m, x=0, order=1):
    return nb.bernoulli_second(m, order, x)


def H(m, r=1):
    return nb.hyperharmonic(m, r)


def tri(lim, start=0, top=None):
    top = lim.idx if top is None else top
    return dict(i=upto(top, start), j=lambda bd: upto(bd["i"], start))


# -- Carlitz's weighted Stirling numbers ----------------------------------------


@register(
    "sec5.1-1",
    f"{A51} (first display from (6), h = 1, y = 0)",
    "1 <= j <= i <= idx; symbolic x",
    lambda lim: Grid(**tri(lim, 1)),
)
def _s51_1(c):
    i, j = c["i"], c["j"]
    rhs = total(R2(i - 1, k - 1, X) * (s(k, j) * F(i, k)) for k in upto(i, j))
    return B(i - j, X).scale(C(i, j)), rhs


@register(
    "sec5.1-2",
    f"{A51} (second display from (6), h = j = 1, y = 0)",
    "0 <= i <= idx; symbolic x",
    lambda lim: Grid(i=upto(lim.idx)),
)
def _s51_2(c):
    i = c["i"]
    rhs = total(R2(i, k, X).scale(sign(k) * F(fact(k), k + 1)) for k in upto(i))
    return B(i, X), rhs


@register(
    "sec5.1-3",
    f"{A51} (first display from (6a), h = j = 1, y = 0)",
    "0 <= i <= idx; symbolic x",
    lambda lim: Grid(i=upto(lim.idx)),
)
def _s51_3(c):
    i = c["i"]
    rhs = total(R1(i, k, X).scale(F(sign(i - k), k + 1)) for k in upto(i))
    return b(i, -X).scale(fact(i)), rhs


@register(
    "sec5.1-4",
    f"{A51} (second display from (6a), h = −1, y = 1, x = j = 0)",
    "1 <= i <= idx + 1",
    lambda lim: Grid(i=upto(lim.idx + 1, 1)),
)
def _s51_4(c):
    i = c["i"]
    rhs = sum((k + 1) * s(i + 1, k + 1) for k in upto(i))
    return sign(i - 1) * fact(i - 1), rhs


@register(
    "eq-17",
    "Eq. (17), 'which can be held from (5a1)' (S_1(m,1|1,0,1) = S_1(m,1) + mS_1(m−1,1))",
    "1 <= m <= idx + 1",
    lambda lim: Grid(m=upto(lim.idx + 1, 1)),
)
def _eq_17(c):
    m = c["m"]
    closed = 1 if m == 1 else sign(m) * fact(m - 2)
    lhs = S1(m, 1, 1, 0, 1)
    return [(lhs, s(m, 1) + m * s(m - 1, 1)), (lhs, closed)]


@register(
    "sec5.1-5",
    f"{A51} (first display from (7a1), y = 0)",
    "0 <= j <= i <= idx; 0 <= h <= 3; symbolic x",
    lambda lim: Grid(h=upto(3), **tri(lim)),
)
def _s51_5(c):
    i, j, h = c["i"], c["j"], c["h"]
    lhs = R2(i + h, j + h, X).scale(F(fact(i), fact(i + h)))
    rhs = total(
        b(k - j, X, h) * nb.stirling2(i, k) * F(fact(k), fact(j + h)) for k in upto(i, j)
    )
    return lhs, rhs


@register(
    "sec5.1-6",
    f"{A51} (second display from (7a1), h = 1, j = y = 0)",
    "0 <= i <= idx; symbolic x",
    lambda lim: Grid(i=upto(lim.idx)),
)
def _s51_6(c):
    i = c["i"]
    lhs = ((X + 1) ** (i + 1) - X ** (i + 1)).scale(F(1, i + 1))
    rhs = total(b(k, X) * nb.stirling2(i, k) * fact(k) for k in upto(i))
    return lhs, rhs


@register(
    "sec5.1-7",
    f"{A51} (first display from (71), y = 0)",
    "0 <= j <= i <= idx; 0 <= h <= 3; symbolic x",
    lambda lim: Grid(h=upto(3), **tri(lim)),
)
def _s51_7(c):
    i, j, h = c["i"], c["j"], c["h"]
    lhs = R1(i + h, j + h, -X).scale(sign(i - j) * C(i, j) / C(i + h, j + h))
    rhs = total(B(k - j, X, h) * s(i, k) * C(k, j) for k in upto(i, j))
    return lhs, rhs


@register(
    "sec5.1-8",
    f"{A51} (second display from (71), y = 1, x = 0)",
    "0 <= j <= i <= idx; 0 <= h <= 3",
    lambda lim: Grid(h=upto(3), **tri(lim)),
)
def _s51_8(c):
    i, j, h = c["i"], c["j"], c["h"]
    lhs = s(i + h + 1, j + h + 1) * (C(i, j) / C(i + h, j + h))
    rhs = total(B(k - j, 0, h) * s(i + 1, k + 1) * C(k, j) for k in upto(i, j))
    return lhs, rhs


# -- r-Stirling numbers ----------------------------------------------------------


@register(
    "sec5.2-r-link",
    "§5.2, 'for λ = 0 and nonnegative integer x = r' (S_1(m,k|1,0,−r) = (−1)^{m−k}[m+r k+r]_r, S_2(m,k|1,0,−r) = {m+r k+r}_r)",
    "0 <= k <= m <= idx; 0 <= r <= 4",
    lambda lim: Grid(r=upto(4), **tri(lim)),
)
def _r_link(c):
    m, k, r = c["i"], c["j"], c["r"]
    return [
        (S1(m, k, 1, 0, -r), sign(m - k) * bracket(m + r, k + r, r)),
        (S2(m, k, 1, 0, -r), brace(m + r, k + r, r)),
    ]


@register(
    "sec5.2-r01",
    "§5.2, 'In the first place note that' ([m k]_0 = [m k]_1 = [m k] and likewise for braces)",
    "0 <= k <= m <= idx, m >= 1 ([0 0]_1 = 0 while [0 0] = 1)",
    lambda lim: Grid(i=upto(lim.idx, 1), j=lambda bd: upto(bd["i"])),
    admits=lambda c: c["i"] >= 1,
)
def _r01(c):
    m, k = c["i"], c["j"]
    return [
        (nb.r_stirling1(m, k, 0), nb.stirling1_unsigned(m, k)),
        (nb.r_stirling1(m, k, 1), nb.stirling1_unsigned(m, k)),
        (nb.r_stirling2(m, k, 0), nb.stirling2(m, k)),
        (nb.r_stirling2(m, k, 1), nb.stirling2(m, k)),
    ]


def _rp_grid(lim, r_from=0, p_from=0):
    return Grid(
        r=upto(3, r_from), p=upto(3, p_from), i=upto(lim.idx - 1), j=lambda bd: upto(bd["i"])
    )


@register(
    "eq-72-1",
    f"{A52}, Eq. (72-1) ([i+r j+r]_r = Σ C(k,j)[i+p k+p]_p (r−p)^{{k−j}}, h = 0)",
    "0 <= j <= i <= idx - 1; 0 <= r, p <= 3",
    _rp_grid,
)
def _eq_72_1(c):
    i, j, r, p = c["i"], c["j"], c["r"], c["p"]
    rhs = total(
        bracket(i + p, k + p, p).scale(C(k, j) * F(r - p) ** (k - j)) for k in upto(i, j)
    )
    return bracket(i + r, j + r, r), rhs


@register(
    "sec5.2-h1",
    f"{A52} (h = 1, p = r − 1 display: [i+r j+r]_r = (1/(i+1)) Σ C(k+1,j)[i+r k+r]_{{r−1}})",
    "0 <= j <= i <= idx - 1; 1 <= r <= 4",
    lambda lim: Grid(r=upto(4, 1), **tri(lim, 0, lim.idx - 1)),
)
def _s52_h1(c):
    i, j, r = c["i"], c["j"], c["r"]
    rhs = total(bracket(i + r, k + r, r - 1).scale(C(k + 1, j) * F(1, i + 1)) for k in upto(i, j))
    return bracket(i + r, j + r, r), rhs


@register(
    "eq-72-2",
    f"{A52}, Eq. (72-2) (C(i,j)⟨p+j⟩_{{i−j}} = Σ [i+p k+p]_p {{k j}}, h = j, r = p + j)",
    "0 <= j <= i <= idx; 0 <= p <= 4",
    lambda lim: Grid(p=upto(4), **tri(lim)),
)
def _eq_72_2(c):
    i, j, p = c["i"], c["j"], c["p"]
    rhs = total(bracket(i + p, k + p, p) * nb.stirling2(k, j) for k in upto(i, j))
    return rising(p + j, i - j).scale(C(i, j)), rhs


@register(
    "sec5.2-rec-down",
    f"{A52} (recurrence from p = r − 1 in (72-1))",
    "0 <= j <= i <= idx; 1 <= r <= 4",
    lambda lim: Grid(r=upto(4, 1), **tri(lim)),
)
def _rec_down(c):
    i, j, r = c["i"], c["j"], c["r"]
    rhs = total(bracket(i + r - 1, k + r - 1, r - 1).scale(C(k, j)) for k in upto(i, j))
    return bracket(i + r, j + r, r), rhs


@register(
    "sec5.2-rec-up",
    f"{A52} (recurrence from p = r + 1 in (72-1))",
    "0 <= j <= i <= idx; 0 <= r <= 3",
    lambda lim: Grid(r=upto(3), **tri(lim)),
)
def _rec_up(c):
    i, j, r = c["i"], c["j"], c["r"]
    rhs = total(
        bracket(i + r + 1, k + r + 1, r + 1).scale(sign(k - j) * C(k, j)) for k in upto(i, j)
    )
    return bracket(i + r, j + r, r), rhs


@register(
    "sec5.2-S2-neg",
    f"{A52} ('we use that' S_2(k,m|1,0,m) = (−1)^{{k−m}} {{k m}})",
    "0 <= m <= k <= idx + 1",
    lambda lim: Grid(i=upto(lim.idx + 1), j=lambda bd: upto(bd["i"])),
)
def _s2_neg(c):
    k, m = c["i"], c["j"]
    return S2(k, m, 1, 0, m), sign(k - m) * nb.stirling2(k, m)


@register(
    "sec5.2-7a2-h0",
    f"{A52B} (h = 0: {{i+r j+r}}_r = Σ C(k,j){{i+p k+p}}_p (r−p)_{{k−j}})",
    "0 <= j <= i <= idx - 1; 0 <= r, p <= 3",
    _rp_grid,
)
def _s52_7a2_h0(c):
    i, j, r, p = c["i"], c["j"], c["r"], c["p"]
    rhs = total(brace(i + p, k + p, p) * falling(r - p, k - j) * C(k, j) for k in upto(i, j))
    return brace(i + r, j + r, r), rhs


@register(
    "eq-7a2-1",
    f"{A52B}, Eq. (7a2-1) (h = 0, r = p − 1)",
    "0 <= j <= i <= idx - 1; 1 <= p <= 4",
    lambda lim: Grid(p=upto(4, 1), **tri(lim, 0, lim.idx - 1)),
)
def _eq_7a2_1(c):
    i, j, p = c["i"], c["j"], c["p"]
    rhs = total(brace(i + p, k + p, p).scale(F(sign(k - j) * fact(k), fact(j))) for k in upto(i, j))
    return brace(i + p - 1, j + p - 1, p - 1), rhs


@register(
    "eq-7a2-2",
    f"{A52B}, Eq. (7a2-2) (h = 1, p = r)",
    "1 <= j <= i <= idx; 0 <= r <= 3",
    lambda lim: Grid(r=upto(3), **tri(lim, 1)),
)
def _eq_7a2_2(c):
    i, j, r = c["i"], c["j"], c["r"]
    rhs = total(
        brace(i + r, k + r, r).scale(F(sign(k - j) * fact(k), (k - j + 1) * i * fact(j - 1)))
        for k in upto(i, j)
    )
    return brace(i - 1 + r, j - 1 + r, r), rhs


@register(
    "sec5.2-h1p",
    f"{A52B} (h = 1, p = r + 1, with harmonic numbers H_{{k−j+1}})",
    "1 <= j <= i <= idx; 0 <= r <= 3",
    lambda lim: Grid(r=upto(3), **tri(lim, 1)),
)
def _s52_h1p(c):
    i, j, r = c["i"], c["j"], c["r"]
    rhs = total(
        brace(i + r + 1, k + r + 1, r + 1).scale(
            sign(k - j) * fact(k) * H(k - j + 1) / (i * fact(j - 1))
        )
        for k in upto(i, j)
    )
    return brace(i - 1 + r, j - 1 + r, r), rhs


@register(
    "sec5.2-harmonic",
    f"{A52B} ('where' [m+1 2] = m! H_m)",
    "0 <= m <= idx + 1",
    lambda lim: Grid(m=upto(lim.idx + 1)),
)
def _s52_harmonic(c):
    m = c["m"]
    return bracket(m + 1, 2), fact(m) * H(m)


@register(
    "eq-7a2-3",
    "Eq. (7a2-3), 'By (17), we also have' (h = 1, p = r − 1)",
    "1 <= j <= i <= idx; 1 <= r <= 4",
    lambda lim: Grid(r=upto(4, 1), **tri(lim, 1)),
)
def _eq_7a2_3(c):
    i, j, r = c["i"], c["j"], c["r"]
    lhs = brace(i - 1 + r, j - 1 + r, r).scale(F(i, j)) - brace(i + r - 1, j + r - 1, r - 1)
    rhs = total(
        brace(i + r - 1, k + r - 1, r - 1).scale(
            F(-sign(k - j) * fact(k), (k + 1 - j) * (k - j) * fact(j))
        )
        for k in upto(i, j + 1)
    )
    return lhs, rhs


@register(
    "sec5.2-regular-1",
    "§5.2, 'regular Stirling numbers of the second kind satisfy' (p = 1 in (7a2-1))",
    "0 <= j <= i <= idx",
    lambda lim: Grid(**tri(lim)),
)
def _regular_1(c):
    i, j = c["i"], c["j"]
    rhs = sum(F(sign(k - j) * fact(k), fact(j)) * nb.stirling2(i + 1, k + 1) for k in upto(i, j))
    return nb.stirling2(i, j), rhs


@register(
    "sec5.2-regular-2",
    "§5.2, 'regular Stirling numbers of the second kind satisfy' (r = 1 in (7a2-2))",
    "1 <= j <= i <= idx",
    lambda lim: Grid(**tri(lim, 1)),
)
def _regular_2(c):
    i, j = c["i"], c["j"]
    rhs = sum(
        F(sign(k - j) * fact(k), (k - j + 1) * i * fact(j - 1)) * nb.stirling2(i + 1, k + 1)
        for k in upto(i, j)
    )
    return nb.stirling2(i, j), rhs


@register(
    "sec5.2-regular-3",
    "§5.2, 'regular Stirling numbers of the second kind satisfy' (r = 1 in (7a2-3))",
    "1 <= j < i <= idx (the factor 1/(j−i) needs j != i)",
    lambda lim: Grid(i=upto(lim.idx, 2), j=lambda bd: range(1, bd["i"])),
    admits=lambda c: 1 <= c["j"] < c["i"],
)
def _regular_3(c):
    i, j = c["i"], c["j"]
    rhs = sum(
        F(sign(k - j) * fact(k), (k - j + 1) * (k - j) * (j - i) * fact(j - 1))
        * nb.stirling2(i, k)
        for k in upto(i, j + 1)
    )
    return nb.stirling2(i, j), rhs


@register(
    "sec5.2-6-1",
    f"{A52C} (h = 1, r = 1: C(i,j)B_{{i−j}}(p) = Σ (−1)^{{i−k}}(i/k){{i k}}[k+p j+p]_p)",
    "1 <= j <= i <= idx; 0 <= p <= 3",
    lambda lim: Grid(p=upto(3), **tri(lim, 1)),
)
def _s52_6_1(c):
    i, j, p = c["i"], c["j"], c["p"]
    rhs = total(
        bracket(k + p, j + p, p) * nb.stirling2(i, k) * (sign(i - k) * F(i, k))
        for k in upto(i, j)
    )
    return B(i - j, p).scale(C(i, j)), rhs


@register(
    "sec5.2-6-2",
    f"{A52C} (h = j = 1, p = 0: B_i(r) = Σ (−1)^k k!/(k+1) {{i+r k+r}}_r)",
    "0 <= i <= idx; 0 <= r <= 4",
    lambda lim: Grid(r=upto(4), i=upto(lim.idx)),
)
def _s52_6_2(c):
    i, r = c["i"], c["r"]
    rhs = total(brace(i + r, k + r, r).scale(F(sign(k) * fact(k), k + 1)) for k in upto(i))
    return B(i, r), rhs


@register(
    "sec5.2-6-3",
    f"{A52C} (h = −1, r = p − 1: C(i+1,j) = Σ (−1)^{{i−k}}(k+1){{i+p k+p}}_{{p−1}}[k+p j+p]_p)",
    "0 <= j <= i <= idx; 1 <= p <= 3",
    lambda lim: Grid(p=upto(3, 1), **tri(lim)),
)
def _s52_6_3(c):
    i, j, p = c["i"], c["j"], c["p"]
    rhs = total(
        brace(i + p, k + p, p - 1) * bracket(k + p, j + p, p) * (sign(i - k) * (k + 1))
        for k in upto(i, j)
    )
    return C(i + 1, j), rhs


@register(
    "sec5.2-6-4",
    f"{A52C} (h = −1, r = p: C(i+1,j) = Σ (−1)^{{k−j}}(k+1){{i+1+p k+1+p}}_p[k+p j+p]_p)",
    "0 <= j <= i <= idx; 0 <= p <= 3",
    lambda lim: Grid(p=upto(3), **tri(lim)),
)
def _s52_6_4(c):
    i, j, p = c["i"], c["j"], c["p"]
    rhs = total(
        brace(i + 1 + p, k + 1 + p, p) * bracket(k + p, j + p, p) * (sign(k - j) * (k + 1))
        for k in upto(i, j)
    )
    return C(i + 1, j), rhs


@register(
    "sec5.2-Bi",
    "§5.2, 'by making use of' (B_i(i+1) = Σ (i−k)!/(i−k+1) {i+k i}_k)",
    "0 <= i <= idx + 1",
    lambda lim: Grid(i=upto(lim.idx + 1)),
)
def _s52_bi(c):
    i = c["i"]
    rhs = total(brace(i + k, i, k).scale(F(fact(i - k), i - k + 1)) for k in upto(i))
    return B(i, i + 1), rhs


@register(
    "sec5.2-reflections",
    "§5.2, 'by making use of' (R_2(m,k,−x) = (−1)^{m−k}R_2(m,k,x−k), B_m(1−x) = (−1)^m B_m(x))",
    "0 <= k <= m <= idx; symbolic x",
    lambda lim: Grid(**tri(lim)),
)
def _s52_reflections(c):
    m, k = c["i"], c["j"]
    return [
        (R2(m, k, -X), R2(m, k, X - k).scale(sign(m - k))),
        (B(m, 1 - X), B(m, X).scale(sign(m))),
    ]


@register(
    "sec5-intro",
    "§5, 'and from the identities' (S_1(i,j|1,λ,−x) = (−1)^{i−j}S_1(i+1,j+1|λ), S_2(i,j|1,λ,−x) = S_2(i+1,j+1|λ) for x = 1 − λ)",
    "0 <= j <= i <= idx; symbolic lambda; x = 1 − lambda",
    lambda lim: Grid(**tri(lim)),
)
def _s5_intro(c):
    i, j = c["i"], c["j"]
    xx = 1 - LAMBDA
    # the degenerate views already carry the (−1)^{m−k} of specialization (v)
    return [
        (S1(i, j, 1, LAMBDA, -xx), nb.degen_stirling1(i + 1, j + 1, LAMBDA).scale(sign(i - j))),
        (S2(i, j, 1, LAMBDA, -xx), nb.degen_stirling2(i + 1, j + 1, LAMBDA)),
    ]


# -- hyperharmonic numbers -------------------------------------------------------


@register(
    "hyperharmonic-bracket",
    f"{A53} (m! H_m^r = [m+r 1+r]_r = S_1(m,1|−1,0,r) = (−1)^{{m−1}} S_1(m,1|1,0,−r))",
    "0 <= m <= idx + 1; 0 <= r <= 4",
    lambda lim: Grid(r=upto(4), m=upto(lim.idx + 1)),
)
def _hh_bracket(c):
    m, r = c["m"], c["r"]
    lhs = fact(m) * H(m, r)
    return [
        (lhs, bracket(m + r, 1 + r, r)),
        (lhs, S1(m, 1, -1, 0, r)),
        (lhs, S1(m, 1, 1, 0, -r).scale(sign(m - 1))),
    ]


@register(
    "sec5.3-1",
    f"{A53} (from (71), h = 1, y = r, x = j = λ = 0: i! H_{{i+1}}^r = Σ (−1)^k B_k [i+r k+r]_r)",
    "0 <= i <= idx; 0 <= r <= 4",
    lambda lim: Grid(r=upto(4), i=upto(lim.idx)),
)
def _s53_1(c):
    i, r = c["i"], c["r"]
    rhs = total(B(k).scale(sign(k)) * bracket(i + r, k + r, r) for k in upto(i))
    return fact(i) * H(i + 1, r), rhs


@register(
    "sec5.3-2",
    f"{A53} (from (71), h = x = 1, y = r, j = λ = 0: i! H_{{i+1}}^{{r−1}} = Σ B_k [i+r k+r]_r)",
    "0 <= i <= idx; 1 <= r <= 4 (y − x = r − 1 must be a nonnegative integer)",
    lambda lim: Grid(r=upto(4, 1), i=upto(lim.idx)),
    admits=lambda c: c["r"] >= 1,
)
def _s53_2(c):
    i, r = c["i"], c["r"]
    rhs = total(B(k) * bracket(i + r, k + r, r) for k in upto(i))
    return fact(i) * H(i + 1, r - 1), rhs


@register(
    "sec5.3-3",
    f"{A53} (from (71), j = 1, y = r, y − x = r + p >= 0: i! H_i^{{r+p}} = Σ k [i+r k+r]_r p^{{k−1}})",
    "1 <= i <= idx; 0 <= r <= 3; -r <= p <= 3",
    lambda lim: Grid(r=upto(3), p=lambda bd: range(-bd["r"], 4), i=upto(lim.idx, 1)),
    admits=lambda c: c["r"] + c["p"] >= 0,
)
def _s53_3(c):
    i, r, p = c["i"], c["r"], c["p"]
    rhs = total(bracket(i + r, k + r, r).scale(k * F(p) ** (k - 1)) for k in upto(i, 1))
    return fact(i) * H(i, r + p), rhs


@register(
    "sec5.3-4",
    f"{A53} (i! H_i^p = Σ k [i k] p^{{k−1}})",
    "1 <= i <= idx; 0 <= p <= 4",
    lambda lim: Grid(p=upto(4), i=upto(lim.idx, 1)),
)
def _s53_4(c):
    i, p = c["i"], c["p"]
    rhs = total(bracket(i, k).scale(k * F(p) ** (k - 1)) for k in upto(i, 1))
    return fact(i) * H(i, p), rhs


@register(
    "sec5.3-5",
    f"{A53} (from (5a1), j = 1, y = r, y − x = r − m >= 0: H_i^{{r−m}} = Σ (−1)^{{i−k}}(m)_{{i−k}}/(i−k)! H_k^r)",
    "1 <= i <= idx; 0 <= r <= 3; -3 <= m <= r",
    lambda lim: Grid(r=upto(3), m=lambda bd: range(-3, bd["r"] + 1), i=upto(lim.idx, 1)),
    admits=lambda c: c["r"] - c["m"] >= 0,
)
def _s53_5(c):
    i, r, m = c["i"], c["r"], c["m"]
    rhs = total(
        falling(m, i - k).scale(F(sign(i - k), fact(i - k)) * H(k, r)) for k in upto(i, 1)
    )
    return H(i, r - m), rhs


@register(
    "eq-13",
    "§5.3 'is Eq. (7) of [26]', Eq. (13) (Σ C(i−k+p−1,p−1) H_k^r = H_i^{p+r})",
    "1 <= i <= idx + 1; 0 <= r <= 4; 1 <= p <= 4",
    lambda lim: Grid(r=upto(4), p=upto(4, 1), i=upto(lim.idx + 1, 1)),
)
def _eq_13(c):
    i, r, p = c["i"], c["r"], c["p"]
    lhs = sum(C(i - k + p - 1, p - 1) * H(k, r) for k in upto(i, 1))
    return lhs, H(i, p + r)


@register(
    "sec5.3-sum-kH",
    "§5.3, 'This gives' (p = 2 display, corrected: Σ k H_k^r = (i+1) H_i^{r+1} − H_i^{r+2})",
    "1 <= i <= idx + 1; 0 <= r <= 4; the printed factorials (i+1)!, i! are read as (i+1), 1",
    lambda lim: Grid(r=upto(4), i=upto(lim.idx + 1, 1)),
)
def _sum_kh(c):
    i, r = c["i"], c["r"]
    lhs = sum(k * H(k, r) for k in upto(i, 1))
    return lhs, (i + 1) * H(i, r + 1) - H(i, r + 2)


# -- Lah numbers -----------------------------------------------------------------


@register(
    "sec5.4-lah",
    "§5.4, 'For λ = 1 and x = 0 in (11) and (11a)' (S_1(m,k|1,−1,0) = (−1)^{m−k}L(m,k), S_2(m,k|1,−1,0) = L(m,k))",
    "0 <= k <= m <= idx + 1",
    lambda lim: Grid(**tri(lim, 0, lim.idx + 1)),
)
def _lah(c):
    m, k = c["i"], c["j"]
    lah = nb.lah_closed(m, k)
    return [(S1(m, k, 1, -1, 0), sign(m - k) * lah), (S2(m, k, 1, -1, 0), lah),
            (nb.lah(m, k), lah)]


@register(
    "sec5.4-binom-1",
    f"{A54} (h = −m < 0: C(i−j+m−1,i−j) = Σ (−1)^{{k−j}} C(i+m−1,k+m−1) C(k−1,j−1))",
    "1 <= j <= i <= idx + 1; 1 <= m <= 4",
    lambda lim: Grid(m=upto(4, 1), **tri(lim, 1, lim.idx + 1)),
)
def _binom_1(c):
    i, j, m = c["i"], c["j"], c["m"]
    rhs = sum(sign(k - j) * C(i + m - 1, k + m - 1) * C(k - 1, j - 1) for k in upto(i, j))
    return C(i - j + m - 1, i - j), rhs


@register(
    "sec5.4-binom-2",
    f"{A54} (h >= 0: C(i+h,j+h) = Σ C(i,k) C(h,k−j))",
    "0 <= j <= i <= idx + 1; 0 <= h <= 4",
    lambda lim: Grid(h=upto(4), **tri(lim, 0, lim.idx + 1)),
)
def _binom_2(c):
    i, j, h = c["i"], c["j"], c["h"]
    return C(i + h, j + h), sum(C(i, k) * C(h, k - j) for k in upto(i, j))


@register(
    "sec5.4-binom-3",
    f"{A54} (j >= h >= 1: C(i−h+1,j−h+1) = Σ (−1)^{{k−j}} C(i+1,k+1) C(k−j+h−1,h−1))",
    "1 <= h <= j <= i <= idx + 1",
    lambda lim: Grid(
        h=upto(3, 1), i=lambda bd: upto(lim.idx + 1, bd["h"]), j=lambda bd: upto(bd["i"], bd["h"])
    ),
    admits=lambda c: c["i"] >= c["j"] >= c["h"] >= 1,
)
def _binom_3(c):
    i, j, h = c["i"], c["j"], c["h"]
    rhs = sum(sign(k - j) * C(i + 1, k + 1) * C(k - j + h - 1, h - 1) for k in upto(i, j))
    return C(i - h + 1, j - h + 1), rhs


@register(
    "sec5.4-closed-S",
    f"{A54B} (S_2(m,j|1,−1,−x) = (−1)^{{m−j}} S_1(m,j|1,−1,−x) = C(m,j)⟨x+j⟩_{{m−j}})",
    "0 <= j <= m <= idx; symbolic x",
    lambda lim: Grid(**tri(lim)),
)
def _closed_s(c):
    m, j = c["i"], c["j"]
    closed = rising(X + j, m - j).scale(C(m, j))
    return [(S2(m, j, 1, -1, -X), closed), (S1(m, j, 1, -1, -X).scale(sign(m - j)), closed)]


@register(
    "sec5.4-closed-beta",
    f"{A54B} (β_m^{{(h)}}(−1,x) = (−1)^m α_m^{{(h)}}(−1,−x) = ⟨x−h⟩_m)",
    "0 <= m <= idx; -2 <= h <= 3; symbolic x",
    lambda lim: Grid(h=range(-2, 4), m=upto(lim.idx)),
)
def _closed_beta(c):
    m, h = c["m"], c["h"]
    closed = rising(X - h, m)
    return [(nb.beta(m, h, -1, X), closed), (nb.alpha(m, h, -1, -X).scale(sign(m)), closed)]


def _rising_grid(lim):
    return Grid(h=range(-2, 3), **tri(lim))


@register(
    "sec5.4-rising-1",
    f"{A54B} (from (6a): ⟨x−h−y⟩_{{i−j}} = Σ C(i−j,k)(−1)^k ⟨y+j⟩_k ⟨x−h+j+k⟩_{{i−j−k}})",
    "0 <= j <= i <= idx; -2 <= h <= 2; symbolic x, y",
    _rising_grid,
)
def _rising_1(c):
    i, j, h = c["i"], c["j"], c["h"]
    n = i - j
    rhs = total(
        rising(Y + j, k) * rising(X - h + j + k, n - k) * (C(n, k) * sign(k)) for k in upto(n)
    )
    return rising(X - h - Y, n), rhs


@register(
    "sec5.4-rising-2",
    f"{A54B} (from (51): ⟨y+j+x−h⟩_{{i−j}} = Σ C(i−j,k) ⟨y+j⟩_k ⟨x−h⟩_{{i−j−k}})",
    "0 <= j <= i <= idx; -2 <= h <= 2; symbolic x, y",
    _rising_grid,
)
def _rising_2(c):
    i, j, h = c["i"], c["j"], c["h"]
    n = i - j
    rhs = total(rising(Y + j, k) * rising(X - h, n - k) * C(n, k) for k in upto(n))
    return rising(Y + j + X - h, n), rhs


@register(
    "sec5.4-rising-3",
    f"{A54B} (from (7a2): ⟨y+j−x−h⟩_{{i−j}} = Σ C(i−j,k)(−1)^k ⟨x+h⟩_k ⟨y+j+k⟩_{{i−j−k}})",
    "0 <= j <= i <= idx; -2 <= h <= 2; symbolic x, y",
    _rising_grid,
)
def _rising_3(c):
    i, j, h = c["i"], c["j"], c["h"]
    n = i - j
    rhs = total(
        rising(X + h, k) * rising(Y + j + k, n - k) * (C(n, k) * sign(k)) for k in upto(n)
    )
    return rising(Y + j - X - h, n), rhs
