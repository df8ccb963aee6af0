# %% [markdown]
# # Exact polynomials and exponential generating functions
#
# Everything in `degenmat` is exact: coefficients are rationals and the
# polynomials live in Q[lambda, mu, x, y].

# %%
from fractions import Fraction

from degenmat.ring import LAMBDA, X, Y, EGFSeries, gff, parse_poly, poly_eval, series_inv, series_mul

p = parse_poly("x^2 - x - 1/6*lambda^2 + 1/6")
print(p)
print(poly_eval(p, {"lambda": 0}))  # the classical B_2(x)

# %% [markdown]
# The generalized falling factorial (x|lambda)_k = x(x - lambda)...(x - (k-1)lambda)
# interpolates between powers (lambda = 0) and falling factorials (lambda = 1).

# %%
for k in range(4):
    print(k, gff(X, LAMBDA, k))
print(gff(X, 0, 3), "|", gff(X, 1, 3))

# %% [markdown]
# Series store a_m, the coefficient of t^m/m!, so products are binomial
# convolutions.  The series of (x|lambda)_m times that of (y|lambda)_m is the
# series of (x+y|lambda)_m: the binomial theorem for generalized factorials.

# %%
N = 4
sx = EGFSeries.from_function(lambda m: gff(X, LAMBDA, m), N)
sy = EGFSeries.from_function(lambda m: gff(Y, LAMBDA, m), N)
print(series_mul(sx, sy) == EGFSeries.from_function(lambda m: gff(X + Y, LAMBDA, m), N))

# %%
exp_t = EGFSeries([1] * 5)
print(series_inv(exp_t))  # e^{-t}: alternating ones
print(Fraction(1, 3) * X * LAMBDA)
