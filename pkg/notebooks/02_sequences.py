# %% [markdown]
# # Degenerate Bernoulli polynomials and generalized Stirling numbers

# %%
from degenmat import sequences as nb
from degenmat.ring import LAMBDA, X, poly_eval

for m in range(5):
    print(f"beta_{m}(lambda, x) =", nb.beta(m, 1, LAMBDA, X))

# %% [markdown]
# At lambda = 0 the degenerate polynomials collapse to the classical Bernoulli
# polynomials; `alpha` is the companion family built from (1 + lambda t)^{x}.

# %%
for m in range(5):
    assert poly_eval(nb.beta(m, 1, LAMBDA, X), {"lambda": 0}) == nb.bernoulli_classic(m, 1, X)
print(nb.bernoulli_classic(4, 1, 0), nb.bernoulli_second(3, 1, 0), nb.alpha(3, 1, LAMBDA, 0))

# %% [markdown]
# Generalized Stirling numbers S(m, k | mu, lambda, x) specialize to many
# classical arrays.  A few of them, side by side:

# %%
rows = range(6)
print("second kind    ", [nb.stirling2_gen(5, k, (1, 0, 0)).constant_value() for k in rows])
print("first kind     ", [nb.stirling1_gen(5, k, (1, 0, 0)).constant_value() for k in rows])
print("Lah            ", [nb.stirling2_gen(5, k, (1, -1, 0)).constant_value() for k in rows])
print("2-Stirling (2nd)", [nb.r_stirling2(5, k, 2).constant_value() for k in rows])
print("S(4, 2 | 1, lambda, x) =", nb.stirling2_gen(4, 2, (1, LAMBDA, X)))

# %% [markdown]
# Hyperharmonic numbers are r-Stirling numbers in disguise: m! H_m^r = [m+r, 1+r]_r.

# %%
from math import factorial

for r in range(4):
    h = nb.hyperharmonic(5, r)
    print(r, h, factorial(5) * h == nb.r_stirling1(5 + r, 1 + r, r).constant_value())
