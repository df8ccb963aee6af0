# %% [markdown]
# # Generalized Pascal matrices and their factorization
#
# P_n[lambda, x] has entries C(i-1, j-1) (x|lambda)_{i-j}.  It factors as a
# product of simpler unit lower-triangular matrices G_n ... G_1, where each
# G_k embeds a matrix R_k whose inverse T_k has a closed form.

# %%
from fractions import Fraction

from degenmat import matrices as mx
from degenmat.ring import LAMBDA, X, Y

P4 = mx.pascal(4, LAMBDA, X)
print(P4)

# %%
for k in range(4, 0, -1):
    print(f"G_{k}:")
    print(mx.g_factor(4, k, LAMBDA, X))
print(mx.g_product(4, LAMBDA, X) == P4)

# %% [markdown]
# R_n and T_n are inverse to each other.  Check at a rational point and symbolically.

# %%
lam, x = Fraction(1, 2), Fraction(3)
print(mx.mat_mul(mx.r_matrix(6, lam, x), mx.t_matrix(6, lam, x)) == mx.identity(6))
print(mx.mat_inv(mx.t_matrix(5, LAMBDA, X)) == mx.r_matrix(5, LAMBDA, X))

# %% [markdown]
# The Pascal family is a one-parameter group, and the Bernoulli matrices
# B_n^(w) compose the same way: B^(w)[x] B^(z)[y] = B^(w+z)[x+y].

# %%
print(mx.mat_mul(mx.pascal(4, LAMBDA, X), mx.pascal(4, LAMBDA, Y)) == mx.pascal(4, LAMBDA, X + Y))
B = mx.bernoulli_matrix(4, 1, LAMBDA, X)
print(mx.mat_inv(B) == mx.bernoulli_matrix(4, -1, LAMBDA, -X))
print(mx.mat_pow(B - mx.identity(4), 4) == mx.zeros(4))

# %%
print(mx.stirling_matrix_first_type(5, (1, 0, 0), 2).to_csv())
