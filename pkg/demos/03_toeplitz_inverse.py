# %% [markdown]
# Fraction-free Toeplitz inversion
#
# The inverse is encoded by two generator vectors over a common denominator
# and assembled as a difference of products of triangular Toeplitz matrices.
# When the leading block of order d - 1 is singular the matrix is embedded
# in a larger one whose corner entries are chosen to keep it invertible.

# %%
import random

from symres import ToeplitzSpec
from symres.corpus import invertible_toeplitz, toeplitz_with_singular_leading
from symres.toeplitz import fitm_invert, gs_apply, identity, mat_mul

T = ToeplitzSpec(3, (1, -2, 4, 3, 5))
gen, W = fitm_invert(T, dense=True)
print("T =", T.dense())
print("branch", gen.branch, "denominator", gen.denominator)
print("x =", gen.x_num, " y =", gen.y_num)
print("T * inverse == I:", mat_mul(T.dense(), W) == identity(3))

# %% [markdown]
# Solving a system straight from the generators, without the dense inverse.

# %%
b = [1, 0, 2]
x = gs_apply(gen, b)
print("solution", x, "check", [sum(r * v for r, v in zip(row, x)) for row in T.dense()])

# %% [markdown]
# Singular leading block: the other branch, sometimes after a second choice
# of corner entries.

# %%
rng = random.Random(3)
attempts = {}
for _ in range(200):
    T = toeplitz_with_singular_leading(rng, rng.randint(2, 8), 2)
    gen, W = fitm_invert(T, dense=True)
    assert gen.branch == "**" and mat_mul(T.dense(), W) == identity(T.d)
    attempts[gen.attempts] = attempts.get(gen.attempts, 0) + 1
print("200 singular-leading inversions, attempts histogram:", attempts)

T = invertible_toeplitz(rng, 24)
gen, W = fitm_invert(T, dense=True)
print("d = 24 random matrix inverted exactly:", mat_mul(T.dense(), W) == identity(24))
