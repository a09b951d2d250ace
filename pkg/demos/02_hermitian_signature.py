# %% [markdown]
# Principal minors and signature of a Hermitian Toeplitz matrix
#
# The leading principal minors are the constant terms of a subresultant
# chain built from the matrix entries.  Their sign pattern gives the
# signature, including across runs of vanishing minors.

# %%
import random

from symres import Gaussian, ToeplitzSpec
from symres.corpus import hermitian_with_zero_minor
from symres.ssr_oracle import leading_minors
from symres.toeplitz import principal_minors, signature, signature_by_congruence

T = ToeplitzSpec.hermitian_from_column([2, 1])
print(T.dense(), "minors", principal_minors(T), "signature", signature(T).signature)

T = ToeplitzSpec.hermitian_from_column([4, Gaussian(1, 2), Gaussian(0, -1), 3])
print("complex entries, minors:", principal_minors(T))
print("by Bareiss elimination:  ", leading_minors(T.dense()))

# %% [markdown]
# With a zero diagonal the working ring is widened to the Gaussian integers
# to split the diagonal entry; the minors come back real.

# %%
T = ToeplitzSpec.hermitian_from_column([0, 1, 1])
res = signature(T)
print("minors", res.minors, "signature", res.signature, "via", res.method)

# %% [markdown]
# Random matrices with vanishing minors, checked against an inertia count
# by exact congruence.

# %%
rng = random.Random(1)
tally = {}
for _ in range(200):
    T = hermitian_with_zero_minor(rng, rng.randint(2, 7), rng.random() < 0.5)
    res = signature(T, verify=False)
    assert res.signature == signature_by_congruence(T.dense())
    tally[res.method] = tally.get(res.method, 0) + 1
print("200 instances agree; paths used:", tally)
