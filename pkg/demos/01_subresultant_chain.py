# %% [markdown]
# Symmetric subresultants of a polynomial pair, three ways
#
# The determinantal oracle builds every S_j from a 2j x 2j determinant.  The
# quadratic recurrence walks the chain one symmetric division at a time, and
# the fast variant computes the same quotient chain by divide and conquer.
# All three agree exactly, and nothing ever leaves the integers.

# %%
import random

from symres import SymPoly
from symres.corpus import chain_cases, pair_with_first_defect
from symres.fssr import fast_sequence, replay_sequence
from symres.ssr_oracle import subresultant_sequence_det
from symres.ssr_seq import ssr_sequence

A = SymPoly([3, -1, 4, 1, -5, 2])
B = SymPoly([2, 7, -1, 8, 2, 8])

oracle = subresultant_sequence_det(A, B)
quadratic = ssr_sequence(A, B).full
for j, (r, q) in enumerate(zip(oracle, quadratic), start=-1):
    print(f"S_{j:<2} = {q.coeffs}  {'ok' if q.same_polynomial(r) else 'MISMATCH'}")

# %% [markdown]
# The fast chain stores only the quotients.  Replaying them rebuilds the
# sequence from S_1 on.

# %%
fast = fast_sequence(A, B)
print("quotient profiles (alpha, beta):", [(q.alpha, q.beta) for q in fast.quotients])
replayed = replay_sequence(fast)
print("replay equals oracle:", all(f.same_polynomial(r) for f, r in zip(replayed[2:], oracle[2:])))
print("constant terms S_k(0):", [(k, c) for k, c, _ in fast.constant_terms()])

# %% [markdown]
# Defective steps: here the first remainder is built to have valuation 2 and
# degree deficit 3, so the chain jumps over interior indices.  Those are
# filled in from the structure of the gap and still match the oracle.

# %%
rng = random.Random(7)
A, B = pair_with_first_defect(rng, 7, 2, 3)
seq = ssr_sequence(A, B)
print("regular indices:", seq.regular_indices)
print("defect cases hit:", sorted(chain_cases(A, B)))
ok = all(s.same_polynomial(r) for s, r in zip(seq.full, subresultant_sequence_det(A, B)))
print("full sequence equals oracle:", ok)
