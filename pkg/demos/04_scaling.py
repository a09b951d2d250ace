# %% [markdown]
# How the fast chain scales
#
# Over a word-size prime field, time the quadratic recurrence and the divide
# and conquer chain on random pairs of doubling degree and fit the slope of
# log(time) against log(d).  The acceptance suite runs the same experiment at
# d = 256 .. 2048; smaller sizes keep this demo quick.

# %%
import sys

from symres.bench import rows_to_csv, run_bench

sizes = [int(s) for s in sys.argv[1:]] or [64, 128, 256, 512]
rows = run_bench(sizes, "zp", seed=0)
print(rows_to_csv(rows))
