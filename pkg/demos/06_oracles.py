# %% [markdown]
# # Brute-force checks
#
# Two oracles share no code with the determinant and transfer routes:
#
# * a dynamic program counting weighted paths level by level;
# * an enumeration of I-permutations, summing signed products of `beta_s`.

# %%
from bounded_paths.model import StepModel
from bounded_paths.oracle import dp_count, iperm_sums, verify_series
from bounded_paths.transfer import build_T, iterate_F

dyck = StepModel.from_text("1:t,-1:t")
table = dp_count(dyck, None, 16)
print([str(table.excursions(2 * n)) for n in range(9)])

# %% [markdown]
# `verify_series` expands a fraction by total weight degree and compares it
# with the DP, coefficient by coefficient.

# %%
m = StepModel.from_text("1:x,-2:y")
for target in ["excursion", "sum", 0, 1, 2]:
    r = verify_series(m, 2, target, 9)
    print(target, r.ok, [str(c) for c in r.actual[:7]])

# %% [markdown]
# The I-permutation sums reproduce the transfer vectors entry by entry.

# %%
m = StepModel.from_text("2:p,1:q,-1:q,-2:p")
T = build_T(m)
vec = iterate_F(T, 4)[4]
for I, v in iperm_sums(m, 4).sums.items():
    print(I, v == vec[T.index.mask_of(I)], v)
