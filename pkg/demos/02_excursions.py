# %% [markdown]
# # Excursions of bounded height
#
# A step model is a set of integer steps with a weight per step.  Paths
# start at 0, never go below 0, and stay at most `k` high.  The generating
# function of those that also end at 0 is `F_k / F_{k+1}`, where
# `F_{k+1} = det(1 - A_k)` for the band matrix `A_k`.

# %%
from bounded_paths.linalg import det
from bounded_paths.model import StepModel, one_minus_A
from bounded_paths.ring import rational_series

dyck = StepModel.from_text("1:t,-1:t")
print(one_minus_A(dyck, 3))
F = [det(one_minus_A(dyck, k - 1)) if k else 1 for k in range(8)]
print([str(f) for f in F])

# %% [markdown]
# Expanding `F_3 / F_4` by total degree in `t` counts Dyck paths of height
# at most 3.  Up to length 6 nothing is cut off, so the Catalan numbers show.

# %%
for n, c in enumerate(rational_series(F[3], F[4], 10, None).coeffs):
    print(n, c)

# %% [markdown]
# ## The transfer matrix
#
# Computing each `F_k` by a fresh determinant is wasteful.  The vector of
# determinants indexed by `a`-subsets of `[-b, a-1]` advances by one matrix
# product per step.

# %%
from bounded_paths.transfer import F_sequence, build_T

T = build_T(dyck)
print([T.index.label(I) for I in T.index], T.mat)
print([str(f) for f in F_sequence(T, 7)])

basketball = StepModel.from_text("0:0,1:t1,-1:t1,2:t2,-2:t2")
T = build_T(basketball)
print(T.dim, "subsets:", [T.index.label(I) for I in T.index])
print(F_sequence(T, 4)[4])
