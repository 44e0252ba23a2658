# %% [markdown]
# # Symmetric step sets
#
# When `-S = S` with mirrored weights, `1 - A_k` splits into two half-size
# blocks.  Their determinants `F^+_k`, `F^-_k` multiply to `F_k`.

# %%
from bounded_paths.model import StepModel, sym_band
from bounded_paths.symmetric import sym_F, sym_meander_identities, sym_meander_sum, sym_numerators

dyck = StepModel.from_text("1:t,-1:t")
print(sym_band(dyck, 3))
plus, minus = sym_F(dyck, 8)
for k in range(9):
    print(k, plus[k], "|", minus[k])

# %% [markdown]
# The mirrored meander identities are checked as exact polynomial
# equalities after clearing denominators.

# %%
bb = StepModel.from_text("0:0,1:t1,-1:t1,2:t2,-2:t2")
report = sym_meander_identities(bb, 6)
for name, holds in report.verdicts:
    print(f"{name}: {holds}")

# %% [markdown]
# The meander sum needs only the plus block: `M_k = P_k / F^+_{k+1}`.

# %%
for k, (P, Fp) in enumerate(sym_meander_sum(bb, 3)):
    print(f"M_{k} = ({P}) / ({Fp})")

# %% [markdown]
# ## Folded generating functions
#
# `sum F^+_k z^k` has denominator `D(z^2)`.  The numerators are found by
# multiplying the series by the denominator and checking that the tail
# vanishes.

# %%
nums = sym_numerators(dyck)
print("N+ =", nums.N_plus)
print("N- =", nums.N_minus)
