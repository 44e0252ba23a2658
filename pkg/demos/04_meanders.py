# %% [markdown]
# # Meanders
#
# Meanders may end at any height `l`.  Their generating function is
# `F_{k,l} / F_{k+1}` with `F_{k,l}` the `(l, 0)` cofactor of `1 - A_k`.
# A second transfer matrix on the shifted step set produces all of them.

# %%
from bounded_paths.meander import D_tilde_and_N_tilde, build_meander_system, iterate_Fkl, meander_sums
from bounded_paths.model import StepModel

dyck = build_meander_system(StepModel.from_text("1:t,-1:t"))
table = iterate_Fkl(dyck, 4)
for k, row in enumerate(table.rows):
    print(k, [str(f) for f in row])

# %% [markdown]
# For Dyck paths `F_{k,l} = t^l F_{k-l}`, and the bivariate generating
# function is `1 / ((1 - t*u*z)(1 - z + t^2*z^2))`.

# %%
print(D_tilde_and_N_tilde(dyck))

# %% [markdown]
# ## Basketball meanders

# %%
bb = build_meander_system(StepModel.from_text("0:0,1:t1,-1:t1,2:t2,-2:t2"))
Dt, Nt = D_tilde_and_N_tilde(bb)
print("D~ =", Dt)
print("N~ =", Nt)

# %% [markdown]
# ## All final heights at once
#
# `G_k` sums `F_{k,l}` over `l`; `M_k = G_k / F_{k+1}` counts every meander.

# %%
for m in meander_sums(bb, 3):
    num, den = m.reduced()
    print(f"M_{m.k} = ({num}) / ({den})")
