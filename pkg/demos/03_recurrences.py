# %% [markdown]
# # Generating functions in k
#
# Since `F_k` is one entry of `T^k` applied to a fixed vector,
# `sum F_k z^k = N(z) / D(z)` with `D(z) = det(1 - zT)`.  The degrees and
# the top coefficient of `D` are fixed by `a` and `b`, and the functions
# below check them as they compute.

# %%
from bounded_paths.model import StepModel
from bounded_paths.ring import reduce_fraction
from bounded_paths.transfer import D_of_z, N_of_z, build_T, det_T_closed_form

for text in ["1:t,-1:t", "0:w0,1:t,-1:t", "1:x,-2:y", "3:r,-1:s"]:
    T = build_T(StepModel.from_text(text))
    print(f"{text:16s} D = {D_of_z(T)}")
    print(f"{'':16s} N = {N_of_z(T)}")

# %% [markdown]
# ## Basketball walks
#
# Steps `0, +-1, +-2` with `w_0 = 0`.  `N` and `D` share the factor
# `1 + t2*z`, so the `F_k` satisfy a recurrence of order 5, not 6.

# %%
T = build_T(StepModel.from_text("0:0,1:t1,-1:t1,2:t2,-2:t2"))
D, N = D_of_z(T), N_of_z(T)
print("D =", D)
print("N =", N)
print("reduced:", *reduce_fraction(N, D), sep="\n  ")
print("det T =", det_T_closed_form(T)[0])
