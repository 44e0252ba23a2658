# %% [markdown]
# # Polynomials with integer coefficients
#
# Every quantity in this package is an `MPoly`: a sparse polynomial with
# integer coefficients in named variables.  `z` (path length) and `u`
# (final height) are reserved; everything else is a step weight.

# %%
from bounded_paths.ring import parse, rational_series, reduce_fraction, univariate_gcd_in

p = parse("t^2*z^2 - z + 1")
print(p)                      # canonical form: 1 - z + t^2*z^2
print(p.degree("z"), p.coeff("z", 2))

# %% [markdown]
# Arithmetic is exact; printing is canonical, so equal values print the same.

# %%
q = parse("1 + t2*z")
print(q * q)
print((q * q - q) == q * parse("t2*z"))

# %% [markdown]
# ## Series expansion
#
# `rational_series(num, den, order)` expands `num/den` in powers of `z`.
# With `var=None` it groups terms by total degree in the weights instead,
# which is how path counts are read off: a path of length `n` with weight
# `t` per step contributes to degree `n`.

# %%
s = rational_series(1, p, 6)
for n, c in enumerate(s.coeffs):
    print(f"z^{n}: {c}")

# %% [markdown]
# ## Common factors
#
# The gcd works in one variable over the fraction field of the others.

# %%
D = parse("1 + 2*t2*z + t2^2*z^2") * parse("1 - z + t1^2*z^2")
N = parse("1 - t2^2*z^2")
print(univariate_gcd_in(N, D, "z"))
print(reduce_fraction(N, D))
