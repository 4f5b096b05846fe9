# %% [markdown]
# # Fibonacci partitions by number of parts
#
# With f_1 = 1, f_2 = 2, ... the polynomial `phi(n)` counts partitions of n into
# distinct Fibonacci numbers, graded by number of parts.

# %%
from fibspecial import chi_series, fibs_upto, phi, phi_brute, r_counts, shallit_check
from fibspecial.fibparts import phi_table, residue_table

print(fibs_upto(100))
for n in (1, 3, 4, 10, 100, 1000):
    print(n, phi(n), "| brute force agrees:", phi(n) == phi_brute(n))

# %% [markdown]
# ## Counts by residue class
#
# Grouping the coefficients of `phi(n)` by exponent mod 3 gives three counts
# that never differ by more than 1, and at least two of them coincide.

# %%
print(r_counts(10, 3))
table = residue_table(100_000, 3)
spread = table[1:].max(axis=1) - table[1:].min(axis=1)
print("max spread for n <= 10^5:", int(spread.max()))
print(shallit_check(987))

# %% [markdown]
# ## The signed count
#
# The coefficients of prod (1 - x^{f_i}) are r_{2,0}(n) - r_{2,1}(n) and stay in {-1, 0, 1}.

# %%
s = chi_series(60)
print(s.tolist())
r2 = residue_table(60, 2)
print(all(s[n] == r2[n, 0] - r2[n, 1] for n in range(1, 61)))
