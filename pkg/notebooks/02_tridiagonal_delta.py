# %% [markdown]
# # Tridiagonal determinant polynomials
#
# `delta(A)` evaluates the three-term recurrence; `delta_det(A)` expands the
# determinant directly. Both agree, and every value is 3-special.

# %%
import itertools

from fibspecial import delta, delta_det, epsilon, is_3special_poly, k_multiplier, s_element, s_via_recurrence
from fibspecial.cyclo import in_M

for A in [(), (2,), (2, 1), (3, 0), (2, 1, 0, 2), (5, 7, 1)]:
    print(A, "->", delta(A))

print("recurrence == determinant on (4, 0, 3, 1, 2):", delta((4, 0, 3, 1, 2)) == delta_det((4, 0, 3, 1, 2)))

# %% [markdown]
# ## Reducing entries mod 3
#
# Replacing every entry by its residue mod 3 changes the mod-3 image only by an
# integer multiple of 1 + T + T^2. For a single entry the multiple is floor(a/3).

# %%
for a in range(1, 10):
    print(f"a={a}  eps={epsilon((a,))}  k={k_multiplier((a,))}")
print("k for (7, 11, 4):", k_multiplier((7, 11, 4)))

# %% [markdown]
# ## S(A) and membership in M[T]

# %%
count = 0
for m in range(1, 7):
    for A in itertools.product(range(3), repeat=m):
        assert s_via_recurrence(A) == s_element(A)
        assert in_M(s_element(A)) and is_3special_poly(delta(A))
        count += 1
print(count, "vectors checked")
