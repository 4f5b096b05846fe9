# %% [markdown]
# # Residue-class sums of integer polynomials
#
# `reduce(g, d)` collects the coefficients of `g(t)` by exponent mod `d`.
# The result lives in Z[T]/(T^d - 1) and reduction respects sums and products.

# %%
from fibspecial import IntPoly, cmul, reduce
from fibspecial.cyclo import PHI3, T_MINUS_ONE, element, in_M_after_shift, is_special

g = IntPoly([0, 1, 1, 1, 1])  # t + t^2 + t^3 + t^4
h = IntPoly([2, -1, 0, 5])
print("g =", g, " h =", h)
print("R(g) =", reduce(g, 3).coeffs)
print("R(g*h) == R(g)*R(h):", reduce(g * h, 3) == cmul(reduce(g, 3), reduce(h, 3)))

# %% [markdown]
# In K_3 the element 1 + T + T^2 is killed by T - 1, so multiplying any
# polynomial by 1 + t + t^2 lands on a multiple of it.

# %%
print("phi(T)*(T-1) =", cmul(PHI3, T_MINUS_ONE).coeffs)
print("R((1+t+t^2) h) =", reduce(IntPoly([1, 1, 1]) * h, 3).coeffs, "= norm(h) * (1,1,1)")

# %% [markdown]
# ## Special elements
#
# `a + bT + cT^2` is special when all three coefficients agree or their pairwise
# distances sum to 2. Equivalently its product with T - 1 is one of seven elements.

# %%
for x in [element(1, 1, 1), element(1, 0, 1), element(2, 0, 0), element(3, 4, 4)]:
    v = is_special(x)
    print(x.coeffs, v.reason, "| shifted image in M:", in_M_after_shift(x))
