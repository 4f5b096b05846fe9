# %% [markdown]
# # Sweeping the open questions
#
# Each suite returns a report with a violation count and replayable witnesses.

# %%
from fibspecial import harness

r = harness.verify_hypothesis1(8, 10)
print("windowed d=3:", r.cases_checked, "cases,", r.violations, "violations")

# %% [markdown]
# ## Spread growth for d >= 4

# %%
for d in (4, 5):
    for rec in harness.spread_curve(d, 10_000):
        print(rec)

# %% [markdown]
# ## Coinciding counts for d = 3, 4, 5
#
# For d = 5 the sweep finds n where all five counts are distinct.

# %%
for d in (3, 4, 5):
    r = harness.verify_hypothesis3(d, 10_000, witness_cap=3)
    print(d, r.violations, r.witnesses[:1])

# %%
from fibspecial import phi, reduce

print(phi(448), reduce(phi(448), 5).coeffs)
