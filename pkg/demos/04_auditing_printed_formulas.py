# %% [markdown]
# # Auditing the printed formulas
#
# Each transcribed formula is evaluated exactly against the derived
# construction. Refutations come with a concrete counterexample.

# %%
from gpforge import audit

report = audit([2, 3, "5/2"])
print(report.table())

# %%
for fid in ("EQ1_A", "EQ2_PARAM"):
    print(fid, report[fid].to_json()["witness"])
