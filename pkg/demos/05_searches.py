# %% [markdown]
# # Brute-force searches
#
# Rediscover the progression by enumeration, then look for ten-term
# extensions at bounded height.

# %%
from gpforge import GeneralCurve, HeightBound, closed_form_family, gp_search, length10_search

C = GeneralCurve.from_trinomial(closed_form_family(2, 2).curve)
for seq in gp_search(C, HeightBound(4), 8):
    print(f"start {seq.base}, ratio {seq.ratio}, length {len(seq)}")

# %% [markdown]
# Ten-term search at conic ratio t = 4. Degenerate members (a = 0 or
# b = +-2a) satisfy every condition trivially and are flagged.

# %%
hits = length10_search(4, HeightBound(50))
print("non-degenerate:", [h for h in hits if not h.degenerate])
print("degenerate (p:q):", [(str(h.p), str(h.q)) for h in hits if h.degenerate])
