# %% [markdown]
# # New curves from multiples of a point
#
# The seventh point turns into a square condition S^2 = F(p, q) on a quartic.
# The published family supplies one rational point, which sits on a Weierstrass
# model with infinite order. Each multiple m*P yields another curve.

# %%
from gpforge import gp8_family, is_nontorsion, jacobian_bridge

bridge = jacobian_bridge(2, 2)
print("Jacobian: y^2 = x^3 + alpha x + beta")
print("  alpha digits:", len(str(bridge.curve.alpha)), " beta digits:", len(str(bridge.curve.beta)))
verdict, cert = is_nontorsion(bridge.curve, bridge.P)
print("kP finite for k in 1..10, 12:", verdict)

# %%
for m in (1, 2, 3, 4):
    rec = gp8_family(2, 2, m)
    print(f"m={m}: a has {len(str(rec.curve.a))} chars, 8 points verified")

# %% [markdown]
# Members m and 1 - m coincide: negating S swaps the marked point and the
# identity, which acts as Q -> P - Q.

# %%
print(gp8_family(2, 2, 3).curve == gp8_family(2, 2, -2).curve)
