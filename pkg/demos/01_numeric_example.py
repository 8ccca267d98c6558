# %% [markdown]
# # An 8-term progression on a quartic curve
#
# With T = 2 and n = 2 the closed forms give a curve y^2 = a x^4 + b x^2 + a
# through eight rational points whose x-coordinates are 2^-7, 2^-5, ..., 2^7.

# %%
from fractions import Fraction

from gpforge import closed_form_family, gp_verify, GeneralCurve, smoothness_check

rec = closed_form_family(2, 2)
print("a =", rec.curve.a)
print("b =", rec.curve.b)
for x, y in rec.sequence.points:
    print(f"  x = {x!s:>6}   y = {y}")

# %% [markdown]
# Every point is checked exactly when the record is built. Re-checking them
# directly: the x-values are 2^-9 * 4^i for i = 1..8.

# %%
C = GeneralCurve.from_trinomial(rec.curve)
hits = gp_verify(C, rec.sequence.base, rec.sequence.ratio, 1, 8)
print(len(hits), "of 8 indices lift to rational points")
print("nonsingular:", smoothness_check(rec.curve))

# %% [markdown]
# The same closed forms work for other ratios and exponents.

# %%
for T, n in [(3, 1), (3, 3), ("3/2", 2), (-2, 2)]:
    r = closed_form_family(Fraction(T), n)
    print(f"T={T}, n={n}: {len(r.sequence)} points, digits in a: {len(str(r.curve.a))}")
