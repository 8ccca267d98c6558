# %% [markdown]
# # Points (t, U), (t^3, V), (t^5, R) and the conic
#
# Two points fix (a, b) linearly. A fifth-power point exists exactly when
# (U : V : R) lies on R^2 = -A U^2 + B V^2, which has the rational point
# (1 : t : t^2). Lines through it sweep out all other rational points.

# %%
from gpforge import ConicModel, conic_param, conic_param_inverse, solve_ab

model = ConicModel(2)
print("A =", model.A, " B =", model.B)

pt = conic_param(model, 1, 1)
print("chord point for (p:q) = (1:1):", pt)
print("on conic:", model.contains(pt))

# %% [markdown]
# Solve for the curve and check the fifth point.

# %%
a, b = solve_ab(model.t, pt.U, pt.V)
t = model.t
print("a, b =", a, b)
print("R^2 == a(t^10+1) + b t^5:", pt.R ** 2 == a * (t ** 10 + 1) + b * t ** 5)

# %% [markdown]
# The chord map is invertible away from the base point.

# %%
print("back to (p:q):", conic_param_inverse(model, pt))
