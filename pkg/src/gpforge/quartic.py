"""Square conditions for further progression points, as binary quartics in (p, q)."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt, lcm
from typing import Optional

from .conic import ConicModel
from .exact import BinaryForm, fmt_rational, form_compose_quadratic, form_eval, parse_rational


@dataclass(frozen=True)
class QuarticModel:
    """S^2 = F(p, q).

    ``F`` equals ``clearing_factor`` times the raw condition
    a(p,q)(t^{2k}+1) + b(p,q) t^k; the factor is a rational square, so
    rational points of both agree and y = S / sqrt(clearing_factor).
    """

    t: Fraction
    F: BinaryForm
    clearing_factor: Fraction = Fraction(1)
    marked_point: Optional[tuple] = None
    exponent: int = 7

    def __post_init__(self):
        if self.F.degree != 4:
            raise ValueError("quartic model needs a degree-4 form")
        if self.marked_point is not None:
            p0, q0, s0 = (Fraction(c) for c in self.marked_point)
            if s0 * s0 != form_eval(self.F, p0, q0):
                raise ValueError("marked point is not on the quartic")
            object.__setattr__(self, "marked_point", (p0, q0, s0))

    @property
    def clearing_root(self) -> Fraction:
        c = self.clearing_factor
        r = Fraction(isqrt(c.numerator), isqrt(c.denominator))
        assert r * r == c
        return r

    def with_marked_point(self, p0, q0, s0) -> "QuarticModel":
        return QuarticModel(self.t, self.F, self.clearing_factor, (p0, q0, s0), self.exponent)

    def to_json(self) -> dict:
        mp = None
        if self.marked_point is not None:
            mp = [fmt_rational(c) for c in self.marked_point]
        return {
            "t": fmt_rational(self.t),
            "coeffs": self.F.to_json(),
            "clearing_factor": fmt_rational(self.clearing_factor),
            "marked_point": mp,
        }

    @classmethod
    def from_json(cls, d) -> "QuarticModel":
        mp = d.get("marked_point")
        return cls(
            parse_rational(d["t"]),
            BinaryForm.from_json(d["coeffs"]),
            parse_rational(d.get("clearing_factor", "1/1")),
            None if mp is None else tuple(parse_rational(c) for c in mp),
        )


def raw_condition(t, k: int) -> BinaryForm:
    """a(p,q)(t^{2k}+1) + b(p,q) t^k with (a, b) solved from the chord forms U, V."""
    model = ConicModel(t)
    t = model.t
    t2 = t * t
    da = (t2 - 1) ** 2 * (t2 + 1)
    db = t * (t2 - 1) ** 2
    tk = t ** k
    wk = tk * tk + 1
    # a = (V^2 - t^2 U^2)/da, b = ((t^4 - t^2 + 1) U^2 - V^2)/db
    coef_uu = -t2 * wk / da + (t2 * t2 - t2 + 1) * tk / db
    coef_vv = wk / da - tk / db
    U, V, _ = model.param_forms()
    return form_compose_quadratic((coef_uu, 0, coef_vv), U, V)


def point_condition(t, k: int) -> QuarticModel:
    raw = raw_condition(t, k)
    L = lcm(*(c.denominator for c in raw.coefficients))
    factor = Fraction(L * L)
    return QuarticModel(Fraction(t), raw * factor, factor, None, k)


def seventh_condition(t) -> QuarticModel:
    """Quartic whose rational points give curves through (t^7, S)."""
    return point_condition(t, 7)


def ninth_condition(t) -> QuarticModel:
    """Quartic whose rational points give curves through (t^9, S')."""
    return point_condition(t, 9)


def quartic_invariants(F: BinaryForm):
    """Classical (I, J, j) of a p^4 + b p^3 q + c p^2 q^2 + d p q^3 + e q^4.

    j = 6912 I^3 / (4 I^3 - J^2); the string ``"infinite"`` when that vanishes.
    """
    if F.degree != 4:
        raise ValueError("quartic invariants need a degree-4 form")
    a, b, c, d, e = F.coefficients
    I = 12 * a * e - 3 * b * d + c * c
    J = 72 * a * c * e - 27 * a * d * d - 27 * b * b * e + 9 * b * c * d - 2 * c ** 3
    disc = 4 * I ** 3 - J * J
    j = "infinite" if disc == 0 else 6912 * I ** 3 / disc
    return I, J, j
