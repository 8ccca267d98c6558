"""The auxiliary conic R^2 = -A U^2 + B V^2 with A = t^2(t^4+1), B = 1+t^2+t^4.

Points (t, U) and (t^3, V) on y^2 = a w^2 + b w + a pin down (a, b) linearly;
the conic is exactly the condition that (t^5, R) is on the same curve.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import BinaryForm, fmt_rational, parse_rational


def _check_ratio(t: Fraction) -> Fraction:
    t = Fraction(t)
    if t in (0, 1, -1):
        raise ValueError(f"degenerate ratio t={t}")
    return t


@dataclass(frozen=True)
class ConicPoint:
    U: Fraction
    V: Fraction
    R: Fraction

    def normalized(self) -> tuple:
        """Scale so the first nonzero coordinate is 1."""
        for c in (self.U, self.V, self.R):
            if c:
                return (self.U / c, self.V / c, self.R / c)
        raise ValueError("zero projective triple")

    def same_as(self, other: "ConicPoint") -> bool:
        return self.normalized() == other.normalized()

    def scaled(self, c) -> "ConicPoint":
        return ConicPoint(self.U * c, self.V * c, self.R * c)

    def to_json(self) -> dict:
        return {"U": fmt_rational(self.U), "V": fmt_rational(self.V), "R": fmt_rational(self.R)}

    @classmethod
    def from_json(cls, d) -> "ConicPoint":
        return cls(parse_rational(d["U"]), parse_rational(d["V"]), parse_rational(d["R"]))


@dataclass(frozen=True)
class ConicModel:
    t: Fraction

    def __post_init__(self):
        object.__setattr__(self, "t", _check_ratio(self.t))

    @property
    def A(self) -> Fraction:
        t2 = self.t * self.t
        return t2 * (t2 * t2 + 1)

    @property
    def B(self) -> Fraction:
        t2 = self.t * self.t
        return 1 + t2 + t2 * t2

    @property
    def base_point(self) -> ConicPoint:
        return ConicPoint(Fraction(1), self.t, self.t * self.t)

    def contains(self, pt: ConicPoint) -> bool:
        return -self.A * pt.U ** 2 + self.B * pt.V ** 2 == pt.R ** 2

    def param_forms(self) -> tuple[BinaryForm, BinaryForm, BinaryForm]:
        """(U, V, R) of the chord parametrization as quadratic forms in (p, q)."""
        A, B, t = self.A, self.B, self.t
        U = BinaryForm(2, (A, -2 * B * t, B))
        V = BinaryForm(2, (-t * A, 2 * A, -t * B))
        R = BinaryForm(2, (-t * t * A, 0, t * t * B))
        return U, V, R


def solve_ab(t, U, V) -> tuple[Fraction, Fraction]:
    """Solve U^2 = a(t^2+1) + b t, V^2 = a(t^6+1) + b t^3 for (a, b)."""
    t = _check_ratio(t)
    U, V = Fraction(U), Fraction(V)
    t2 = t * t
    d = (t2 - 1) ** 2
    a = (V * V - t2 * U * U) / (d * (t2 + 1))
    b = ((t2 * t2 - t2 + 1) * U * U - V * V) / (t * d)
    assert a * (t2 + 1) + b * t == U * U
    assert a * (t2 ** 3 + 1) + b * t2 * t == V * V
    return a, b


def conic_param(model: ConicModel, p, q) -> ConicPoint:
    """Second intersection of the conic with the line through (1, t, t^2)
    in direction (p, q, 0)."""
    p, q = Fraction(p), Fraction(q)
    if p == 0 and q == 0:
        raise ValueError("direction (0, 0) is not a projective point")
    A, B, t = model.A, model.B, model.t
    Ap2, Bq2 = A * p * p, B * q * q
    pt = ConicPoint(
        Ap2 + Bq2 - 2 * B * t * p * q,
        -t * (Ap2 + Bq2) + 2 * A * p * q,
        t * t * (Bq2 - Ap2),
    )
    assert model.contains(pt)
    return pt


def conic_param_inverse(model: ConicModel, pt: ConicPoint) -> tuple[Fraction, Fraction]:
    """Direction (p : q) whose chord hits ``pt``; inverse of :func:`conic_param`."""
    if not model.contains(pt):
        raise ValueError("point not on conic")
    t = model.t
    p = t * t * pt.U - pt.R
    q = t * t * pt.V - t * pt.R
    if p == 0 and q == 0:
        raise ValueError("tangent direction undefined at the base point")
    return p, q


def reflect_point(x, y) -> tuple[Fraction, Fraction]:
    """(x, y) -> (1/x, y/x); an involution of every palindromic y^2 = a w^2 + b w + a."""
    x, y = Fraction(x), Fraction(y)
    if x == 0:
        raise ZeroDivisionError("cannot reflect a point with x = 0")
    return 1 / x, y / x
