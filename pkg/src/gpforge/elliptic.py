"""Short Weierstrass curves over Q and the bridge from a pointed binary quartic.

The bridge sends the quartic S^2 = F(p, q) with a marked rational point
(p0 : q0 : S0) to y^2 = x^3 + alpha x + beta.  The conjugate point
(p0 : q0 : -S0) becomes the identity, so the marked point lands on a finite
point P whose multiples pull back to new quartic points.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .exact import fmt_rational, form_eval, is_square, parse_rational
from .quartic import QuarticModel, quartic_invariants

#: orders a rational torsion point can have (Mazur)
MAZUR_ORDERS = (1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12)


class NotOnCurveError(ValueError):
    pass


class ExceptionalPointError(ValueError):
    """The birational map is undefined at this point."""


@dataclass(frozen=True)
class ECPoint:
    x: Optional[Fraction] = None
    y: Optional[Fraction] = None

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def __neg__(self) -> "ECPoint":
        return self if self.is_infinity else ECPoint(self.x, -self.y)

    def to_json(self) -> dict:
        if self.is_infinity:
            return {"infinity": True}
        return {"x": fmt_rational(self.x), "y": fmt_rational(self.y)}

    @classmethod
    def from_json(cls, d) -> "ECPoint":
        if d.get("infinity"):
            return INFINITY
        return cls(parse_rational(d["x"]), parse_rational(d["y"]))


INFINITY = ECPoint()


@dataclass(frozen=True)
class WeierstrassCurve:
    """y^2 = x^3 + alpha x + beta."""

    alpha: Fraction
    beta: Fraction

    def __post_init__(self):
        object.__setattr__(self, "alpha", Fraction(self.alpha))
        object.__setattr__(self, "beta", Fraction(self.beta))
        if self.discriminant == 0:
            raise ValueError("singular Weierstrass curve")

    @classmethod
    def from_g2g3(cls, g2, g3) -> "WeierstrassCurve":
        """Y^2 = 4X^3 - g2 X - g3, rescaled by (x, y) = (4X, 4Y)."""
        return cls(-4 * Fraction(g2), -16 * Fraction(g3))

    @property
    def discriminant(self) -> Fraction:
        return -16 * (4 * self.alpha ** 3 + 27 * self.beta ** 2)

    @property
    def j_invariant(self) -> Fraction:
        a3 = 4 * self.alpha ** 3
        return 1728 * a3 / (a3 + 27 * self.beta ** 2)

    def contains(self, P: ECPoint) -> bool:
        if P.is_infinity:
            return True
        return P.y * P.y == P.x ** 3 + self.alpha * P.x + self.beta

    def point(self, x, y) -> ECPoint:
        P = ECPoint(Fraction(x), Fraction(y))
        if not self.contains(P):
            raise NotOnCurveError("point not on curve")
        return P


def ec_add(C: WeierstrassCurve, P: ECPoint, Q: ECPoint) -> ECPoint:
    if not (C.contains(P) and C.contains(Q)):
        raise NotOnCurveError("point not on curve")
    if P.is_infinity:
        return Q
    if Q.is_infinity:
        return P
    if P.x == Q.x:
        if P.y != Q.y or P.y == 0:
            return INFINITY
        lam = (3 * P.x * P.x + C.alpha) / (2 * P.y)
    else:
        lam = (Q.y - P.y) / (Q.x - P.x)
    x3 = lam * lam - P.x - Q.x
    R = ECPoint(x3, lam * (P.x - x3) - P.y)
    assert C.contains(R)
    return R


def ec_mul(C: WeierstrassCurve, k: int, P: ECPoint) -> ECPoint:
    if not C.contains(P):
        raise NotOnCurveError("point not on curve")
    if k < 0:
        return -ec_mul(C, -k, P)
    acc, base = INFINITY, P
    while k:
        if k & 1:
            acc = ec_add(C, acc, base)
        k >>= 1
        if k:
            base = ec_add(C, base, base)
    return acc


def is_nontorsion(C: WeierstrassCurve, P: ECPoint) -> tuple[bool, list]:
    """Certify infinite order: kP is finite for every k a torsion order could take.

    Returns ``(verdict, [(k, kP), ...])`` over k in 1..10, 12.
    """
    if P.is_infinity:
        raise ValueError("the identity has finite order")
    if not C.contains(P):
        raise NotOnCurveError("point not on curve")
    cert = []
    acc = INFINITY
    for k in range(1, 13):
        acc = ec_add(C, acc, P)
        if k in MAZUR_ORDERS:
            cert.append((k, acc))
    return all(not Q.is_infinity for _, Q in cert), cert


def normalize_quartic_point(p, q, S) -> tuple[Fraction, Fraction, Fraction]:
    """Representative of (p : q : S) with weights (1, 1, 2): q = 1, else p = 1."""
    p, q, S = Fraction(p), Fraction(q), Fraction(S)
    if q:
        return p / q, Fraction(1), S / (q * q)
    if p:
        return Fraction(1), Fraction(0), S / (p * p)
    raise ValueError("(0 : 0) is not a projective point")


class QuarticBridge:
    """Birational map between a pointed quartic and a short Weierstrass curve."""

    def __init__(self, quartic: QuarticModel):
        if quartic.marked_point is None:
            raise ValueError("quartic has no marked point")
        p0, q0, s0 = quartic.marked_point
        if s0 == 0:
            raise ValueError("degenerate marked point")
        I, J, j = quartic_invariants(quartic.F)
        if j == "infinite":
            raise ValueError("degenerate quartic")
        self.quartic = quartic
        self.marked_point = (p0, q0, s0)
        # (p, q) = (r X + p0 Z, s X + q0 Z) puts the marked point at X = 0
        self._r, self._s = (Fraction(1), Fraction(0)) if q0 else (Fraction(0), Fraction(1))
        self._det = self._r * q0 - self._s * p0
        G = quartic.F.substitute(self._r, p0, self._s, q0)
        ga, gb, gc, gd, ge = G.coefficients
        assert ge == s0 * s0
        self._abcd = (ga, gb, gc, gd)
        qc = -s0
        self._qc = qc
        a1 = gd / qc
        a2 = gc - gd * gd / (4 * qc * qc)
        a3 = 2 * qc * gb
        a4 = -4 * qc * qc * ga
        a6 = a2 * a4
        self._long = (a1, a2, a3, a4, a6)
        b2 = a1 * a1 + 4 * a2
        b4 = 2 * a4 + a1 * a3
        b6 = a3 * a3 + 4 * a6
        c4 = b2 * b2 - 24 * b4
        c6 = -b2 ** 3 + 36 * b2 * b4 - 216 * b6
        self._b2 = b2
        self.curve = WeierstrassCurve(-27 * c4, -54 * c6)
        self.P = self.forward(p0, q0, s0)
        if self.P.is_infinity:
            raise ValueError("degenerate marked point")

    # long <-> short Weierstrass
    def _to_short(self, X, Y) -> ECPoint:
        a1, _, a3, _, _ = self._long
        return self.curve.point(36 * X + 3 * self._b2, 108 * (2 * Y + a1 * X + a3))

    def _to_long(self, P: ECPoint):
        a1, _, a3, _, _ = self._long
        X = (P.x - 3 * self._b2) / 36
        Y = (P.y / 108 - a1 * X - a3) / 2
        return X, Y

    def forward(self, p, q, S) -> ECPoint:
        p, q, S = Fraction(p), Fraction(q), Fraction(S)
        if S * S != form_eval(self.quartic.F, p, q):
            raise NotOnCurveError("point not on quartic")
        p0, q0, _ = self.marked_point
        Xp = (q0 * p - p0 * q) / self._det
        Zp = (-self._s * p + self._r * q) / self._det
        if Zp == 0:
            raise ExceptionalPointError("quartic point at infinity of the chart")
        x = Xp / Zp
        y = S / (Zp * Zp)
        qc = self._qc
        a1, a2, a3, _, _ = self._long
        if x == 0:
            if y == qc:
                return INFINITY
            return self._to_short(-a2, a1 * a2 - a3)
        ga, gb, gc, gd = self._abcd
        X = (2 * qc * (y + qc) + gd * x) / (x * x)
        Y = (4 * qc * qc * (y + qc) + 2 * qc * (gd * x + gc * x * x) - gd * gd * x * x / (2 * qc)) / x ** 3
        return self._to_short(X, Y)

    def inverse(self, P: ECPoint) -> tuple[Fraction, Fraction, Fraction]:
        if not self.curve.contains(P):
            raise NotOnCurveError("point not on curve")
        p0, q0, _ = self.marked_point
        qc = self._qc
        if P.is_infinity:
            return normalize_quartic_point(p0, q0, qc)
        X, Y = self._to_long(P)
        ga, gb, gc, gd = self._abcd
        if Y != 0:
            x = (2 * qc * (X + gc) - gd * gd / (2 * qc)) / Y
            return self._chart_point(x, X)
        # 0/0 locus: x is a root of (X^2/4q^2 - a) x^2 - (X d/2q^2 + b) x + (d^2/4q^2 - X - c)
        k2 = X * X / (4 * qc * qc) - ga
        k1 = -(X * gd / (2 * qc * qc) + gb)
        k0 = gd * gd / (4 * qc * qc) - X - gc
        roots = []
        if k2 == 0:
            if k1 != 0:
                roots.append(-k0 / k1)
        else:
            disc = is_square(k1 * k1 - 4 * k2 * k0)
            if disc is not None:
                roots.extend({(-k1 + disc) / (2 * k2), (-k1 - disc) / (2 * k2)})
        for x in sorted(roots):
            if x == 0:
                continue
            pt = self._chart_point(x, X)
            if self.forward(*pt) == P:
                return pt
        raise ExceptionalPointError("inverse map undefined at this point")

    def _chart_point(self, x, X):
        p0, q0, _ = self.marked_point
        qc = self._qc
        y = -qc + x * (x * X - self._abcd[3]) / (2 * qc)
        pt = normalize_quartic_point(self._r * x + p0, self._s * x + q0, y)
        assert pt[2] ** 2 == form_eval(self.quartic.F, pt[0], pt[1])
        return pt

    def to_json(self) -> dict:
        return {
            "quartic": self.quartic.to_json(),
            "curve": {"alpha": fmt_rational(self.curve.alpha), "beta": fmt_rational(self.curve.beta)},
            "P": self.P.to_json(),
        }


def quartic_to_weierstrass(Q: QuarticModel) -> QuarticBridge:
    return QuarticBridge(Q)


def bridge_pull_multiple(bridge: QuarticBridge, m: int) -> tuple[Fraction, Fraction, Fraction]:
    """m * P on the Jacobian, pulled back to a quartic point (p_m, q_m, S_m)."""
    if m == 0:
        raise ValueError("m must be nonzero")
    mP = ec_mul(bridge.curve, m, bridge.P)
    try:
        return bridge.inverse(mP)
    except ExceptionalPointError as exc:
        raise ExceptionalPointError(f"exceptional multiple m={m}; retry with next m") from exc
