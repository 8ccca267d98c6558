"""Curves y^2 = a x^{2n} + b x^n + a carrying eight rational points at
x = T^{+-1}, T^{+-3}, T^{+-5}, T^{+-7}.

Two routes produce them: direct evaluation of the published closed forms
(:func:`closed_form_family`), and the elliptic pipeline that walks multiples
of a point on the Jacobian of the seventh-point quartic (:func:`gp8_family`).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import lcm

from .conic import ConicModel, ConicPoint, conic_param, conic_param_inverse, reflect_point, solve_ab
from .elliptic import (ExceptionalPointError, QuarticBridge, bridge_pull_multiple,
                       normalize_quartic_point)
from .exact import UniPoly, fmt_rational, parse_rational
from .quartic import seventh_condition

DEFAULT_M_CAP = 5
ODD_EXPONENTS = (1, 3, 5, 7)


class DegenerateMemberError(ValueError):
    pass


class PublishedFormulaViolation(AssertionError):
    pass


@dataclass(frozen=True)
class TrinomialCurve:
    """y^2 = a x^{2n} + b x^n + a."""

    n: int
    a: Fraction
    b: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))
        if self.n < 1:
            raise ValueError("n must be positive")

    def f(self, x) -> Fraction:
        w = Fraction(x) ** self.n
        return self.a * w * w + self.b * w + self.a

    def contains(self, x, y) -> bool:
        return Fraction(y) ** 2 == self.f(x)

    def poly(self) -> UniPoly:
        c = [Fraction(0)] * (2 * self.n + 1)
        c[0] = self.a
        c[self.n] += self.b
        c[2 * self.n] += self.a
        return UniPoly(c)

    def general_coefficients(self) -> list:
        """Descending coefficients of f, as used by :class:`search.GeneralCurve`."""
        return list(reversed(self.poly().coefficients)) if self.a else []

    def to_json(self) -> dict:
        return {"n": self.n, "a": fmt_rational(self.a), "b": fmt_rational(self.b)}

    @classmethod
    def from_json(cls, d) -> "TrinomialCurve":
        return cls(int(d["n"]), parse_rational(d["a"]), parse_rational(d["b"]))


def smoothness_check(curve: TrinomialCurve) -> bool:
    """f squarefree, decided both from the w-quadratic and from gcd(f, f')."""
    by_disc = curve.a != 0 and curve.b ** 2 != 4 * curve.a ** 2
    f = curve.poly()
    by_gcd = curve.a != 0 and f.gcd(f.derivative()).degree == 0
    assert by_disc == by_gcd, "smoothness tests disagree"
    return by_disc


@dataclass(frozen=True)
class GPSequence:
    """Points whose x-coordinates are base * ratio**i for consecutive i."""

    base: Fraction
    ratio: Fraction
    points: tuple
    start: int = 0

    def __post_init__(self):
        base, ratio = Fraction(self.base), Fraction(self.ratio)
        if base == 0 or ratio in (0, 1, -1):
            raise ValueError("degenerate geometric progression")
        pts = tuple((Fraction(x), Fraction(y)) for x, y in self.points)
        for k, (x, _) in enumerate(pts):
            if x != base * ratio ** (self.start + k):
                raise ValueError(f"x-coordinate {x} breaks the progression")
        if len(set(pts)) != len(pts):
            raise ValueError("repeated point in progression")
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "ratio", ratio)
        object.__setattr__(self, "points", pts)

    def __len__(self):
        return len(self.points)

    def verify(self, f) -> bool:
        """``f`` maps x to the right-hand side of y^2 = f(x)."""
        return all(y * y == f(x) for x, y in self.points)

    def to_json(self) -> dict:
        return {
            "base": fmt_rational(self.base),
            "ratio": fmt_rational(self.ratio),
            "start": self.start,
            "points": [{"x": fmt_rational(x), "y": fmt_rational(y)} for x, y in self.points],
        }


@dataclass(frozen=True)
class FamilyRecord:
    T: Fraction
    n: int
    m: int
    curve: TrinomialCurve
    sequence: GPSequence
    provenance: dict = field(default_factory=dict)

    def __post_init__(self):
        if len(self.sequence) != 8 or not self.sequence.verify(self.curve.f):
            raise AssertionError("family record fails verification")

    def to_json(self) -> dict:
        prov = {k: (fmt_rational(v) if isinstance(v, Fraction) else v)
                for k, v in self.provenance.items()}
        return {
            "T": fmt_rational(self.T),
            "n": self.n,
            "m": self.m,
            "curve": self.curve.to_json(),
            "points": [{"x": fmt_rational(x), "y": fmt_rational(y)} for x, y in self.sequence.points],
            "provenance": prov,
        }


def _check_T(T, n) -> Fraction:
    T = Fraction(T)
    if T in (0, 1, -1):
        raise ValueError(f"degenerate ratio T={T}")
    if n < 1:
        raise ValueError("n must be positive")
    return T


def _poly(w, coeffs) -> Fraction:
    # coeffs ascending in w
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * w + c
    return acc


def closed_form_ab(w) -> tuple[Fraction, Fraction]:
    """Published a, b as functions of w = T^n."""
    w = Fraction(w)
    w2 = w * w
    a = (w2 * w2 * (1 + w2) * (1 + w2 ** 4)
         / (2 * (1 + w2 * w2) * _poly(w2, (-1, 1, -1, 1, -1, 1)) ** 2))
    b_num = _poly(w2, (1, -2, -1, -12, -3, -14, -13, -40, -13, -14, -3, -12, -1, -2, 1))
    b_den = (16 * w ** 3 * (w2 - 1) ** 2 * (1 + w2 * w2) ** 2
             * _poly(w2, (1, -1, 1)) ** 2 * _poly(w2, (1, 1, 1)) ** 2)
    return a, b_num / b_den


def closed_form_y(w, i: int) -> Fraction:
    """Published y-coordinate at x = T^i (i odd, |i| <= 7) with w = T^n."""
    w = Fraction(w)
    w2 = w * w
    D = _poly(w2, (1, 0, 2, 0, 2, 0, 1))
    p7 = _poly(w2, (3, 4, 5, 4, 5, 4, 3))
    p5 = _poly(w2, (1, 4, 3, 4, 3, 4, 1))
    p3 = _poly(w2, (1, 0, 3, 4, 3, 0, 1))
    p1 = _poly(w2, (-1, 0, 1, 4, 1, 0, -1))
    table = {
        -7: p7 / (4 * w ** 5 * D),
        -5: p5 / (4 * w ** 4 * D),
        -3: p3 / (4 * w ** 3 * D),
        -1: p1 / (4 * w2 * D),
        1: p1 / (4 * w * D),
        3: p3 / (4 * D),
        5: w * p5 / (4 * D),
        7: w2 * p7 / (4 * D),
    }
    return table[i]


def closed_form_family(T, n: int) -> FamilyRecord:
    """Evaluate the published closed forms at (T, n) and check all eight points.

    y-values are reported as non-negative roots; the printed expression at
    x = T^{+-1} is negative for |T^n| > 1.
    """
    T = _check_T(T, n)
    w = T ** n
    a, b = closed_form_ab(w)
    curve = TrinomialCurve(n, a, b)
    points = [(T ** i, abs(closed_form_y(w, i))) for i in (-7, -5, -3, -1, 1, 3, 5, 7)]
    for x, y in points:
        if not curve.contains(x, y):
            raise PublishedFormulaViolation(f"published formula violation at x={x}")
    seq = GPSequence(T ** -9, T * T, points, start=1)
    return FamilyRecord(T, n, 1, curve, seq, {"t": w, "source": "closed_form"})


@dataclass(frozen=True)
class _Pipeline:
    t: Fraction
    model: ConicModel
    bridge: QuarticBridge
    scale: Fraction          # conic_param(p0, q0) = scale * (U0, V0, R0)
    clearing_root: Fraction
    base: tuple


@lru_cache(maxsize=64)
def _pipeline(T: Fraction, n: int) -> _Pipeline:
    t = T ** n
    model = ConicModel(t)
    U0, V0, R0, S0 = (closed_form_y(t, i) for i in ODD_EXPONENTS)
    base = ConicPoint(U0, V0, R0)
    if not model.contains(base):
        raise PublishedFormulaViolation("imported base solution is not on the conic")
    p0, q0 = conic_param_inverse(model, base)
    p0, q0, _ = normalize_quartic_point(p0, q0, 0)
    image = conic_param(model, p0, q0)
    if not image.same_as(base):
        raise AssertionError("chord inverse failed on the base solution")
    scale = next(u / v for u, v in zip((image.U, image.V, image.R), (U0, V0, R0)) if v)
    quartic = seventh_condition(t)
    root = quartic.clearing_root
    s_marked = root * scale * S0
    bridge = QuarticBridge(quartic.with_marked_point(p0, q0, s_marked))
    return _Pipeline(t, model, bridge, scale, root, (U0, V0, R0, S0))


def jacobian_bridge(T, n: int) -> QuarticBridge:
    """The seventh-point quartic at t = T^n, pointed at the imported base solution."""
    return _pipeline(_check_T(T, n), n).bridge


def gp8_family(T, n: int, m: int, m_cap: int = DEFAULT_M_CAP) -> FamilyRecord:
    """Curve number ``m`` of the family with ratio T at exponent n.

    m = 1 reproduces :func:`closed_form_family`.  Raises
    :class:`~gpforge.elliptic.ExceptionalPointError` when m*P has no quartic
    preimage and :class:`DegenerateMemberError` for singular members.
    """
    T = _check_T(T, n)
    if n < 2:
        raise ValueError("family members need n >= 2")
    if m == 0 or abs(m) > m_cap:
        raise ValueError(f"m must be nonzero with |m| <= {m_cap}")
    pipe = _pipeline(T, n)
    t = pipe.t
    pm, qm, Sm = bridge_pull_multiple(pipe.bridge, m)
    conic_pt = conic_param(pipe.model, pm, qm).scaled(1 / pipe.scale)
    U, V, R = conic_pt.U, conic_pt.V, conic_pt.R
    S = Sm / (pipe.clearing_root * pipe.scale)
    a, b = solve_ab(t, U, V)
    curve = TrinomialCurve(n, a, b)
    if not smoothness_check(curve):
        raise DegenerateMemberError(f"degenerate member at m={m}: a={a}, b={b}")

    ys = dict(zip(ODD_EXPONENTS, (abs(U), abs(V), abs(R), abs(S))))
    pts = {}
    for i, y in ys.items():
        w = t ** i
        pts[i] = (T ** i, y)
        _, y_ref = reflect_point(w, y)
        pts[-i] = (T ** -i, abs(y_ref))
    points = [pts[i] for i in sorted(pts)]
    for x, y in points:
        if not curve.contains(x, y):
            raise AssertionError(f"pipeline produced an off-curve point at x={x}")
    seq = GPSequence(T ** -9, T * T, points, start=1)
    prov = {"t": t, "U": U, "V": V, "R": R, "S": S, "p": pm, "q": qm, "S_quartic": Sm}
    return FamilyRecord(T, n, m, curve, seq, prov)


def generate_family(T, n: int, ms, m_cap: int = DEFAULT_M_CAP):
    """Records for each m in ``ms``; exceptional and degenerate members are
    returned as ``(m, reason)`` skips instead of raising."""
    records, skipped = [], []
    for m in ms:
        try:
            records.append(gp8_family(T, n, m, m_cap=m_cap))
        except (ExceptionalPointError, DegenerateMemberError) as exc:
            skipped.append((m, str(exc)))
    return records, skipped


def integer_model(record: FamilyRecord) -> tuple[Fraction, TrinomialCurve, list]:
    """Scale y by c = lcm(den a, den b) so the curve has integer coefficients."""
    c = Fraction(lcm(record.curve.a.denominator, record.curve.b.denominator))
    curve = TrinomialCurve(record.curve.n, record.curve.a * c * c, record.curve.b * c * c)
    points = [(x, y * c) for x, y in record.sequence.points]
    assert all(curve.contains(x, y) for x, y in points)
    return c, curve, points
