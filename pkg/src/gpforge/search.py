"""Bounded-height searches: progressions on y^2 = f(x), the degree-8 reduction
curve, and simultaneous squares for a ten-term extension."""
from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .conic import ConicModel, conic_param, solve_ab
from .exact import UniPoly, fmt_rational, form_eval, is_square, parse_rational
from .family import GPSequence, TrinomialCurve, smoothness_check
from .quartic import ninth_condition, seventh_condition

log = logging.getLogger(__name__)

RUN_CAP = 40


@dataclass(frozen=True)
class GeneralCurve:
    """y^2 = f(x), coefficients in descending powers of x."""

    coefficients: tuple

    def __post_init__(self):
        cs = tuple(Fraction(c) for c in self.coefficients)
        if not any(cs):
            raise ValueError("f must be nonzero")
        object.__setattr__(self, "coefficients", cs)

    @property
    def degree(self) -> int:
        for k, c in enumerate(self.coefficients):
            if c:
                return len(self.coefficients) - 1 - k
        return -1

    def f(self, x) -> Fraction:
        acc = Fraction(0)
        for c in self.coefficients:
            acc = acc * x + c
        return acc

    def is_squarefree(self) -> bool:
        poly = UniPoly(reversed(self.coefficients))
        return poly.gcd(poly.derivative()).degree == 0

    @classmethod
    def from_trinomial(cls, curve: TrinomialCurve) -> "GeneralCurve":
        return cls(curve.general_coefficients())

    def to_json(self) -> list:
        return [fmt_rational(c) for c in self.coefficients]


@dataclass(frozen=True)
class HeightBound:
    H: int

    def __post_init__(self):
        if self.H < 1:
            raise ValueError("height bound must be >= 1")


def rationals_up_to_height(H: int, signed: bool = True, nonzero: bool = True):
    """Reduced num/den with max(|num|, den) <= H, ordered by height then value."""
    out = []
    if not nonzero:
        out.append(Fraction(0))
    for h in range(1, H + 1):
        level = set()
        for den in range(1, h + 1):
            for num in ((h,) if den < h else range(1, h + 1)):
                if gcd(num, den) == 1:
                    level.add(Fraction(num, den))
        if signed:
            level |= {-r for r in level}
        out.extend(sorted(level))
    return out


def gp_verify(C: GeneralCurve, p, tau, i_min: int, i_max: int) -> list:
    """Indices i in [i_min, i_max] with f(p tau^i) a rational square."""
    p, tau = Fraction(p), Fraction(tau)
    if p == 0 or tau in (0, 1, -1):
        raise ValueError("degenerate progression")
    hits = []
    for i in range(i_min, i_max + 1):
        x = p * tau ** i
        y = is_square(C.f(x))
        if y is not None:
            hits.append((i, x, y))
    return hits


def _runs_for_ratio(args):
    C, tau, seeds, min_len = args
    cache = {}

    def root(x):
        if x not in cache:
            cache[x] = is_square(C.f(x))
        return cache[x]

    found = {}
    for p in seeds:
        if root(p) is None:
            continue
        lo = 0
        while lo > -RUN_CAP and root(p * tau ** (lo - 1)) is not None:
            lo -= 1
        hi = 0
        while hi < RUN_CAP and root(p * tau ** (hi + 1)) is not None:
            hi += 1
        length = hi - lo + 1
        start = p * tau ** lo
        if length >= min_len and start not in found:
            if lo == -RUN_CAP or hi == RUN_CAP:
                log.warning("run at p=%s tau=%s reached the extension cap", start, tau)
            found[start] = length
    return [(start, tau, length) for start, length in found.items()]


def gp_search(C: GeneralCurve, bound: HeightBound, min_len: int, workers: int = 1) -> list:
    """Maximal progressions of length >= min_len seeded at heights <= bound.H.

    Each result is canonical: ratio with |tau| > 1, base at the first point.
    """
    if min_len < 3:
        raise ValueError("min_len must be >= 3")
    qs = rationals_up_to_height(bound.H)
    taus = [r for r in qs if abs(r) > 1]
    jobs = [(C, tau, qs, min_len) for tau in taus]
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            chunks = list(pool.map(_runs_for_ratio, jobs))
    else:
        chunks = [_runs_for_ratio(j) for j in jobs]
    runs = sorted({r for chunk in chunks for r in chunk}, key=lambda r: (-r[2], abs(r[1]), r[1], r[0]))
    out = []
    for start, tau, length in runs:
        hits = gp_verify(C, start, tau, 0, length - 1)
        assert len(hits) == length
        out.append(GPSequence(start, tau, [(x, y) for _, x, y in hits]))
    return out


def reduction_curve(C: GeneralCurve, p) -> GeneralCurve:
    """y^2 = a0 p^4 x^8 + a1 p^3 x^6 + a2 p^2 x^4 + a3 p x^2 + a4 for a quartic C."""
    if len(C.coefficients) != 5:
        raise ValueError("reduction curve needs a quartic (five coefficients)")
    p = Fraction(p)
    out = []
    for k, c in enumerate(C.coefficients):
        out.append(c * p ** (4 - k))
        if k < 4:
            out.append(Fraction(0))
    return GeneralCurve(out)


@dataclass(frozen=True)
class Length10Hit:
    p: Fraction
    q: Fraction
    S: Fraction
    S9: Fraction
    a: Fraction
    b: Fraction
    degenerate: bool

    def to_json(self) -> dict:
        d = {k: fmt_rational(getattr(self, k)) for k in ("p", "q", "S", "S9", "a", "b")}
        d["S_prime"] = d.pop("S9")
        d["degenerate"] = self.degenerate
        return d


def _projective_pairs(H: int):
    yield Fraction(1), Fraction(0)
    for r in rationals_up_to_height(H, signed=True, nonzero=False):
        yield r, Fraction(1)


def verify_ten_points(t, a, b) -> bool:
    """All of w = t^{+-1, +-3, ..., +-9} lift to y^2 = a w^2 + b w + a."""
    curve = TrinomialCurve(1, a, b)
    t = Fraction(t)
    return all(is_square(curve.f(t ** i)) is not None
               for i in (-9, -7, -5, -3, -1, 1, 3, 5, 7, 9))


def length10_search(t, bound: HeightBound) -> list:
    """(p : q) of height <= H where the 7th- and 9th-point quartics are both squares.

    Degenerate members (a = 0 or b^2 = 4a^2) satisfy every square condition
    trivially; they are returned flagged rather than dropped.
    """
    t = Fraction(t)
    F7, F9 = seventh_condition(t), ninth_condition(t)
    model = ConicModel(t)
    hits = []
    for p, q in _projective_pairs(bound.H):
        s7 = is_square(form_eval(F7.F, p, q))
        if s7 is None:
            continue
        s9 = is_square(form_eval(F9.F, p, q))
        if s9 is None:
            continue
        pt = conic_param(model, p, q)
        a, b = solve_ab(t, pt.U, pt.V)
        curve = TrinomialCurve(1, a, b)
        degenerate = not smoothness_check(curve)
        if not verify_ten_points(t, a, b):
            raise AssertionError(f"length-10 hit at ({p}:{q}) fails end-to-end verification")
        hits.append(Length10Hit(p, q, s7, s9, a, b, degenerate))
    return hits


def parse_general_curve(spec: str) -> GeneralCurve:
    """Comma-separated descending coefficients."""
    return GeneralCurve([parse_rational(c) for c in spec.split(",")])
