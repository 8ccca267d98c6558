"""Exact rational scalars, binary forms and univariate polynomials.

Rationals are :class:`fractions.Fraction` instances; everything here is
exact and immutable.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Iterable, Sequence

Rational = Fraction

__all__ = [
    "Rational", "rat_normalize", "parse_rational", "fmt_rational", "is_square",
    "BinaryForm", "form_eval", "form_compose_quadratic", "UniPoly",
]


def rat_normalize(num: int, den: int) -> Fraction:
    if den == 0:
        raise ZeroDivisionError("division by zero")
    return Fraction(num, den)


def parse_rational(text) -> Fraction:
    """Parse ``"num/den"`` or an integer string (ints and Fractions pass through)."""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int):
        return Fraction(text)
    s = str(text).strip()
    if "/" in s:
        num, den = s.split("/", 1)
        return rat_normalize(int(num), int(den))
    return Fraction(int(s))


def fmt_rational(r) -> str:
    """Canonical ``num/den`` string; zero is ``0/1``."""
    r = Fraction(r)
    return f"{r.numerator}/{r.denominator}"


def _isqrt_exact(n: int) -> int | None:
    if n < 0:
        return None
    s = isqrt(n)
    return s if s * s == n else None


def is_square(r) -> Fraction | None:
    """Non-negative rational square root of ``r``, or ``None``.

    Numerator and denominator of a reduced fraction are coprime, so ``r`` is a
    rational square iff both are integer squares.
    """
    r = Fraction(r)
    sn = _isqrt_exact(r.numerator)
    if sn is None:
        return None
    sd = _isqrt_exact(r.denominator)
    if sd is None:
        return None
    return Fraction(sn, sd)


@dataclass(frozen=True)
class BinaryForm:
    """Homogeneous form sum(c[i] * p**(deg-i) * q**i), descending powers of p."""

    degree: int
    coefficients: tuple

    def __post_init__(self):
        coeffs = tuple(Fraction(c) for c in self.coefficients)
        if self.degree < 0 or len(coeffs) != self.degree + 1:
            raise ValueError(
                f"degree {self.degree} form needs {self.degree + 1} coefficients, got {len(coeffs)}")
        object.__setattr__(self, "coefficients", coeffs)

    @classmethod
    def of(cls, coeffs: Iterable) -> "BinaryForm":
        coeffs = tuple(coeffs)
        return cls(len(coeffs) - 1, coeffs)

    def __call__(self, p, q) -> Fraction:
        return form_eval(self, p, q)

    def __add__(self, other: "BinaryForm") -> "BinaryForm":
        if self.degree != other.degree:
            raise ValueError("cannot add forms of different degree")
        return BinaryForm(self.degree, [x + y for x, y in zip(self.coefficients, other.coefficients)])

    def __mul__(self, other) -> "BinaryForm":
        if not isinstance(other, BinaryForm):
            c = Fraction(other)
            return BinaryForm(self.degree, [c * x for x in self.coefficients])
        out = [Fraction(0)] * (self.degree + other.degree + 1)
        for i, x in enumerate(self.coefficients):
            if x:
                for j, y in enumerate(other.coefficients):
                    out[i + j] += x * y
        return BinaryForm(self.degree + other.degree, out)

    __rmul__ = __mul__

    def substitute(self, alpha, beta, gamma, delta) -> "BinaryForm":
        """Return F(alpha*p + beta*q, gamma*p + delta*q)."""
        lp = BinaryForm(1, (alpha, beta))
        lq = BinaryForm(1, (gamma, delta))
        d = self.degree
        pows_p = [BinaryForm(0, (1,))]
        pows_q = [BinaryForm(0, (1,))]
        for _ in range(d):
            pows_p.append(pows_p[-1] * lp)
            pows_q.append(pows_q[-1] * lq)
        out = BinaryForm(d, [0] * (d + 1))
        for i, c in enumerate(self.coefficients):
            if c:
                out = out + (pows_p[d - i] * pows_q[i]) * c
        return out

    def to_json(self) -> list:
        return [fmt_rational(c) for c in self.coefficients]

    @classmethod
    def from_json(cls, data: Sequence) -> "BinaryForm":
        return cls.of(parse_rational(c) for c in data)


def form_eval(F: BinaryForm, p, q) -> Fraction:
    p, q = Fraction(p), Fraction(q)
    d = F.degree
    total = Fraction(0)
    # Horner in the ratio would need q != 0, so keep explicit powers.
    pp = [Fraction(1)]
    qq = [Fraction(1)]
    for _ in range(d):
        pp.append(pp[-1] * p)
        qq.append(qq[-1] * q)
    for i, c in enumerate(F.coefficients):
        if c:
            total += c * pp[d - i] * qq[i]
    return total


def form_compose_quadratic(outer, X: BinaryForm, Y: BinaryForm) -> BinaryForm:
    """alpha*X**2 + beta*X*Y + gamma*Y**2 for quadratic forms X and Y."""
    if X.degree != 2 or Y.degree != 2:
        raise ValueError("form_compose_quadratic needs two degree-2 forms")
    alpha, beta, gamma = (Fraction(c) for c in outer)
    return (X * X) * alpha + (X * Y) * beta + (Y * Y) * gamma


class UniPoly:
    """Dense univariate polynomial over Q, ascending coefficients."""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Iterable = ()):
        cs = [Fraction(c) for c in coefficients]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coefficients = tuple(cs)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1  # -1 for the zero polynomial

    def __bool__(self):
        return bool(self.coefficients)

    def __eq__(self, other):
        return isinstance(other, UniPoly) and self.coefficients == other.coefficients

    def __hash__(self):
        return hash(self.coefficients)

    def __repr__(self):
        return f"UniPoly({[fmt_rational(c) for c in self.coefficients]})"

    def __call__(self, x) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def derivative(self) -> "UniPoly":
        return UniPoly(i * c for i, c in enumerate(self.coefficients) if i)

    def monic(self) -> "UniPoly":
        if not self:
            return self
        lead = self.coefficients[-1]
        return UniPoly(c / lead for c in self.coefficients)

    def divmod(self, other: "UniPoly"):
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coefficients)
        dq = other.degree
        lead = other.coefficients[-1]
        quot = [Fraction(0)] * max(len(rem) - dq, 0)
        while len(rem) - 1 >= dq and rem:
            k = len(rem) - 1 - dq
            c = rem[-1] / lead
            quot[k] = c
            for i, oc in enumerate(other.coefficients):
                rem[k + i] -= c * oc
            while rem and rem[-1] == 0:
                rem.pop()
        return UniPoly(quot), UniPoly(rem)

    def gcd(self, other: "UniPoly") -> "UniPoly":
        a, b = self, other
        while b:
            a, b = b, a.divmod(b)[1]
        return a.monic()
