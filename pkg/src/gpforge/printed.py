"""Formulas as published, transcribed verbatim for auditing.

Nothing in the construction pipeline reads these; see :mod:`gpforge.conformance`.
"""
from __future__ import annotations

from fractions import Fraction

from .exact import BinaryForm


def _poly(x, coeffs) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def eq1_a(t, U, V) -> Fraction:
    t2 = t * t
    return (t2 * U * U - V * V) / ((t2 - 1) ** 2 * (t2 + 1))


def eq1_b(t, U, V) -> Fraction:
    t2 = t * t
    return ((t2 * t2 - t2 + 1) * U * U - V * V) / (t * (t2 - 1) ** 2)


def eq2_param(t, p, q) -> tuple[Fraction, Fraction, Fraction]:
    t2 = t * t
    A1, B1 = 1 + t2 * t2, 1 + t2 + t2 * t2
    U = t2 * A1 * p * p + B1 * q * q - 2 * t * B1 * p * q
    V = t2 * A1 * p * p + B1 * q * q - 2 * t * A1 * p * q
    R = t2 * t * A1 * p * p - t * B1 * q * q
    return U, V, R


def eq3_quartic(t) -> BinaryForm:
    t2 = t * t
    return BinaryForm.of([
        t ** 8 * (1 + t2 * t2) ** 2,
        4 * t ** 5 * _poly(t2, (1, 0, 2, 0, 2, 0, 1)),
        -2 * t ** 4 * _poly(t2, (4, 3, 9, 4, 9, 3, 4)),
        4 * t ** 3 * (1 - t2 + t2 * t2) * (1 + t2 + t2 * t2) ** 2,
        t ** 4 * (1 + t2 + t2 * t2) ** 2,
    ])


def thm3_point(t) -> tuple[Fraction, Fraction, Fraction]:
    t2 = t * t
    p = -t / (1 - t2 + t2 * t2)
    q = 1 - _poly(t2, (3, 2, 4, 2, 3)) / (2 * (1 + t ** 4 + t ** 8))
    S = (t2 * _poly(t2, (3, 4, 8, 8, 10, 8, 8, 4, 3))
         / (4 * (1 - t2 + t2 * t2) ** 2 * (1 + t2 + t2 * t2)))
    return p, q, S


def thm3_g2g3(t) -> tuple[Fraction, Fraction]:
    t2 = t * t
    B1 = 1 + t2 + t2 * t2
    g2 = Fraction(4, 3) * t ** 8 * B1 ** 2 * _poly(t2, (1, 1, 4, 1, 7, 1, 4, 1, 1))
    g3 = -Fraction(4, 27) * t ** 12 * B1 ** 4 * _poly(t2, (2, 1, 3, 15, -9, 30, -9, 15, 3, 1, 2))
    return g2, g3


def thm3_e_point(t) -> tuple[Fraction, Fraction]:
    t2 = t * t
    B1 = 1 + t2 + t2 * t2
    X = -t ** 4 * B1 ** 2 * _poly(t2, (2, -5, -2, -2, -2, -5, 2)) / (3 * (1 + t2) ** 4)
    Y = 4 * t ** 7 * B1 ** 2 / (1 + t2) ** 6 * _poly(t2, (1, 1, 2, 2, 3, 2, 3, 2, 2, 1, 1))
    return X, Y


#: numeric example at T = 2, n = 2
GOLDEN_T = Fraction(2)
GOLDEN_N = 2
GOLDEN_A = Fraction(142608512, 250308167443425)
GOLDEN_B = Fraction(62553486161362657, 65873099809751270400)
GOLDEN_POINTS = (
    (Fraction(1, 2 ** 7), Fraction(54871363, 69258448896)),
    (Fraction(1, 2 ** 5), Fraction(21185345, 17314612224)),
    (Fraction(1, 2 ** 3), Fraction(5663659, 1442884352)),
    (Fraction(1, 2), Fraction(16695041, 1082163264)),
    (Fraction(2), Fraction(16695041, 270540816)),
    (Fraction(2 ** 3), Fraction(5663659, 22545068)),
    (Fraction(2 ** 5), Fraction(21185345, 16908801)),
    (Fraction(2 ** 7), Fraction(219485452, 16908801)),
)

DESCRIPTIONS = {
    "EQ1_A": "printed closed form for a in terms of (t, U, V)",
    "EQ1_B": "printed closed form for b in terms of (t, U, V)",
    "EQ2_PARAM": "printed quadratic parametrization (U, V, R) of the fifth-point conic",
    "EQ3_QUARTIC": "printed seventh-point quartic H_t(p, q)",
    "THM3_POINT_P": "printed rational point (p : q : S) on H_t",
    "THM3_E_POINT": "printed point (X_P, Y_P) on the Jacobian",
    "THM3_G2G3": "printed Jacobian invariants g2, g3",
    "S4_CLOSED_FORMS": "printed closed-form family a(T), b(T), eight y(T) and the T=2, n=2 example",
}
