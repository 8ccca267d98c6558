from fractions import Fraction

import pytest
from hypothesis import assume, given

from conftest import nonzero_rationals, rationals, ratios
from gpforge.conic import (ConicModel, ConicPoint, conic_param, conic_param_inverse, reflect_point,
                           solve_ab)


def test_solve_ab_by_hand():
    a, b = solve_ab(2, 1, 1)
    assert (a, b) == (Fraction(-1, 15), Fraction(2, 3))
    assert 5 * a + 2 * b == 1 and 65 * a + 8 * b == 1


def test_solve_ab_numeric_example():
    U, V = Fraction(16695041, 270540816), Fraction(5663659, 22545068)
    a, b = solve_ab(4, U, V)
    assert a == Fraction(142608512, 250308167443425)
    assert b == Fraction(62553486161362657, 65873099809751270400)


def test_solve_ab_zero():
    assert solve_ab(2, 0, 0) == (0, 0)


@pytest.mark.parametrize("t", [0, 1, -1])
def test_degenerate_ratio(t):
    with pytest.raises(ValueError, match="degenerate ratio"):
        solve_ab(t, 1, 1)
    with pytest.raises(ValueError, match="degenerate ratio"):
        ConicModel(t)


def test_model_constants():
    m = ConicModel(2)
    assert (m.A, m.B) == (68, 21)
    assert m.contains(m.base_point)


def test_conic_param_chord_example():
    m = ConicModel(2)
    pt = conic_param(m, 1, 1)
    assert (pt.U, pt.V, pt.R) == (5, -42, -188)
    assert -68 * 25 + 21 * 1764 == 35344 == 188 ** 2


def test_tangent_direction_gives_base_point():
    m = ConicModel(2)
    assert conic_param(m, m.B * m.t, m.A).same_as(m.base_point)


@given(ratios)
def test_q_zero_direction(t):
    m = ConicModel(t)
    pt = conic_param(m, 1, 0)
    assert (pt.U, pt.V, pt.R) == (m.A, -t * m.A, -t * t * m.A)
    assert pt.same_as(ConicPoint(1, -t, -t * t))


def test_inverse_examples():
    m = ConicModel(2)
    p, q = conic_param_inverse(m, ConicPoint(5, -42, -188))
    assert p / q == 1
    p, q = conic_param_inverse(m, ConicPoint(1, -2, -4))
    assert q == 0 and p != 0
    with pytest.raises(ValueError, match="tangent direction"):
        conic_param_inverse(m, m.base_point.scaled(3))


@given(ratios, rationals, rationals)
def test_param_on_conic_and_round_trip(t, p, q):
    assume(p or q)
    m = ConicModel(t)
    pt = conic_param(m, p, q)
    assert -m.A * pt.U ** 2 + m.B * pt.V ** 2 == pt.R ** 2
    if not pt.same_as(m.base_point):
        p2, q2 = conic_param_inverse(m, pt)
        assert conic_param(m, p2, q2).same_as(pt)
        assert p * q2 == q * p2


@given(ratios, rationals, rationals)
def test_fifth_point_relation(t, p, q):
    assume(p or q)
    pt = conic_param(ConicModel(t), p, q)
    a, b = solve_ab(t, pt.U, pt.V)
    assert a * (t ** 2 + 1) + b * t == pt.U ** 2
    assert a * (t ** 6 + 1) + b * t ** 3 == pt.V ** 2
    assert a * (t ** 10 + 1) + b * t ** 5 == pt.R ** 2


def test_reflect_examples():
    t, U = Fraction(4), Fraction(16695041, 270540816)
    assert reflect_point(t, U) == (1 / t, U / t)
    assert reflect_point(4, U) == (Fraction(1, 4), Fraction(16695041, 1082163264))
    assert reflect_point(1, Fraction(7, 3)) == (1, Fraction(7, 3))
    with pytest.raises(ZeroDivisionError):
        reflect_point(0, 1)


@given(nonzero_rationals, rationals, rationals, rationals)
def test_reflect_involution_and_curve(x, y, a, b):
    assert reflect_point(*reflect_point(x, y)) == (x, y)
    # build a palindromic conic through (x, y) and check the image lies on it
    a_fit = a
    b_fit = (y * y - a_fit * (x * x + 1)) / x
    x2, y2 = reflect_point(x, y)
    assert y2 * y2 == a_fit * x2 * x2 + b_fit * x2 + a_fit


def test_conic_point_json():
    pt = ConicPoint(Fraction(5), Fraction(-42), Fraction(-188))
    assert ConicPoint.from_json(pt.to_json()) == pt
    assert pt.to_json() == {"U": "5/1", "V": "-42/1", "R": "-188/1"}
