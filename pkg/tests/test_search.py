import random
from fractions import Fraction

import pytest

from gpforge.exact import is_square
from gpforge.family import closed_form_family
from gpforge.search import (GeneralCurve, HeightBound, gp_search, gp_verify, length10_search,
                            rationals_up_to_height, reduction_curve, verify_ten_points)


@pytest.fixture(scope="module")
def example_curve():
    return GeneralCurve.from_trinomial(closed_form_family(2, 2).curve)


def test_height_enumeration():
    assert rationals_up_to_height(2, signed=False) == [1, Fraction(1, 2), 2]
    qs = rationals_up_to_height(5)
    assert len(qs) == len(set(qs))
    assert all(max(abs(r.numerator), r.denominator) <= 5 for r in qs)
    with pytest.raises(ValueError):
        HeightBound(0)


def test_gp_verify_example_curve(example_curve):
    hits = gp_verify(example_curve, Fraction(1, 512), 4, 1, 8)
    assert [i for i, _, _ in hits] == list(range(1, 9))
    ref = closed_form_family(2, 2).sequence.points
    assert [(x, y) for _, x, y in hits] == list(ref)


def test_gp_verify_cubic():
    assert gp_verify(GeneralCurve([1, 0, 0, 1]), 1, 2, 0, 3) == [(1, 2, 3)]


def test_gp_verify_negative_values():
    assert gp_verify(GeneralCurve([-1, 0, 0, 0, -1]), 1, 2, -5, 5) == []


def test_gp_search_finds_example(example_curve):
    seqs = gp_search(example_curve, HeightBound(4), 8)
    target = closed_form_family(2, 2).sequence.points
    assert any(s.points == target for s in seqs)
    for s in seqs:
        assert abs(s.ratio) > 1
        hits = gp_verify(example_curve, s.base, s.ratio, 0, len(s) - 1)
        assert [(x, y) for _, x, y in hits] == list(s.points)
        # maximal: neither neighbour lifts
        assert is_square(example_curve.f(s.base / s.ratio)) is None
        assert is_square(example_curve.f(s.base * s.ratio ** len(s))) is None


def test_gp_search_dedup_and_empty(example_curve):
    seqs = gp_search(example_curve, HeightBound(4), 3)
    keys = [(s.base, s.ratio) for s in seqs]
    assert len(keys) == len(set(keys))
    assert gp_search(GeneralCurve([-1, 0, 0, 0, -1]), HeightBound(4), 3) == []
    with pytest.raises(ValueError):
        gp_search(example_curve, HeightBound(4), 2)


def test_gp_search_workers_agree(example_curve):
    serial = gp_search(example_curve, HeightBound(3), 4)
    assert gp_search(example_curve, HeightBound(3), 4, workers=2) == serial


def test_reduction_identity():
    C = GeneralCurve([2, -1, 3, 5, 7])
    R1 = reduction_curve(C, 1)
    for x in (Fraction(1, 3), Fraction(-2), Fraction(5, 4)):
        assert R1.f(x) == C.f(x * x)


def test_reduction_example():
    C = GeneralCurve([1, 0, 0, 0, 1])
    R = reduction_curve(C, 2)
    assert R.coefficients == (16, 0, 0, 0, 0, 0, 0, 0, 1)
    assert is_square(R.f(1)) is None
    assert R.f(0) == 1 and C.f(0) == 1


def test_reduction_iff_property():
    rng = random.Random(7)
    C = GeneralCurve([rng.randint(-5, 5) for _ in range(4)] + [9])
    p = Fraction(3, 2)
    R = reduction_curve(C, p)
    for _ in range(50):
        x0 = Fraction(rng.randint(-20, 20), rng.randint(1, 9))
        y0 = is_square(R.f(x0))
        y1 = is_square(C.f(p * x0 * x0))
        assert y0 == y1


def test_reduction_wrong_degree():
    with pytest.raises(ValueError):
        reduction_curve(GeneralCurve([1, 0, 1]), 2)


def test_length10_small_search():
    hits = length10_search(2, HeightBound(6))
    assert all(h.degenerate for h in hits)
    assert all(verify_ten_points(2, h.a, h.b) for h in hits)
    # (1 : 0) sends the chord to (1 : -t : -t^2), where a = 0
    assert any(h.p == 1 and h.q == 0 and h.a == 0 for h in hits)


def test_length10_monotone():
    small = {(h.p, h.q) for h in length10_search(3, HeightBound(5))}
    large = {(h.p, h.q) for h in length10_search(3, HeightBound(9))}
    assert small <= large


def test_general_curve_squarefree():
    assert GeneralCurve([1, 0, 0, 1]).is_squarefree()
    assert not GeneralCurve([1, 0, -2, 0, 1]).is_squarefree()
