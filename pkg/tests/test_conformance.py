import json
from fractions import Fraction

import pytest

from gpforge import printed
from gpforge.conformance import CONFIRMED, FORMULA_IDS, REFUTED, audit, closed_forms_hold_at

T_SAMPLES = [2, 3, Fraction(5, 2)]


@pytest.fixture(scope="module")
def report():
    return audit(T_SAMPLES)


def test_all_formulas_reported(report):
    assert [e.id for e in report.entries] == list(FORMULA_IDS)


def test_eq1_a_refuted_by_hand_witness(report):
    e = report["EQ1_A"]
    assert e.status == REFUTED
    w = e.witness
    assert (w["t"], w["U"], w["V"]) == (2, 1, 1)
    assert w["a_printed"] == Fraction(1, 15)
    assert w["a(t^2+1)+bt"] == Fraction(5, 3) and w["U^2"] == 1
    assert w["a_solved"] == Fraction(-1, 15)


def test_eq1_b_confirmed(report):
    assert report["EQ1_B"].status == CONFIRMED


def test_eq2_refuted_with_witness(report):
    e = report["EQ2_PARAM"]
    assert e.status == REFUTED
    assert (e.witness["U"], e.witness["V"], e.witness["R"]) == (5, 21, 94)
    assert e.witness["-AU^2+BV^2"] == 7561 and e.witness["R^2"] == 8836


def test_printed_eq2_directly():
    U, V, R = printed.eq2_param(Fraction(2), 1, 1)
    assert -68 * U * U + 21 * V * V == 7561 != R * R


def test_jacobian_data(report):
    for fid in ("EQ3_QUARTIC", "THM3_POINT_P", "THM3_E_POINT", "THM3_G2G3"):
        assert report[fid].status == CONFIRMED, fid
    assert all(row["nontorsion"] for row in report["THM3_E_POINT"].witness["per_t"])


def test_closed_forms_confirmed(report):
    e = report["S4_CLOSED_FORMS"]
    assert e.status == CONFIRMED
    assert e.witness["golden_match"]
    # sign convention: the printed expression at x = T is negative at T = 2, n = 2
    assert e.witness["printed_y_at_T"] == -Fraction(16695041, 270540816)


def test_closed_form_identity_point():
    assert closed_forms_hold_at(Fraction(7, 3))


def test_deterministic():
    a = json.dumps(audit(T_SAMPLES, seed=3).to_json(), sort_keys=True)
    b = json.dumps(audit(T_SAMPLES, seed=3).to_json(), sort_keys=True)
    assert a == b


def test_refuted_entries_carry_witness(report):
    for e in report.entries:
        if e.status == REFUTED:
            assert e.witness


def test_table(report):
    text = report.table()
    assert "EQ1_A" in text and "REFUTED" in text


def test_degenerate_sample_rejected():
    with pytest.raises(ValueError):
        audit([1])
