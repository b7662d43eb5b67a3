import csv
import io
import json
from fractions import Fraction

import pytest

from twistlattice.algebra import LaurentPoly, RationalPoly
from twistlattice.bracket import jones_kauffman, vk
from twistlattice.experiments import (
    ExperimentReport,
    closed_form,
    predicted_coefficients,
    derivative_table_csv,
    explicit_f,
    explicit_vk,
    f_table_csv,
    find_shift,
    interpolants,
    nonvanishing_evidence,
    verify_leading_coefficients,
    verify_explicit_formulas,
    verify_finite_type,
    verify_closed_forms,
    verify_inductive_relation,
    verify_monotonicity,
)
from twistlattice.twist import fractional_family

A = LaurentPoly.monomial


def test_closed_form_small_values():
    assert closed_form(0) == 1
    assert closed_form(-1) == 1
    assert closed_form(2) == A(-4) + A(-6) - A(-10)
    with pytest.raises(ValueError):
        closed_form(-2)
    with pytest.raises(ValueError):
        closed_form(-3)


def test_explicit_f_matches_trefoil():
    assert explicit_f(3) == A(-4) + A(-12) - A(-16)
    with pytest.raises(ValueError):
        explicit_f(1)


def test_explicit_vk_hand_value():
    # n = 2: f = A^-4 + A^-6 - A^-10, v_2 = (16 + 36 - 100) / 2
    assert explicit_vk(2, 2) == -24
    assert vk(fractional_family(2), 2) == -24


def test_report_verdicts():
    rep = ExperimentReport("demo", {"x": 1})
    assert rep.verdict == "fail"  # nothing checked
    rep.add("one", 1, 1)
    assert rep.verdict == "pass"
    rep.add("two", Fraction(1, 2), Fraction(1, 3))
    assert rep.verdict == "fail"
    rep.status = "inconclusive"
    assert rep.verdict == "inconclusive"


def test_report_serialization():
    rep = ExperimentReport("demo", {"k": 2})
    rep.add("poly", A(-4), A(-4), n=2)
    rep.add("frac", Fraction(-1, 3), Fraction(-1, 3))
    data = json.loads(rep.to_json())
    assert data["verdict"] == "pass"
    assert data["records"][0]["computed"] == [[-4, 1]]
    assert data["records"][1]["expected"] == "-1/3"
    rows = list(csv.reader(io.StringIO(rep.to_csv())))
    assert rows[0] == ["case", "inputs", "expected", "computed", "pass"]
    assert rows[2][2] == '"-1/3"'
    assert rep.to_text().endswith("verdict: pass")


def test_report_output_is_deterministic():
    assert verify_closed_forms(6).to_json() == verify_closed_forms(6).to_json()


def test_closed_forms():
    rep = verify_closed_forms(14)
    assert rep.verdict == "pass"
    assert sum(r["case"].startswith("recursion") for r in rep.records) == 14


def test_inductive_relation():
    assert verify_inductive_relation(5, 10).verdict == "pass"


@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_leading_coefficients(k):
    assert verify_leading_coefficients(k).verdict == "pass"


def test_k2_fits():
    p, q = interpolants(2)
    assert p == RationalPoly([0, 0, -6])
    assert q == RationalPoly([6, 0, -6])
    assert predicted_coefficients(2)["lead"] == -6


@pytest.mark.parametrize("k", [2, 3, 4])
def test_explicit_formulas(k):
    assert verify_explicit_formulas(k, 12).verdict == "pass"


def test_monotonicity_values():
    rep = verify_monotonicity(2, 5)
    assert rep.verdict == "pass"
    assert rep.extra["values"] == [0, 0, -24, -48, -96, -144]


@pytest.mark.parametrize("k", [3, 4])
def test_monotonicity(k):
    assert verify_monotonicity(k, 12).verdict == "pass"


def test_find_shift():
    p, q = interpolants(3)
    N, s = find_shift(p, q, 9)
    assert (N, s) == (2, 1)
    assert find_shift(RationalPoly([1]), RationalPoly([1]), 5) == (None, 0)


@pytest.mark.parametrize("k, shift, dominant", [(2, 0, "odd"), (3, 2, "even"), (4, 2, "odd")])
def test_nonvanishing_evidence(k, shift, dominant):
    rep = nonvanishing_evidence(k)
    assert rep.verdict == "pass"
    assert rep.extra["shift"] == shift
    assert rep.extra["dominant"] == dominant


def test_nonvanishing_k1_inapplicable():
    rep = nonvanishing_evidence(1)
    assert rep.verdict == "inapplicable"
    assert all(r["computed"] == 0 for r in rep.records)


def test_nonvanishing_inconclusive_when_no_shift():
    rep = nonvanishing_evidence(2, search_bound=-1)
    assert rep.verdict == "inconclusive"


def test_finite_type():
    assert verify_finite_type(2).verdict == "pass"
    with pytest.raises(ValueError):
        verify_finite_type(0)


def test_csv_tables():
    text = f_table_csv([2])
    assert text.splitlines() == ["n,exponent,coefficient", "2,-4,1", "2,-6,1", "2,-10,-1"]
    assert derivative_table_csv([(3, Fraction(24), 1)]).splitlines() == ["alpha,value,sign", "3,24/1,1"]


def test_family_f_closed_form_agree_beyond_window():
    for n in (15, 16):
        assert jones_kauffman(fractional_family(n)) == closed_form(n)
