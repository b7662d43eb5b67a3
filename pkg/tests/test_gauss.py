import random

import pytest

from twistlattice.gauss import (
    CHORD,
    CLASSICAL,
    DASHED,
    Arrow,
    FormalSum,
    GaussCodeError,
    LongGaussDiagram,
    crossing_change,
    delete_r2_pair,
    expand_marks,
    find_r2_pairs,
    insert_kink,
    insert_r2_pair,
    parse_gauss_code,
    random_diagram,
    reverse_arrow,
    serialize,
    writhe,
)

TREFOIL = "O1+ U2+ O3+ U1+ O2+ U3+"


@pytest.mark.parametrize("code", ["", "O1+ U1+", "U1- O1-", TREFOIL, "dO1+ U2- dU1+ O2-", "sO1- sU1-"])
def test_parse_serialize_round_trip(code):
    assert serialize(parse_gauss_code(code)) == code


def test_relabelling_is_canonical():
    assert parse_gauss_code("O7+ U3- U7+ O3-") == parse_gauss_code("O1+ U2- U1+ O2-")


def test_arrow_geometry():
    d = parse_gauss_code("U1- O2+ O1- U2+")
    a, b = d.arrows
    assert (a.over, a.under, a.sign) == (3, 1, -1)
    assert not a.points_right
    assert b.points_right and (b.left, b.right) == (2, 4)


@pytest.mark.parametrize("code, token", [
    ("O1+ X1+", "X1+"),
    ("O1+ U1", "U1"),
    ("O0+ U0+", "O0+"),
    ("O1+ U1+ q", "q"),
])
def test_malformed_tokens_named(code, token):
    with pytest.raises(GaussCodeError, match=token.replace("+", r"\+")):
        parse_gauss_code(code)


@pytest.mark.parametrize("code", ["O1+", "O1+ O1+", "O1+ U1-", "dO1+ U1+"])
def test_inconsistent_codes(code):
    with pytest.raises(GaussCodeError):
        parse_gauss_code(code)


def test_endpoint_coverage_validated():
    with pytest.raises(GaussCodeError):
        LongGaussDiagram((Arrow(1, 3, 1),))


def test_writhe():
    assert writhe(parse_gauss_code(TREFOIL)) == 3
    with pytest.raises(GaussCodeError):
        writhe(parse_gauss_code("dO1+ dU1+"))


def test_reverse_and_crossing_change():
    d = parse_gauss_code("O1+ U1+")
    assert serialize(reverse_arrow(d, 1)) == "U1+ O1+"
    assert serialize(crossing_change(d, 1)) == "U1- O1-"
    assert crossing_change(crossing_change(d, 1), 1) == d
    with pytest.raises(IndexError):
        reverse_arrow(d, 2)


def test_r2_insert_then_delete():
    rng = random.Random(5)
    for _ in range(50):
        d = random_diagram(rng, rng.randint(0, 4))
        a = rng.randint(0, 2 * d.n)
        b = rng.randint(a, 2 * d.n)
        e = insert_r2_pair(d, a, b, rng.choice("RL"), rng.choice((1, -1)), crossed=rng.random() < 0.5)
        assert e.n == d.n + 2
        pairs = find_r2_pairs(e)
        assert pairs
        assert any(delete_r2_pair(e, i, j) == d for i, j in pairs)


def test_delete_non_pair_rejected():
    d = parse_gauss_code(TREFOIL)
    with pytest.raises(GaussCodeError):
        delete_r2_pair(d, 1, 2)


def test_kink_insertion():
    d = insert_kink(parse_gauss_code("O1+ U1+"), 2, sign=-1, over_first=False)
    assert serialize(d) == "O1+ U1+ U2- O2-"


def test_expand_dashed():
    d = parse_gauss_code("dO1+ dU1+")
    s = expand_marks(d)
    assert s == FormalSum({parse_gauss_code("O1+ U1+"): 1, LongGaussDiagram(): -1})


def test_expand_chord_is_crossing_change():
    d = parse_gauss_code("sO1- sU1-")
    s = expand_marks(d)
    assert s == FormalSum({parse_gauss_code("O1- U1-"): -1, parse_gauss_code("U1+ O1+"): 1})


def test_expand_counts_terms():
    rng = random.Random(7)
    for _ in range(20):
        marks = [rng.choice((CLASSICAL, DASHED, CHORD)) for _ in range(4)]
        d = random_diagram(rng, 4, marks=marks)
        s = expand_marks(d)
        assert all(dg.is_classical() for dg, _ in s.items())
        # the 2^m resolutions are pairwise distinct diagrams
        m = sum(mk != CLASSICAL for mk in marks)
        assert sum(abs(c) for _, c in s.items()) == 2**m


def test_formal_sum_arithmetic():
    x, y = parse_gauss_code("O1+ U1+"), parse_gauss_code(TREFOIL)
    s = FormalSum({x: 2}) + FormalSum({y: 1})
    assert s - s == 0
    assert 3 * s == s + s + s
    assert (s - FormalSum({x: 2})).coeff(x) == 0
    assert sum([s, s], 0) == 2 * s
