import random
from fractions import Fraction
from math import factorial

import pytest

from twistlattice.algebra import (
    LaurentPoly,
    RationalPoly,
    TruncatedRationalSeries,
    exp_substitute,
    factorial_power,
    format_laurent,
    lagrange_interpolate,
)

A = LaurentPoly.monomial


def rand_laurent(rng, span=6, terms=4):
    return LaurentPoly({rng.randint(-span, span): rng.randint(-5, 5) for _ in range(terms)})


def test_zero_coefficients_dropped():
    p = LaurentPoly({3: 0, -2: 4})
    assert p.terms == {-2: 4}
    assert LaurentPoly({1: 0}).is_zero()
    assert LaurentPoly() == 0


def test_pairs_round_trip():
    p = LaurentPoly({-4: 1, -12: 1, -16: -1})
    assert p.to_pairs() == [(-16, -1), (-12, 1), (-4, 1)]
    assert LaurentPoly.from_pairs(p.to_pairs()) == p


def test_loop_value_squared():
    d = -A(2) - A(-2)
    assert d * d == A(4) + 2 + A(-4)


def test_unit_powers():
    assert (-A(1)) ** -3 == -A(-3)
    assert A(2) ** 0 == 1
    with pytest.raises(ValueError):
        (A(1) + 1) ** -1


def test_exact_division():
    top = (A(4) + A(2) + 1) * A(-4) - A(-10)
    q = top.exact_div(A(4) + 1)
    assert q * (A(4) + 1) == top
    with pytest.raises(ValueError):
        (A(1) + 1).exact_div(A(4) + 1)


def test_exponent_overflow():
    with pytest.raises(OverflowError):
        LaurentPoly({2**40: 1})


@pytest.mark.parametrize("p, text", [
    (LaurentPoly({-4: 1, -12: 1, -16: -1}), "A^-4 + A^-12 - A^-16"),
    (LaurentPoly({0: 1}), "1"),
    (LaurentPoly(), "0"),
    (LaurentPoly({3: -1}), "-A^3"),
    (LaurentPoly({2: 3, 0: -2}), "3*A^2 - 2"),
])
def test_format(p, text):
    assert format_laurent(p) == text


def test_ring_axioms_random():
    rng = random.Random(1)
    for _ in range(100):
        p, q, r = (rand_laurent(rng) for _ in range(3))
        assert (p + q) * r == p * r + q * r
        assert p * q == q * p
        assert (p - q) + q == p
        if not q.is_zero() and abs(q.terms[q.max_exponent()]) == 1:
            quo, rem = (p * q + r).divmod(q)
            assert quo * q + rem == p * q + r


def test_evaluate_matches_substitution():
    p = A(-2, 3) + A(1) - 4
    assert p.evaluate(Fraction(2)) == Fraction(3, 4) + 2 - 4


def test_exp_substitute_known():
    # e^{-4x} = 1 - 4x + 8x^2 - 32/3 x^3
    s = exp_substitute(A(-4), 3)
    assert s == (1, -4, 8, Fraction(-32, 3))


def test_exp_substitute_multiplicative():
    rng = random.Random(2)
    for _ in range(30):
        p, q = rand_laurent(rng), rand_laurent(rng)
        assert exp_substitute(p * q, 5) == exp_substitute(p, 5) * exp_substitute(q, 5)


def test_series_strings_round_trip():
    s = TruncatedRationalSeries([1, Fraction(-1, 3), 0])
    assert s.to_strings() == ["1/1", "-1/3", "0/1"]
    assert TruncatedRationalSeries.from_strings(s.to_strings()) == s


def test_rational_poly_shift():
    p = RationalPoly([1, 2, 3])  # 1 + 2z + 3z^2
    for z in range(-3, 4):
        assert p.shift(2)(z) == p(z + 2)


def test_lagrange_recovers_polynomial():
    rng = random.Random(3)
    for _ in range(20):
        p = RationalPoly([Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(5)])
        xs = rng.sample(range(-20, 20), 6)
        assert lagrange_interpolate([(x, p(x)) for x in xs]) == p


def test_lagrange_duplicate_abscissae():
    with pytest.raises(ValueError):
        lagrange_interpolate([(1, 2), (1, 3)])


@pytest.mark.parametrize("z, alpha, nu, expected", [
    (5, 2, 1, 20),
    (5, 2, -1, 30),
    (3, 4, 1, 0),
    (-5, 3, -1, -60),
    (7, 0, 1, 1),
])
def test_factorial_power(z, alpha, nu, expected):
    assert factorial_power(z, alpha, nu) == expected


def test_falling_power_binomial():
    for z in range(0, 9):
        for a in range(0, 9):
            expected = factorial(z) // (factorial(a) * factorial(z - a)) if a <= z else 0
            assert factorial_power(z, a) // factorial(a) == expected
