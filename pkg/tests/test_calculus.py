import random
from fractions import Fraction
from itertools import product

import pytest

from twistlattice.algebra import LaurentPoly
from twistlattice.calculus import (
    MultiIndex,
    derivative,
    poly_degree_evidence,
    power_series_eval,
    step_derivative,
)


def random_table(rng, radius):
    table = {z: Fraction(rng.randint(-20, 20), rng.randint(1, 4))
             for z in product(range(-radius, radius + 1), repeat=2)}
    return table.__getitem__


def random_poly2(rng, deg):
    coeffs = {(i, j): rng.randint(-5, 5) for i in range(deg + 1) for j in range(deg + 1 - i)}
    return lambda z: sum(c * z[0] ** i * z[1] ** j for (i, j), c in coeffs.items())


def test_multi_index_validation():
    with pytest.raises(ValueError):
        MultiIndex((1,), (1, 1))
    with pytest.raises(ValueError):
        MultiIndex((-1,), (1,))
    with pytest.raises(ValueError):
        MultiIndex((1,), (0,))
    assert MultiIndex.ones((1, -1)).degree == 2


@pytest.mark.parametrize("nu", [1, -1])
def test_first_differences(nu):
    f = lambda z: z[0] ** 2
    got = derivative(f, MultiIndex((1,), (nu,)), (3,))
    assert got == (16 - 9 if nu > 0 else 9 - 4)


def test_closed_formulas_match_iterated_steps():
    rng = random.Random(21)
    f = random_table(rng, 8)
    for _ in range(60):
        alpha = (rng.randint(0, 3), rng.randint(0, 3))
        nu = (rng.choice((1, -1)), rng.choice((1, -1)))
        g = f
        for axis in range(2):
            for _ in range(alpha[axis]):
                g = step_derivative(g, axis, nu[axis])
        z = (rng.randint(-2, 2), rng.randint(-2, 2))
        assert derivative(f, MultiIndex(alpha, nu), z) == g(z)


def test_power_series_reconstructs_window():
    rng = random.Random(22)
    for _ in range(5):
        f = random_table(rng, 4)
        for z in product(range(-4, 5), repeat=2):
            assert power_series_eval(f, z) == f(z)


def test_power_series_laurent_values():
    f = lambda z: LaurentPoly({z[0]: 1, -z[0]: 2})
    for x in range(-3, 4):
        assert power_series_eval(f, (x,)) == f((x,))


def test_polynomials_have_vanishing_high_differences():
    rng = random.Random(23)
    for deg in range(5):
        for _ in range(3):
            rep = poly_degree_evidence(random_poly2(rng, deg), [(-3, 3), (-3, 3)], deg)
            assert rep.consistent and rep.checked > 0


def test_non_polynomial_gets_witness():
    rep = poly_degree_evidence(lambda z: 2 ** z[0], [(0, 6)], 3)
    assert not rep.consistent
    value, alpha, nu, z = rep.witnesses[0]
    assert value != 0 and alpha == (4,)


def test_window_too_small():
    with pytest.raises(ValueError):
        poly_degree_evidence(lambda z: 0, [(0, 1)], 3)
