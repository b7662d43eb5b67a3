"""Discrete derivatives and discrete power series on integer lattices.

Values only need exact ``+``, unary ``-`` and multiplication by ``int``, so
the same code differentiates rationals, Laurent polynomials and formal sums
of diagrams. A grid function is any pure callable taking a tuple of ints.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from math import comb, factorial
from typing import Callable, Sequence

from .algebra import factorial_power

__all__ = [
    "MultiIndex",
    "derivative",
    "step_derivative",
    "power_series_eval",
    "DegreeReport",
    "poly_degree_evidence",
    "memoize_grid",
]

GridFunction = Callable[[tuple], object]


@dataclass(frozen=True)
class MultiIndex:
    """Orders ``alpha`` and directions ``nu`` (each +1 or -1), one per axis."""

    alpha: tuple[int, ...]
    nu: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "alpha", tuple(self.alpha))
        object.__setattr__(self, "nu", tuple(self.nu))
        if len(self.alpha) != len(self.nu):
            raise ValueError("alpha and nu must have the same length")
        if any(a < 0 for a in self.alpha):
            raise ValueError("alpha entries must be nonnegative")
        if any(v not in (1, -1) for v in self.nu):
            raise ValueError("nu entries must be +1 or -1")

    @classmethod
    def ones(cls, nu: Sequence[int]) -> MultiIndex:
        return cls((1,) * len(nu), tuple(nu))

    @property
    def degree(self) -> int:
        return sum(self.alpha)

    def __len__(self):
        return len(self.alpha)


def _accumulate(terms):
    total = None
    for c, v in terms:
        term = c * v
        total = term if total is None else total + term
    return total


def derivative(f: GridFunction, idx: MultiIndex, z: Sequence[int]):
    """``(d^{nu alpha} f)(z)`` by the closed binomial formulas, axis by axis.

    forward:  sum_k (-1)^(alpha+k) C(alpha,k) f(z + k e_i)
    backward: sum_k (-1)^k       C(alpha,k) f(z - k e_i)
    """
    z = tuple(z)
    if len(z) != len(idx):
        raise ValueError("point and multi-index dimensions differ")

    def along(axis: int, point: tuple):
        if axis == len(z):
            return f(point)
        a, nu = idx.alpha[axis], idx.nu[axis]
        if a == 0:
            return along(axis + 1, point)
        terms = []
        for k in range(a + 1):
            sign = (-1) ** (a + k) if nu > 0 else (-1) ** k
            shifted = point[:axis] + (point[axis] + nu * k,) + point[axis + 1:]
            terms.append((sign * comb(a, k), along(axis + 1, shifted)))
        return _accumulate(terms)

    return along(0, z)


def step_derivative(f: GridFunction, axis: int, nu: int) -> GridFunction:
    """One forward (``nu=+1``) or backward (``nu=-1``) difference as a new grid function."""

    def g(z):
        z = tuple(z)
        moved = z[:axis] + (z[axis] + nu,) + z[axis + 1:]
        if nu > 0:
            return f(moved) + -f(z)
        return f(z) + -f(moved)

    return g


def power_series_eval(f: GridFunction, z: Sequence[int]):
    """Evaluate the discrete power series of ``f`` about the origin at ``z``.

    The orthant of ``z`` picks ``nu`` (``+`` on ties at zero). Only
    ``alpha_i <= |z_i|`` contribute, since the factorial powers vanish
    beyond that. ``z^{nu alpha} / alpha!`` is an integer, so any value type
    with integer scaling works.
    """
    z = tuple(z)
    nu = tuple(1 if zi >= 0 else -1 for zi in z)
    origin = (0,) * len(z)
    terms = []
    for alpha in product(*(range(abs(zi) + 1) for zi in z)):
        weight = 1
        for zi, ai, ni in zip(z, alpha, nu):
            num = factorial_power(zi, ai, ni)
            weight *= num // factorial(ai)
        if weight:
            terms.append((weight, derivative(f, MultiIndex(alpha, nu), origin)))
    return _accumulate(terms)


@dataclass
class DegreeReport:
    """Outcome of a finite-window polynomial-degree check (evidence only)."""

    degree: int
    checked: int
    witnesses: list = field(default_factory=list)

    @property
    def consistent(self) -> bool:
        return not self.witnesses


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def memoize_grid(f: GridFunction) -> GridFunction:
    cache: dict = {}

    def g(z):
        z = tuple(z)
        if z not in cache:
            cache[z] = f(z)
        return cache[z]

    return g


def poly_degree_evidence(f: GridFunction, window: Sequence[tuple[int, int]], deg: int,
                         is_zero: Callable[[object], bool] = lambda v: v == 0) -> DegreeReport:
    """Check that every derivative of total order ``deg + 1`` vanishes on a window.

    ``window`` is a box ``[(lo, hi), ...]``. Every ``alpha`` with
    ``|alpha| = deg + 1`` and every direction vector ``nu`` is tried at each
    window point whose difference stencil stays inside the box. Nonzero
    values come back as ``(value, alpha, nu, z)`` witnesses.
    """
    m = len(window)
    g = memoize_grid(f)
    report = DegreeReport(degree=deg, checked=0)
    for alpha in _compositions(deg + 1, m):
        for nu in product((1, -1), repeat=m):
            ranges = []
            for (lo, hi), a, v in zip(window, alpha, nu):
                ranges.append(range(lo, hi - a + 1) if v > 0 else range(lo + a, hi + 1))
            for z in product(*ranges):
                value = derivative(g, MultiIndex(alpha, nu), z)
                report.checked += 1
                if not is_zero(value):
                    report.witnesses.append((value, alpha, nu, z))
    if report.checked == 0:
        raise ValueError(f"window {list(window)} too small for derivatives of order {deg + 1}")
    return report
