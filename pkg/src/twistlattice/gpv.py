"""The Goussarov-Polyak-Viro maps and finite-type harnesses.

``map_I`` sends a diagram to the sum of all its subdiagrams with every arrow
dashed; ``map_I_inverse`` is the alternating subdiagram sum back to classical
diagrams. Both act on the free module; the Polyak relations are not
imposed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Callable, Sequence

from .bracket import evaluate_linear
from .gauss import (
    CHORD,
    CLASSICAL,
    DASHED,
    Arrow,
    FormalSum,
    GaussCodeError,
    LongGaussDiagram,
    expand_marks,
    random_diagram,
)

__all__ = [
    "subdiagrams",
    "map_I",
    "map_I_inverse",
    "FiniteTypeReport",
    "kauffman_type_report",
    "gpv_derivative_scan",
]


def subdiagrams(d: LongGaussDiagram, removable: Sequence[int]):
    """Yield ``(number_removed, diagram)`` for every subset of ``removable`` arrows (0-based)."""
    ends = d.endpoints()
    for r in range(len(removable) + 1):
        for drop in combinations(removable, r):
            gone = set(drop)
            kept = [t for t in ends if t[0] not in gone]
            yield r, LongGaussDiagram.from_endpoints(kept)


def _remark(d: LongGaussDiagram, mark: str) -> LongGaussDiagram:
    return LongGaussDiagram(tuple(Arrow(a.over, a.under, a.sign, mark) for a in d.arrows))


def _I_single(d: LongGaussDiagram) -> FormalSum:
    if any(a.mark == CHORD for a in d.arrows):
        raise GaussCodeError("map_I is undefined on diagrams with chords")
    classical = [i for i, a in enumerate(d.arrows) if a.mark == CLASSICAL]
    out: dict[LongGaussDiagram, int] = {}
    for _, sub in subdiagrams(d, classical):
        key = _remark(sub, DASHED)
        out[key] = out.get(key, 0) + 1
    return FormalSum(out)


def _I_inverse_single(d: LongGaussDiagram) -> FormalSum:
    if any(a.mark != DASHED for a in d.arrows):
        raise GaussCodeError("map_I_inverse needs all-dashed diagrams")
    out: dict[LongGaussDiagram, int] = {}
    for removed, sub in subdiagrams(d, list(range(d.n))):
        key = _remark(sub, CLASSICAL)
        out[key] = out.get(key, 0) + (-1) ** removed
    return FormalSum(out)


def map_I(s: FormalSum | LongGaussDiagram) -> FormalSum:
    """``I(D) = sum over D' subset D of i(D')``, extended linearly.

    Dashed arrows already present are kept in every summand.
    """
    if isinstance(s, LongGaussDiagram):
        s = FormalSum(s)
    return s.map_linear(_I_single)


def map_I_inverse(s: FormalSum | LongGaussDiagram) -> FormalSum:
    """``I^-1(A) = sum over A' subset A of (-1)^{|A - A'|} i^-1(A')``."""
    if isinstance(s, LongGaussDiagram):
        s = FormalSum(s)
    return s.map_linear(_I_inverse_single)


@dataclass
class FiniteTypeReport:
    chords: int
    values: list = field(default_factory=list)
    diagrams: list = field(default_factory=list)

    @property
    def all_zero(self) -> bool:
        return all(v == 0 for v in self.values)

    def nonzero(self) -> list:
        return [(d, v) for d, v in zip(self.diagrams, self.values) if v != 0]


def kauffman_type_report(
    v: Callable[[LongGaussDiagram], object],
    k: int,
    trials: int = 20,
    max_extra_arrows: int = 3,
    seed: int = 0,
    zero=0,
) -> FiniteTypeReport:
    """Evaluate ``v`` on random diagrams carrying ``k + 1`` chords.

    Each trial draws ``k + 1`` chords plus up to ``max_extra_arrows``
    classical arrows at random positions, expands the chords, and records
    ``v`` on the resulting formal sum. For a Kauffman finite-type invariant of
    degree ``<= k`` every value is zero.
    """
    rng = random.Random(seed)
    report = FiniteTypeReport(chords=k + 1)
    for _ in range(trials):
        extra = rng.randint(0, max_extra_arrows)
        n = k + 1 + extra
        marks = [CHORD] * (k + 1) + [CLASSICAL] * extra
        d = random_diagram(rng, n, marks=marks, signs=[rng.choice((1, -1)) for _ in range(n)])
        report.diagrams.append(d)
        report.values.append(evaluate_linear(expand_marks(d), v, zero))
    return report


def gpv_derivative_scan(
    v: Callable[[LongGaussDiagram], Fraction],
    phi: Callable[[int], LongGaussDiagram],
    shift: int,
    alphas: Sequence[int],
) -> list[tuple[int, Fraction, int]]:
    """``(alpha, (d^alpha v o phi_bar)(0), sign)`` with ``phi_bar(z) = phi(z + shift)``."""
    if shift < 0 or shift % 2:
        raise ValueError("shift must be a nonnegative even integer")
    cache: dict[int, Fraction] = {}

    def value(j: int) -> Fraction:
        if j not in cache:
            cache[j] = v(phi(j + shift))
        return cache[j]

    out = []
    for a in alphas:
        total = sum(((-1) ** (a + j) * comb(a, j) * value(j) for j in range(a + 1)), Fraction(0))
        out.append((a, total, (total > 0) - (total < 0)))
    return out
