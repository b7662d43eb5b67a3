"""Kauffman bracket and Jones-Kauffman polynomial of Gauss diagrams.

The bracket is the full state sum over A/B smoothings of the classical
crossings. Loops are counted abstractly from the Gauss diagram: the line is
cut at the ``2n`` crossing points into ``2n + 1`` arcs (the two outer ones are
rays), each smoothing joins the four arc ends at its crossing in pairs, and
every closed component not containing the rays is a loop.

Smoothing convention: at a crossing of sign ``+`` the A-smoothing is the
oriented reconnection (incoming over end to outgoing under end, incoming
under end to outgoing over end); at a crossing of sign ``-`` it is the
disoriented one (incoming ends together, outgoing ends together). This is
the convention giving ``<positive kink> = -A^3``.
"""

from __future__ import annotations

import os
from fractions import Fraction
from functools import lru_cache
from typing import Callable

from .algebra import LaurentPoly, exp_substitute
from .gauss import FormalSum, GaussCodeError, LongGaussDiagram, writhe

__all__ = [
    "DEFAULT_STATE_LIMIT",
    "StateLimitError",
    "state_limit",
    "state_counts",
    "kauffman_bracket",
    "jones_kauffman",
    "evaluate_linear",
    "vk",
    "vk_series",
]

DEFAULT_STATE_LIMIT = 24
STATE_LIMIT_ENV = "TWISTLATTICE_STATE_LIMIT"

LOOP = LaurentPoly({2: -1, -2: -1})


class StateLimitError(RuntimeError):
    """Diagram has more crossings than the configured state-sum limit."""


def state_limit() -> int:
    env = os.environ.get(STATE_LIMIT_ENV)
    if env:
        value = int(env)
        if value <= 0:
            raise ValueError(f"{STATE_LIMIT_ENV} must be positive")
        return value
    return DEFAULT_STATE_LIMIT


def _smoothing_pairs(d: LongGaussDiagram):
    # arc i (0..2n) has tail end 2i and head end 2i+1; point p sits between
    # arc p-1 and arc p
    a_pairs, b_pairs = [], []
    for arrow in d.arrows:
        p, q = arrow.over, arrow.under
        in_o, out_o = 2 * (p - 1) + 1, 2 * p
        in_u, out_u = 2 * (q - 1) + 1, 2 * q
        oriented = ((in_o, out_u), (in_u, out_o))
        disoriented = ((in_o, in_u), (out_o, out_u))
        if arrow.sign > 0:
            a_pairs.append(oriented)
            b_pairs.append(disoriented)
        else:
            a_pairs.append(disoriented)
            b_pairs.append(oriented)
    return a_pairs, b_pairs


def state_counts(d: LongGaussDiagram) -> dict[tuple[int, int], int]:
    """Histogram of states by ``(#A-smoothings, #closed loops)``.

    Exhaustive depth-first enumeration in canonical arrow order; each arc end
    keeps a pointer to the opposite end of its current path, so a join is
    O(1) and undone on backtrack.
    """
    n = d.n
    mate = []
    for arc in range(2 * n + 1):
        mate.extend((2 * arc + 1, 2 * arc))
    a_pairs, b_pairs = _smoothing_pairs(d)
    options = [((a_pairs[i], 1), (b_pairs[i], 0)) for i in range(n)]
    counts: dict[tuple[int, int], int] = {}

    def descend(i: int, n_a: int, loops: int) -> None:
        if i == n:
            key = (n_a, loops)
            counts[key] = counts.get(key, 0) + 1
            return
        for ((x1, y1), (x2, y2)), da in options[i]:
            l = loops
            m1 = mate[x1]
            if m1 == y1:
                l += 1
                u1 = None
            else:
                n1 = mate[y1]
                mate[m1] = n1
                mate[n1] = m1
                u1 = (m1, n1)
            m2 = mate[x2]
            if m2 == y2:
                l += 1
                u2 = None
            else:
                n2 = mate[y2]
                mate[m2] = n2
                mate[n2] = m2
                u2 = (m2, n2)
            descend(i + 1, n_a + da, l)
            if u2 is not None:
                mate[u2[0]] = x2
                mate[u2[1]] = y2
            if u1 is not None:
                mate[u1[0]] = x1
                mate[u1[1]] = y1

    descend(0, 0, 0)
    return counts


def _check(d: LongGaussDiagram, limit: int | None) -> None:
    if not d.is_classical():
        raise GaussCodeError("bracket needs a classical diagram; expand marks first")
    limit = state_limit() if limit is None else limit
    if d.n > limit:
        raise StateLimitError(f"{d.n} crossings exceeds the state-sum limit of {limit}")


@lru_cache(maxsize=4096)
def _bracket(d: LongGaussDiagram) -> LaurentPoly:
    n = d.n
    counts = state_counts(d)
    max_loops = max(l for _, l in counts)
    loop_pow = [LaurentPoly({0: 1})]
    for _ in range(max_loops):
        loop_pow.append(loop_pow[-1] * LOOP)
    total: dict[int, int] = {}
    for (n_a, loops), c in counts.items():
        shift = 2 * n_a - n
        for e, k in loop_pow[loops].terms.items():
            total[e + shift] = total.get(e + shift, 0) + c * k
    return LaurentPoly(total)


def kauffman_bracket(d: LongGaussDiagram, limit: int | None = None) -> LaurentPoly:
    """Unnormalized bracket ``<d>`` with the long strand weighted 1."""
    _check(d, limit)
    return _bracket(d)


def jones_kauffman(d: LongGaussDiagram, limit: int | None = None) -> LaurentPoly:
    """``f_d(A) = (-A)^(-3 w(d)) <d>``."""
    _check(d, limit)
    w = writhe(d)
    return _bracket(d) * LaurentPoly({-3 * w: -1 if w % 2 else 1})


def evaluate_linear(s: FormalSum, inv: Callable[[LongGaussDiagram], object], zero=0):
    """Linear extension of a diagram invariant to a formal sum."""
    total = zero
    for dg, c in s.sorted_items():
        total = total + c * inv(dg)
    return total


def vk_series(d: LongGaussDiagram, order: int, limit: int | None = None):
    return exp_substitute(jones_kauffman(d, limit), order)


def vk(d: LongGaussDiagram, k: int, limit: int | None = None) -> Fraction:
    """Coefficient of ``x**k`` in ``f_d(e^x)``."""
    if k < 0:
        raise ValueError("k must be >= 0")
    return vk_series(d, k, limit)[k]
