"""Gauss diagrams of long virtual knots.

A diagram is a set of signed arrows whose endpoints sit at the integer
positions ``1 .. 2n`` of the line. Each arrow records the position of its
over-crossing preimage and its under-crossing preimage; whether it "points
right" is derived from those two numbers. Arrows may carry a mark:

* ``classical`` -- an ordinary crossing,
* ``dashed``    -- a semi-virtual crossing (classical minus deleted),
* ``chord``     -- a singular crossing (crossing minus its crossing change).

Diagrams are always stored canonically (arrows ordered by their leftmost
endpoint), so two equivalent diagrams compare equal.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from itertools import product
from typing import Callable, Hashable, Iterable, Iterator, Sequence

__all__ = [
    "CLASSICAL",
    "DASHED",
    "CHORD",
    "GaussCodeError",
    "Arrow",
    "LongGaussDiagram",
    "FormalSum",
    "parse_gauss_code",
    "serialize",
    "reverse_arrow",
    "crossing_change",
    "insert_r2_pair",
    "find_r2_pairs",
    "delete_r2_pair",
    "delete_arrows",
    "insert_kink",
    "expand_marks",
    "writhe",
    "random_diagram",
]

CLASSICAL = "classical"
DASHED = "dashed"
CHORD = "chord"
MARKS = (CLASSICAL, DASHED, CHORD)

_PREFIX = {"": CLASSICAL, "d": DASHED, "s": CHORD}
_PREFIX_OF = {v: k for k, v in _PREFIX.items()}
_TOKEN = re.compile(r"^(d|s)?([OU])([0-9]+)([+-])$")


class GaussCodeError(ValueError):
    """Malformed Gauss code or an inconsistent diagram."""


@dataclass(frozen=True, order=True)
class Arrow:
    over: int
    under: int
    sign: int
    mark: str = CLASSICAL

    def __post_init__(self):
        if self.over == self.under:
            raise GaussCodeError("arrow endpoints must differ")
        if self.sign not in (1, -1):
            raise GaussCodeError(f"sign must be +1 or -1, got {self.sign!r}")
        if self.mark not in MARKS:
            raise GaussCodeError(f"unknown mark {self.mark!r}")

    @property
    def left(self) -> int:
        return min(self.over, self.under)

    @property
    def right(self) -> int:
        return max(self.over, self.under)

    @property
    def points_right(self) -> bool:
        return self.over < self.under


@dataclass(frozen=True)
class LongGaussDiagram:
    """Canonical Gauss diagram; build via :meth:`from_arrows` or parsing."""

    arrows: tuple[Arrow, ...] = ()

    def __post_init__(self):
        arrows = tuple(sorted(self.arrows, key=lambda a: a.left))
        seen = sorted(p for a in arrows for p in (a.over, a.under))
        if seen != list(range(1, 2 * len(arrows) + 1)):
            raise GaussCodeError("arrow endpoints must use each of 1..2n exactly once")
        object.__setattr__(self, "arrows", arrows)

    @classmethod
    def from_arrows(cls, arrows: Iterable[Arrow]) -> LongGaussDiagram:
        return cls(tuple(arrows))

    @classmethod
    def from_endpoints(cls, tokens: Sequence[tuple[Hashable, str, int, str]]) -> LongGaussDiagram:
        """Build from a left-to-right endpoint list.

        Each token is ``(key, kind, sign, mark)`` with ``kind`` in ``"OU"``;
        every key must occur exactly twice, once per kind, with equal sign
        and mark.
        """
        pending: dict = {}
        arrows = []
        for pos, (key, kind, sign, mark) in enumerate(tokens, start=1):
            if key not in pending:
                pending[key] = (pos, kind, sign, mark)
                continue
            pos0, kind0, sign0, mark0 = pending.pop(key)
            if kind0 == kind:
                raise GaussCodeError(f"index {key} appears twice as {kind}")
            if sign0 != sign:
                raise GaussCodeError(f"index {key} has inconsistent signs")
            if mark0 != mark:
                raise GaussCodeError(f"index {key} has inconsistent marks")
            over, under = (pos0, pos) if kind0 == "O" else (pos, pos0)
            arrows.append(Arrow(over, under, sign, mark))
        if pending:
            key = next(iter(pending))
            raise GaussCodeError(f"index {key} appears only once")
        return cls(tuple(arrows))

    def endpoints(self) -> list[tuple[int, str, int, str]]:
        """Left-to-right ``(arrow_index, kind, sign, mark)``; indices are 0-based."""
        out: list = [None] * (2 * len(self.arrows))
        for i, a in enumerate(self.arrows):
            out[a.over - 1] = (i, "O", a.sign, a.mark)
            out[a.under - 1] = (i, "U", a.sign, a.mark)
        return out

    @property
    def n(self) -> int:
        return len(self.arrows)

    def __len__(self):
        return len(self.arrows)

    def marks(self) -> set[str]:
        return {a.mark for a in self.arrows}

    def is_classical(self) -> bool:
        return all(a.mark == CLASSICAL for a in self.arrows)

    def with_arrow(self, i: int, arrow: Arrow) -> LongGaussDiagram:
        arrows = list(self.arrows)
        arrows[i] = arrow
        return LongGaussDiagram(tuple(arrows))

    def __str__(self):
        return serialize(self)


def parse_gauss_code(text: str) -> LongGaussDiagram:
    """Parse whitespace-separated endpoint tokens such as ``"O1+ U1+"``."""
    tokens = []
    for tok in text.split():
        m = _TOKEN.match(tok)
        if not m:
            raise GaussCodeError(f"malformed token {tok!r}")
        prefix, kind, idx, sign = m.groups()
        if int(idx) < 1:
            raise GaussCodeError(f"malformed token {tok!r}: index must be positive")
        tokens.append((int(idx), kind, 1 if sign == "+" else -1, _PREFIX[prefix or ""]))
    return LongGaussDiagram.from_endpoints(tokens)


def serialize(d: LongGaussDiagram) -> str:
    return " ".join(
        f"{_PREFIX_OF[mark]}{kind}{i + 1}{'+' if sign > 0 else '-'}"
        for i, kind, sign, mark in d.endpoints()
    )


def _check_index(d: LongGaussDiagram, i: int) -> None:
    if not 1 <= i <= d.n:
        raise IndexError(f"arrow index {i} out of range 1..{d.n}")


def reverse_arrow(d: LongGaussDiagram, i: int) -> LongGaussDiagram:
    """Swap the over and under ends of arrow ``i`` (1-based), keeping its sign."""
    _check_index(d, i)
    a = d.arrows[i - 1]
    return d.with_arrow(i - 1, Arrow(a.under, a.over, a.sign, a.mark))


def crossing_change(d: LongGaussDiagram, i: int) -> LongGaussDiagram:
    """Switch crossing ``i`` (1-based): the arrow reverses and its sign flips."""
    _check_index(d, i)
    a = d.arrows[i - 1]
    return d.with_arrow(i - 1, Arrow(a.under, a.over, -a.sign, a.mark))


def _insert(d: LongGaussDiagram, inserts: dict[int, list]) -> LongGaussDiagram:
    """Insert endpoint tokens into gaps (gap ``g`` sits after position ``g``)."""
    n2 = 2 * d.n
    for g in inserts:
        if not 0 <= g <= n2:
            raise GaussCodeError(f"slot {g} outside 0..{n2}")
    old = [(("old", i), k, s, m) for i, k, s, m in d.endpoints()]
    seq = list(inserts.get(0, []))
    for pos, tok in enumerate(old, start=1):
        seq.append(tok)
        seq.extend(inserts.get(pos, []))
    return LongGaussDiagram.from_endpoints(seq)


def insert_r2_pair(
    d: LongGaussDiagram,
    slot_a: int,
    slot_b: int,
    direction: str = "R",
    sign: int = 1,
    crossed: bool = False,
) -> LongGaussDiagram:
    """Insert the two arrows of a Reidemeister II bigon.

    Both arrows run between gap ``slot_a`` and gap ``slot_b`` and point the
    same way (``direction`` ``"R"`` puts the over ends at ``slot_a``). The
    first arrow gets ``sign``, the second ``-sign``. ``crossed`` reverses the
    order of the endpoints at ``slot_b``.
    """
    if slot_a > slot_b:
        raise GaussCodeError("slot_a must not exceed slot_b")
    if direction not in ("R", "L"):
        raise GaussCodeError("direction must be 'R' or 'L'")
    ka, kb = ("O", "U") if direction == "R" else ("U", "O")
    first = [(("r2", 0), ka, sign, CLASSICAL), (("r2", 1), ka, -sign, CLASSICAL)]
    second = [(("r2", 0), kb, sign, CLASSICAL), (("r2", 1), kb, -sign, CLASSICAL)]
    if crossed:
        second.reverse()
    if slot_a == slot_b:
        return _insert(d, {slot_a: first + second})
    return _insert(d, {slot_a: first, slot_b: second})


def insert_kink(d: LongGaussDiagram, slot: int, sign: int = 1, over_first: bool = True) -> LongGaussDiagram:
    """Reidemeister I: add an isolated arrow with adjacent endpoints at ``slot``."""
    ends = ["O", "U"] if over_first else ["U", "O"]
    return _insert(d, {slot: [(("r1", 0), k, sign, CLASSICAL) for k in ends]})


def find_r2_pairs(d: LongGaussDiagram) -> list[tuple[int, int]]:
    """1-based index pairs of classical arrows that cancel by a Reidemeister II move."""
    out = []
    arrows = d.arrows
    for i in range(len(arrows)):
        a = arrows[i]
        if a.mark != CLASSICAL:
            continue
        for j in range(i + 1, len(arrows)):
            b = arrows[j]
            if b.mark != CLASSICAL or a.sign == b.sign:
                continue
            if abs(a.over - b.over) == 1 and abs(a.under - b.under) == 1:
                out.append((i + 1, j + 1))
    return out


def delete_arrows(d: LongGaussDiagram, indices: Iterable[int]) -> LongGaussDiagram:
    """Remove arrows (1-based indices) and close up the gaps."""
    drop = {i - 1 for i in indices}
    for i in drop:
        _check_index(d, i + 1)
    kept = [t for t in d.endpoints() if t[0] not in drop]
    return LongGaussDiagram.from_endpoints(kept)


def delete_r2_pair(d: LongGaussDiagram, i: int, j: int) -> LongGaussDiagram:
    """Inverse of :func:`insert_r2_pair` for a detected cancelling pair."""
    if (min(i, j), max(i, j)) not in find_r2_pairs(d):
        raise GaussCodeError(f"arrows {i} and {j} do not form a Reidemeister II pair")
    return delete_arrows(d, (i, j))


def writhe(d: LongGaussDiagram) -> int:
    if not d.is_classical():
        raise GaussCodeError("writhe is only defined for classical diagrams")
    return sum(a.sign for a in d.arrows)


class FormalSum:
    """Integer linear combination of canonical diagrams."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        clean: dict[LongGaussDiagram, int] = {}
        if isinstance(terms, LongGaussDiagram):
            terms = {terms: 1}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for dg, c in items:
                clean[dg] = clean.get(dg, 0) + c
        self._terms = {dg: c for dg, c in clean.items() if c}

    @classmethod
    def zero(cls) -> FormalSum:
        return cls()

    def items(self) -> Iterator[tuple[LongGaussDiagram, int]]:
        return iter(self._terms.items())

    def coeff(self, d: LongGaussDiagram) -> int:
        return self._terms.get(d, 0)

    def __len__(self):
        return len(self._terms)

    def __iter__(self):
        return iter(self._terms)

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        if not isinstance(other, FormalSum):
            return NotImplemented
        out = dict(self._terms)
        for dg, c in other._terms.items():
            out[dg] = out.get(dg, 0) + c
        return FormalSum(out)

    __radd__ = __add__

    def __neg__(self):
        return FormalSum({dg: -c for dg, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, FormalSum):
            return NotImplemented
        return self + (-other)

    def __mul__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        return FormalSum({dg: k * c for dg, c in self._terms.items()})

    __rmul__ = __mul__

    def map_linear(self, fn: Callable[[LongGaussDiagram], FormalSum]) -> FormalSum:
        """Extend a diagram -> FormalSum map linearly."""
        out = FormalSum()
        for dg, c in self._terms.items():
            out = out + fn(dg) * c
        return out

    def __eq__(self, other):
        if isinstance(other, FormalSum):
            return self._terms == other._terms
        if isinstance(other, int) and other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __repr__(self):
        body = ", ".join(f"{c:+d}*[{serialize(dg)}]" for dg, c in self.sorted_items())
        return f"FormalSum({body})"

    def sorted_items(self) -> list[tuple[LongGaussDiagram, int]]:
        return sorted(self._terms.items(), key=lambda t: (t[0].n, serialize(t[0])))


def expand_marks(d: LongGaussDiagram) -> FormalSum:
    """Resolve dashed and chord marks into a sum of classical diagrams.

    dashed arrow  ->  (arrow made classical) - (arrow deleted)
    chord, sign e ->  e * (arrow made classical) - e * (its crossing change)
    """
    marked = [i for i, a in enumerate(d.arrows) if a.mark != CLASSICAL]
    if not marked:
        return FormalSum({d: 1})
    choices = []
    for i in marked:
        a = d.arrows[i]
        if a.mark == DASHED:
            choices.append([(1, Arrow(a.over, a.under, a.sign)), (-1, None)])
        else:
            e = a.sign
            choices.append([(e, Arrow(a.over, a.under, e)), (-e, Arrow(a.under, a.over, -e))])
    out: dict[LongGaussDiagram, int] = {}
    for combo in product(*choices):
        coeff = 1
        arrows = list(d.arrows)
        for i, (c, new) in zip(marked, combo):
            coeff *= c
            arrows[i] = new
        tokens = []
        for pos, (i, _, _, _) in enumerate(d.endpoints(), start=1):
            a = arrows[i]
            if a is None:
                continue
            tokens.append((i, "O" if a.over == pos else "U", a.sign, a.mark))
        dg = LongGaussDiagram.from_endpoints(tokens)
        out[dg] = out.get(dg, 0) + coeff
    return FormalSum(out)


def random_diagram(
    rng: random.Random,
    n: int,
    marks: Sequence[str] | None = None,
    signs: Sequence[int] | None = None,
) -> LongGaussDiagram:
    """Uniformly random matching of ``2n`` points with random directions.

    ``marks``/``signs`` fix the mark and sign of each arrow (in creation
    order); unspecified ones are classical with a random sign.
    """
    points = list(range(1, 2 * n + 1))
    rng.shuffle(points)
    arrows = []
    for i in range(n):
        p, q = points[2 * i], points[2 * i + 1]
        sign = signs[i] if signs is not None else rng.choice((1, -1))
        mark = marks[i] if marks is not None else CLASSICAL
        arrows.append(Arrow(p, q, sign, mark))
    return LongGaussDiagram(tuple(arrows))
