"""Regular and fractional twist sequences and lattices.

A twist lattice is a base diagram with ``m`` disjoint proper pairs of
intervals ``(A_i, A'_i)``. Axis ``i`` fills its pair with a *block* of arrows
that depends on the lattice coordinate ``z_i``; every block arrow has one end
in ``A_i`` and the other in ``A'_i``.

Axis types are ``XYZ``:

* ``X = F`` (fractional): ``|k|`` parallel arrows. For ``k >= 1`` they are
  signed ``+`` and point ``Z``; for ``k <= -1`` they are signed ``-`` and point
  against ``Z`` (the negative side is the crossing change of the positive one).
* ``X = O`` / ``E`` (regular): a two-strand twist region with ``|2k - 1|`` /
  ``|2k|`` crossings, signed ``+`` for ``k >= 1`` and ``-`` for ``k <= 0``.
  Directions alternate along ``A``; the first arrow points ``Z`` in the
  positive regime and against ``Z`` in the negative one.
* ``Y = S`` keeps the order of the ends in ``A'`` the same as in ``A``;
  ``Y = B`` reverses it.

A direction ``R`` means the over end of the arrow lies in ``A``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable, NamedTuple, Sequence

from .calculus import MultiIndex
from .gauss import (
    CHORD,
    CLASSICAL,
    DASHED,
    GaussCodeError,
    LongGaussDiagram,
    parse_gauss_code,
)

__all__ = [
    "TwistAxisType",
    "BlockArrow",
    "Interval",
    "TwistLattice",
    "REGULAR_TYPES",
    "FRACTIONAL_TYPES",
    "axis_block",
    "regular_derivative_block",
    "fractional_derivative_block",
    "lattice_eval",
    "fractional_family",
    "figure5",
    "family_lattice",
    "integrate_chords",
    "integrate_dashed",
    "parse_lattice",
]


def _flip(direction: str) -> str:
    return "L" if direction == "R" else "R"


@dataclass(frozen=True)
class TwistAxisType:
    kind: str
    order: str
    direction: str

    def __post_init__(self):
        if self.kind not in "OEF" or len(self.kind) != 1:
            raise ValueError(f"axis kind must be O, E or F, got {self.kind!r}")
        if self.order not in ("S", "B"):
            raise ValueError(f"axis order must be S or B, got {self.order!r}")
        if self.direction not in ("L", "R"):
            raise ValueError(f"axis direction must be L or R, got {self.direction!r}")

    @classmethod
    def parse(cls, text: str) -> TwistAxisType:
        text = text.strip().upper()
        if len(text) != 3:
            raise ValueError(f"axis type must look like 'OSR', got {text!r}")
        return cls(text[0], text[1], text[2])

    @property
    def regular(self) -> bool:
        return self.kind != "F"

    def __str__(self):
        return f"{self.kind}{self.order}{self.direction}"


REGULAR_TYPES = tuple(TwistAxisType(x, y, z) for x in "OE" for y in "SB" for z in "RL")
FRACTIONAL_TYPES = tuple(TwistAxisType("F", y, z) for y in "SB" for z in "RL")


class BlockArrow(NamedTuple):
    sign: int
    direction: str
    mark: str = CLASSICAL


def _alternating(count: int, sign: int, first: str) -> list[BlockArrow]:
    out = []
    d = first
    for _ in range(count):
        out.append(BlockArrow(sign, d))
        d = _flip(d)
    return out


def axis_block(t: TwistAxisType, k: int) -> tuple[BlockArrow, ...]:
    """Arrows of one axis at coordinate ``k``, listed left to right in ``A``."""
    z = t.direction
    if t.kind == "F":
        if k >= 1:
            return tuple(BlockArrow(1, z) for _ in range(k))
        return tuple(BlockArrow(-1, _flip(z)) for _ in range(-k))
    count = abs(2 * k - 1) if t.kind == "O" else abs(2 * k)
    if k >= 1:
        return tuple(_alternating(count, 1, z))
    return tuple(_alternating(count, -1, _flip(z)))


def _chord(plus_direction: str) -> BlockArrow:
    # chords are stored pointing right; the sign records where the positive
    # resolution points
    return BlockArrow(1 if plus_direction == "R" else -1, "R", CHORD)


def regular_derivative_block(t: TwistAxisType, k: int, alpha: int, nu: int) -> tuple[BlockArrow, ...]:
    """Block whose diagram equals ``(d^{nu alpha} Phi)(k)`` on a regular axis.

    ``alpha`` chords come first in ``A``; chord ``i``'s positive resolution
    points ``Z`` for odd ``i`` and against ``Z`` for even ``i``. They are
    followed by ``nu(2k-1)+alpha`` (``O``) or ``nu 2k+alpha`` (``E``) arrows
    signed ``nu`` with alternating directions, the first pointing ``Z`` when
    ``alpha`` is even for ``nu=+`` (odd for ``nu=-``).
    """
    if not t.regular:
        raise ValueError("regular_derivative_block needs an O or E axis")
    if nu * k < 0:
        raise ValueError("k must lie in the half-line selected by nu")
    if alpha == 0:
        return axis_block(t, k)
    z = t.direction
    chords = [_chord(z if i % 2 == 0 else _flip(z)) for i in range(alpha)]
    count = nu * (2 * k - 1) + alpha if t.kind == "O" else nu * 2 * k + alpha
    first = z if (alpha + (nu < 0)) % 2 == 0 else _flip(z)
    return tuple(chords + _alternating(count, nu, first))


def fractional_derivative_block(t: TwistAxisType, k: int, alpha: int, nu: int) -> tuple[BlockArrow, ...]:
    """Block ``K`` with ``(d^{nu alpha} Phi)(k) = nu^alpha K`` on a fractional axis.

    ``alpha`` dashed arrows followed by ``|k|`` classical ones, all signed
    ``nu`` and pointing ``Z`` (``nu=+``) or against ``Z`` (``nu=-``).
    """
    if t.regular:
        raise ValueError("fractional_derivative_block needs an F axis")
    if nu * k < 0:
        raise ValueError("k must lie in the half-line selected by nu")
    d = t.direction if nu > 0 else _flip(t.direction)
    return tuple([BlockArrow(nu, d, DASHED)] * alpha + [BlockArrow(nu, d)] * abs(k))


class Interval(NamedTuple):
    axis: int
    side: int  # 0 for A, 1 for A'


@dataclass(frozen=True)
class TwistLattice:
    """Base diagram with interval markers, plus one axis type per pair.

    ``layout`` lists, left to right, either base endpoint tokens
    ``(key, kind, sign, mark)`` or :class:`Interval` markers.
    """

    layout: tuple
    axes: tuple[TwistAxisType, ...]

    def __post_init__(self):
        object.__setattr__(self, "layout", tuple(self.layout))
        object.__setattr__(self, "axes", tuple(self.axes))
        seen: dict[int, list[int]] = {}
        for item in self.layout:
            if isinstance(item, Interval):
                seen.setdefault(item.axis, []).append(item.side)
        for i in range(len(self.axes)):
            if seen.get(i) != [0, 1]:
                raise ValueError(f"axis {i} needs exactly one A interval followed by one A' interval")
        if set(seen) - set(range(len(self.axes))):
            raise ValueError("interval marker refers to an unknown axis")
        self.evaluate_blocks([()] * len(self.axes))  # base must be a valid diagram

    @property
    def dim(self) -> int:
        return len(self.axes)

    @classmethod
    def from_slots(cls, base: LongGaussDiagram, pairs: Sequence[tuple[int, int]],
                   axes: Sequence[TwistAxisType]) -> TwistLattice:
        """Place pair ``i`` at gaps ``pairs[i] = (slot_a, slot_b)`` of ``base``.

        Gap ``g`` sits right after endpoint ``g`` (gap 0 is before the first).
        Markers sharing a gap keep the order in which the pairs are listed,
        ``A`` before ``A'``.
        """
        if len(pairs) != len(axes):
            raise ValueError("need one axis type per proper pair")
        n2 = 2 * base.n
        at: dict[int, list[Interval]] = {}
        for i, (a, b) in enumerate(pairs):
            if not (0 <= a <= b <= n2):
                raise ValueError(f"invalid slots {(a, b)} for a diagram with {n2} endpoints")
            at.setdefault(a, []).append(Interval(i, 0))
            at.setdefault(b, []).append(Interval(i, 1))
        layout: list = list(at.get(0, []))
        for pos, tok in enumerate(base.endpoints(), start=1):
            layout.append(tok)
            layout.extend(at.get(pos, []))
        return cls(tuple(layout), tuple(axes))

    def evaluate_blocks(self, blocks: Sequence[Sequence[BlockArrow]]) -> LongGaussDiagram:
        """Fill every pair with an explicit block of arrows."""
        tokens = []
        for item in self.layout:
            if isinstance(item, Interval):
                block = blocks[item.axis]
                order = range(len(block))
                if item.side == 1 and self.axes[item.axis].order == "B":
                    order = reversed(order)
                for j in order:
                    a = block[j]
                    over_in_a = a.direction == "R"
                    kind = "O" if over_in_a == (item.side == 0) else "U"
                    tokens.append((("axis", item.axis, j), kind, a.sign, a.mark))
            else:
                key, kind, sign, mark = item
                tokens.append((("base", key), kind, sign, mark))
        return LongGaussDiagram.from_endpoints(tokens)

    def __call__(self, z: Sequence[int]) -> LongGaussDiagram:
        return lattice_eval(self, z)


def lattice_eval(L: TwistLattice, z: Sequence[int]) -> LongGaussDiagram:
    z = tuple(z)
    if len(z) != L.dim:
        raise ValueError(f"point has {len(z)} coordinates, lattice has {L.dim}")
    return L.evaluate_blocks([axis_block(t, zi) for t, zi in zip(L.axes, z)])


def fractional_family(n: int) -> LongGaussDiagram:
    """The interleaved two-strand fractional twist family.

    For ``n >= 1`` the endpoint word is ``X_1..X_n Y_1..Y_n`` with ``X_i = O``
    for odd ``i`` and ``U`` for even ``i`` (``Y_i`` the opposite), all signed
    ``+``; ``n = 3`` is the long right-handed trefoil. ``n = 0`` is the empty
    diagram and ``n = -1`` a single negative arrow.
    """
    if n < -1:
        raise ValueError("the family is defined for n >= -1")
    if n == -1:
        return parse_gauss_code("U1- O1-")
    tokens = []
    for i in range(1, n + 1):
        tokens.append((i, "O" if i % 2 else "U", 1, CLASSICAL))
    for i in range(1, n + 1):
        tokens.append((i, "U" if i % 2 else "O", 1, CLASSICAL))
    return LongGaussDiagram.from_endpoints(tokens)


# name kept for the original interface
figure5 = fractional_family


def family_lattice() -> TwistLattice:
    """One ``FSR`` axis on the empty diagram; agrees with :func:`fractional_family` up to
    reversing arrows (which the Jones-Kauffman polynomial does not see)."""
    return TwistLattice((Interval(0, 0), Interval(0, 1)), (TwistAxisType("F", "S", "R"),))


def _replace_arrows_by_pairs(d: LongGaussDiagram, chosen: list[int]) -> tuple:
    slot = {i: axis for axis, i in enumerate(chosen)}
    layout = []
    seen = set()
    for i, kind, sign, mark in d.endpoints():
        if i in slot:
            side = 1 if i in seen else 0
            seen.add(i)
            layout.append(Interval(slot[i], side))
        else:
            layout.append((i, kind, sign, mark))
    return tuple(layout)


def integrate_chords(K: LongGaussDiagram) -> tuple[TwistLattice, MultiIndex]:
    """Regular lattice ``Phi_K`` with ``d^{(1..1),(+..+)} Phi_K(0) = K``.

    Every chord becomes an ``OSZ`` axis, ``Z`` being the direction of the
    chord's positive resolution; other arrows stay in the base.
    """
    chosen = [i for i, a in enumerate(K.arrows) if a.mark == CHORD]
    if not chosen:
        raise ValueError("diagram has no chords")
    axes = []
    for i in chosen:
        a = K.arrows[i]
        plus_right = a.points_right if a.sign > 0 else not a.points_right
        axes.append(TwistAxisType("O", "S", "R" if plus_right else "L"))
    lattice = TwistLattice(_replace_arrows_by_pairs(K, chosen), tuple(axes))
    return lattice, MultiIndex.ones((1,) * len(chosen))


def integrate_dashed(D: LongGaussDiagram) -> tuple[TwistLattice, MultiIndex]:
    """Fractional lattice ``Phi_D`` with ``I(d^{nu alpha} Phi_D(0)) = (-1)^{#(-)} D``.

    Arrow ``i`` of ``D`` (sign ``nu_i``) gets an ``FSZ`` axis: ``Z`` is its own
    direction when ``nu_i = +`` and the opposite one when ``nu_i = -``.
    """
    if D.n == 0:
        raise ValueError("diagram has no dashed arrows")
    if any(a.mark != DASHED for a in D.arrows):
        raise ValueError("integrate_dashed needs a diagram of dashed arrows only")
    axes = []
    for a in D.arrows:
        d = "R" if a.points_right else "L"
        axes.append(TwistAxisType("F", "S", d if a.sign > 0 else _flip(d)))
    lattice = TwistLattice(_replace_arrows_by_pairs(D, list(range(D.n))), tuple(axes))
    return lattice, MultiIndex.ones(tuple(a.sign for a in D.arrows))


_AXIS_RECORD = re.compile(r"^\s*(\d+)\s*[, ]\s*(\d+)\s*[, ]\s*([A-Za-z]{3})\s*$")


def parse_lattice(text: str) -> TwistLattice:
    """Parse ``"<base gauss code>; slot_a slot_b XYZ; ..."``.

    Example: ``"; 0 0 FSR"`` is the fractional sequence on the empty diagram.
    """
    parts = text.split(";")
    base = parse_gauss_code(parts[0])
    pairs, axes = [], []
    for rec in parts[1:]:
        if not rec.strip():
            continue
        m = _AXIS_RECORD.match(rec)
        if not m:
            raise GaussCodeError(f"malformed axis record {rec.strip()!r}")
        pairs.append((int(m.group(1)), int(m.group(2))))
        try:
            axes.append(TwistAxisType.parse(m.group(3)))
        except ValueError as exc:
            raise GaussCodeError(f"bad axis type {m.group(3)!r}: {exc}") from None
    if not axes:
        raise GaussCodeError("lattice needs at least one axis record")
    try:
        return TwistLattice.from_slots(base, pairs, axes)
    except ValueError as exc:
        raise GaussCodeError(str(exc)) from None


def derivative_at(L: TwistLattice, point: Sequence[int], idx: MultiIndex,
                  value: Callable[[LongGaussDiagram], object]):
    """Shorthand for ``(d^{nu alpha} value o L)(point)``."""
    from .calculus import derivative

    return derivative(lambda z: value(lattice_eval(L, z)), idx, point)
