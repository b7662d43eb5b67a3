"""Exact arithmetic used throughout the package.

Everything here is integer or :class:`fractions.Fraction` based; nothing is
ever converted to floating point.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial
from typing import Iterable, Mapping

__all__ = [
    "LaurentPoly",
    "RationalPoly",
    "TruncatedRationalSeries",
    "exp_substitute",
    "lagrange_interpolate",
    "factorial_power",
]

# exponents of A stay within a few hundred at desk scale; anything past a
# 32-bit range is a bug upstream
_EXPONENT_BOUND = 2**31 - 1


class LaurentPoly:
    """Integer Laurent polynomial in the single variable ``A``.

    Stored as an exponent -> coefficient mapping with zero coefficients
    dropped, so structural equality is polynomial equality. Instances are
    immutable and hashable.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | None = None):
        clean = {}
        if terms:
            for e, c in terms.items():
                if c:
                    clean[int(e)] = int(c)
        if clean and (max(clean) > _EXPONENT_BOUND or min(clean) < -_EXPONENT_BOUND):
            raise OverflowError("Laurent exponent out of range")
        self._terms = clean
        self._hash = None

    # -- constructors -------------------------------------------------
    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> LaurentPoly:
        return cls({exponent: coefficient})

    @classmethod
    def constant(cls, c: int) -> LaurentPoly:
        return cls({0: c})

    @classmethod
    def from_pairs(cls, pairs: Iterable[Iterable[int]]) -> LaurentPoly:
        """Inverse of :meth:`to_pairs`."""
        out: dict[int, int] = {}
        for e, c in pairs:
            out[e] = out.get(e, 0) + c
        return cls(out)

    # -- inspection ---------------------------------------------------
    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def coeff(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def max_exponent(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return max(self._terms)

    def min_exponent(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return min(self._terms)

    def to_pairs(self) -> list[tuple[int, int]]:
        """Sorted ``(exponent, coefficient)`` pairs, ascending exponent."""
        return sorted(self._terms.items())

    def evaluate(self, a):
        """Evaluate at an exact value ``a`` (int or Fraction)."""
        total = Fraction(0)
        for e, c in self._terms.items():
            total += c * Fraction(a) ** e
        return total

    # -- ring operations ----------------------------------------------
    @staticmethod
    def _coerce(other) -> LaurentPoly | None:
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly({0: other})
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials have Laurent inverses")
            ((e, c),) = self._terms.items()
            if c not in (1, -1):
                raise ValueError("monomial coefficient is not a unit")
            return LaurentPoly({e * n: c ** (-n)})
        result = LaurentPoly({0: 1})
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by ``A**k``."""
        return LaurentPoly({e + k: c for e, c in self._terms.items()})

    def divmod(self, divisor: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
        """Long division by a divisor whose leading coefficient is a unit.

        The remainder has all exponents strictly below
        ``min_exponent(self) + (deg span of divisor)``, i.e. this is the
        usual polynomial division after clearing negative powers.
        """
        if divisor.is_zero():
            raise ZeroDivisionError("division by zero Laurent polynomial")
        lead_e = divisor.max_exponent()
        lead_c = divisor._terms[lead_e]
        if lead_c not in (1, -1):
            raise ValueError("divisor leading coefficient must be +-1")
        span = lead_e - divisor.min_exponent()
        rem = dict(self._terms)
        quot: dict[int, int] = {}
        floor = min(rem) if rem else 0
        while rem:
            top = max(rem)
            if top - span < floor:
                break
            c = rem[top] * lead_c
            q_e = top - lead_e
            quot[q_e] = c
            for e, dc in divisor._terms.items():
                k = e + q_e
                v = rem.get(k, 0) - c * dc
                if v:
                    rem[k] = v
                else:
                    rem.pop(k, None)
        return LaurentPoly(quot), LaurentPoly(rem)

    def exact_div(self, divisor: LaurentPoly) -> LaurentPoly:
        q, r = self.divmod(divisor)
        if not r.is_zero():
            raise ValueError(f"{self} is not divisible by {divisor}")
        return q

    # -- protocol -----------------------------------------------------
    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def __repr__(self):
        return f"LaurentPoly({self.to_pairs()!r})"

    def __str__(self):
        return format_laurent(self)


def format_laurent(p: LaurentPoly, var: str = "A") -> str:
    """Render as ``c*A^e`` terms in descending exponent order.

    >>> format_laurent(LaurentPoly({-4: 1, -12: 1, -16: -1}))
    'A^-4 + A^-12 - A^-16'
    """
    items = sorted(p.terms.items(), reverse=True)
    if not items:
        return "0"
    parts = []
    for i, (e, c) in enumerate(items):
        mag = abs(c)
        if e == 0:
            body = str(mag)
        elif mag == 1:
            body = f"{var}^{e}"
        else:
            body = f"{mag}*{var}^{e}"
        if i == 0:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append((" + " if c > 0 else " - ") + body)
    return "".join(parts)


class RationalPoly:
    """Dense univariate polynomial with Fraction coefficients, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int:
        """Degree; ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    def coeff(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __call__(self, z) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    def __add__(self, other):
        if not isinstance(other, RationalPoly):
            other = RationalPoly([other])
        n = max(len(self.coeffs), len(other.coeffs))
        return RationalPoly(self.coeff(i) + other.coeff(i) for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return RationalPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        if not isinstance(other, RationalPoly):
            other = RationalPoly([other])
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, RationalPoly):
            return RationalPoly(c * other for c in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return RationalPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return RationalPoly(out)

    __rmul__ = __mul__

    def shift(self, n) -> RationalPoly:
        """Return the polynomial ``z -> self(z + n)``."""
        out = [Fraction(0)] * len(self.coeffs)
        for i, c in enumerate(self.coeffs):
            for j in range(i + 1):
                out[j] += c * comb(i, j) * Fraction(n) ** (i - j)
        return RationalPoly(out)

    def __eq__(self, other):
        if isinstance(other, RationalPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"RationalPoly({[str(c) for c in self.coeffs]})"


class TruncatedRationalSeries:
    """Coefficients ``c_0 .. c_K`` of a power series in ``x``, exact."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable):
        self.coeffs = tuple(Fraction(c) for c in coeffs)
        if not self.coeffs:
            raise ValueError("series needs at least the constant term")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k]

    def __len__(self):
        return len(self.coeffs)

    def __add__(self, other: TruncatedRationalSeries) -> TruncatedRationalSeries:
        if other.order != self.order:
            raise ValueError("series orders differ")
        return TruncatedRationalSeries(a + b for a, b in zip(self.coeffs, other.coeffs))

    def __mul__(self, other: TruncatedRationalSeries) -> TruncatedRationalSeries:
        if other.order != self.order:
            raise ValueError("series orders differ")
        K = self.order
        return TruncatedRationalSeries(
            sum((self.coeffs[i] * other.coeffs[k - i] for i in range(k + 1)), Fraction(0))
            for k in range(K + 1)
        )

    def __eq__(self, other):
        if isinstance(other, TruncatedRationalSeries):
            return self.coeffs == other.coeffs
        if isinstance(other, (tuple, list)):
            return self.coeffs == tuple(Fraction(c) for c in other)
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def to_strings(self) -> list[str]:
        """Serialize as ``"numerator/denominator"`` strings."""
        return [f"{c.numerator}/{c.denominator}" for c in self.coeffs]

    @classmethod
    def from_strings(cls, items: Iterable[str]) -> TruncatedRationalSeries:
        return cls(Fraction(s) for s in items)

    def __repr__(self):
        return f"TruncatedRationalSeries({self.to_strings()})"


def exp_substitute(p: LaurentPoly, order: int) -> TruncatedRationalSeries:
    """Expand ``p(e^x)`` about ``x = 0`` up to and including ``x**order``.

    The coefficient of ``x**k`` is ``sum_m c_m * m**k / k!``.
    """
    if order < 0:
        raise ValueError("order must be >= 0")
    terms = p.terms
    out = []
    for k in range(order + 1):
        s = sum(c * e**k for e, c in terms.items())
        out.append(Fraction(s, factorial(k)))
    return TruncatedRationalSeries(out)


def lagrange_interpolate(points) -> RationalPoly:
    """Exact interpolating polynomial through ``(abscissa, value)`` pairs.

    Raises ``ValueError`` for repeated abscissae.
    """
    pts = [(Fraction(x), Fraction(y)) for x, y in points]
    xs = [x for x, _ in pts]
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation abscissae must be pairwise distinct")
    result = RationalPoly()
    for i, (xi, yi) in enumerate(pts):
        basis = RationalPoly([1])
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j != i:
                basis = basis * RationalPoly([-xj, 1])
                denom *= xi - xj
        result = result + basis * (yi / denom)
    return result


def factorial_power(z: int, alpha: int, nu: int = 1) -> int:
    """Falling (``nu=+1``) or rising (``nu=-1``) factorial power of ``z``."""
    if alpha < 0:
        raise ValueError("alpha must be nonnegative")
    step = -1 if nu > 0 else 1
    out = 1
    for i in range(alpha):
        out *= z + step * i
    return out
