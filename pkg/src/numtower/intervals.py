"""Closed rational intervals with outward rounding.

Every operation returns an interval containing every exact result obtainable
from points of the operands.  Rounding only ever widens: lower endpoints go
down and upper endpoints go up, to multiples of ``2**-bits``.  There is no
floating point anywhere; square roots are bracketed through ``isqrt`` on
scaled integers.
"""

from __future__ import annotations

from dataclasses import dataclass

from .completion import Rational
from .errors import DomainError
from .naturals import isqrt

__all__ = [
    "RationalInterval",
    "point",
    "round_down",
    "round_up",
    "sqrt_floor_scaled",
    "sqrt_ceil_scaled",
    "sqrt_interval",
    "interval_sqrt",
    "decimal_down",
    "decimal_up",
]


def _q(x) -> Rational:
    return Rational.coerce(x)


def round_down(x: Rational, bits: int) -> Rational:
    """Largest multiple of ``2**-bits`` that is ``<= x``."""
    return Rational((x.numerator << bits) // x.denominator, 1 << bits)


def round_up(x: Rational, bits: int) -> Rational:
    return Rational(-((-x.numerator << bits) // x.denominator), 1 << bits)


@dataclass(frozen=True)
class RationalInterval:
    lo: Rational
    hi: Rational

    def __post_init__(self):
        lo, hi = _q(self.lo), _q(self.hi)
        if lo > hi:
            raise DomainError(f"empty interval [{lo}, {hi}]")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    @property
    def width(self) -> Rational:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Rational:
        return (self.lo + self.hi) / 2

    def is_point(self) -> bool:
        return self.lo == self.hi

    def contains(self, x) -> bool:
        x = _q(x)
        return self.lo <= x <= self.hi

    def contains_interval(self, other: "RationalInterval") -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    def intersects(self, other: "RationalInterval") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def below(self, other: "RationalInterval") -> bool:
        """Every point of self is strictly less than every point of other."""
        return self.hi < other.lo

    def excludes_zero(self) -> bool:
        return self.lo > 0 or self.hi < 0

    def round_out(self, bits: int) -> "RationalInterval":
        return RationalInterval(round_down(self.lo, bits), round_up(self.hi, bits))

    def __add__(self, other):
        if not isinstance(other, RationalInterval):
            other = point(other)
        return RationalInterval(self.lo + other.lo, self.hi + other.hi)

    __radd__ = __add__

    def __neg__(self) -> "RationalInterval":
        return RationalInterval(-self.hi, -self.lo)

    def __sub__(self, other):
        if not isinstance(other, RationalInterval):
            other = point(other)
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, RationalInterval):
            other = point(other)
        if self.lo >= 0 and other.lo >= 0:
            return RationalInterval(self.lo * other.lo, self.hi * other.hi)
        products = (self.lo * other.lo, self.lo * other.hi, self.hi * other.lo, self.hi * other.hi)
        return RationalInterval(min(products), max(products))

    __rmul__ = __mul__

    def reciprocal(self) -> "RationalInterval":
        if not self.excludes_zero():
            raise DomainError(f"interval [{self.lo}, {self.hi}] contains zero")
        return RationalInterval(self.hi.inverse(), self.lo.inverse())

    def __truediv__(self, other):
        if not isinstance(other, RationalInterval):
            other = point(other)
        return self * other.reciprocal()

    def square(self) -> "RationalInterval":
        if self.lo >= 0:
            return RationalInterval(self.lo * self.lo, self.hi * self.hi)
        if self.hi <= 0:
            return RationalInterval(self.hi * self.hi, self.lo * self.lo)
        return RationalInterval(Rational(0), max(self.lo * self.lo, self.hi * self.hi))

    def __str__(self) -> str:
        return f"[{self.lo}, {self.hi}]"

    def to_json(self) -> dict:
        return {"lo": str(self.lo), "hi": str(self.hi)}


def point(x) -> RationalInterval:
    x = _q(x)
    return RationalInterval(x, x)


def sqrt_floor_scaled(x: Rational, k: int) -> int:
    """``floor(sqrt(x) * 2**k)`` for ``x >= 0``."""
    x = _q(x)
    if x < 0:
        raise DomainError(f"square root of negative {x}")
    return isqrt((x.numerator << (2 * k)) // x.denominator)


def sqrt_ceil_scaled(x: Rational, k: int) -> int:
    x = _q(x)
    if x < 0:
        raise DomainError(f"square root of negative {x}")
    c = -((-x.numerator << (2 * k)) // x.denominator)
    r = isqrt(c)
    return r if r * r == c else r + 1


def sqrt_interval(x, bits: int) -> RationalInterval:
    """Interval of width at most ``2**-bits`` around ``sqrt(x)``."""
    if bits < 0:
        raise DomainError("bits must be non-negative")
    x = _q(x)
    den = 1 << bits
    return RationalInterval(Rational(sqrt_floor_scaled(x, bits), den), Rational(sqrt_ceil_scaled(x, bits), den))


def interval_sqrt(iv: RationalInterval, bits: int) -> RationalInterval:
    """Outward-rounded image of a non-negative interval under ``sqrt``."""
    den = 1 << bits
    return RationalInterval(Rational(sqrt_floor_scaled(iv.lo, bits), den), Rational(sqrt_ceil_scaled(iv.hi, bits), den))


def _format_scaled(n: int, digits: int) -> str:
    sign = "-" if n < 0 else ""
    s = str(abs(n)).rjust(digits + 1, "0")
    if digits == 0:
        return sign + s
    return f"{sign}{s[:-digits]}.{s[-digits:]}"


def decimal_down(x: Rational, digits: int) -> str:
    """Decimal string for the largest ``digits``-place decimal ``<= x``."""
    return _format_scaled((x.numerator * 10**digits) // x.denominator, digits)


def decimal_up(x: Rational, digits: int) -> str:
    return _format_scaled(-((-x.numerator * 10**digits) // x.denominator), digits)
