"""Group completion of commutative cancellation semigroups.

A pair ``(x, y)`` over a carrier ``(S, op)`` stands for "x undone by y".
Two pairs are congruent when ``x op v == y op u``; the classes form a
commutative group under componentwise ``op``.  The same machinery gives

* accounts ``m ~ n`` over ``(N+, +)``, whose classes are the integers,
* fractions ``m / n`` over ``(N+, *)``, whose classes are the positive rationals,
* signed rationals over ``(Q+, +)``.

Completion only covers one operation.  The second operation of each
instantiation (``account_mul``, ``fraction_add``) is supplied separately.

:class:`Rational` is the canonical-form view of the rationals that the rest
of the package computes with.
"""

from __future__ import annotations

import operator
import random
import re
from dataclasses import dataclass, field
from typing import Any, Callable, Optional

from .errors import DomainError
from .naturals import gcd_value, natural

__all__ = [
    "Carrier",
    "Pair",
    "CcsClass",
    "CanonInt",
    "Rational",
    "CanonRat",
    "ACCOUNTS",
    "FRACTIONS",
    "SIGNED_RATIONALS",
    "POSITIVE_SUM",
    "POSITIVE_PRODUCT",
    "pair_congruent",
    "pair_combine",
    "class_of",
    "class_inverse",
    "embed",
    "identity_class",
    "account_mul",
    "fraction_add",
    "canonicalize_int",
    "canonicalize_rat",
    "rational_of_signed_class",
    "signed_class_of",
    "rat_add",
    "rat_sub",
    "rat_mul",
    "rat_div",
    "rat_neg",
    "rat_inv",
    "parse_rational",
    "parse_account",
    "parse_fraction",
]


# ---------------------------------------------------------------------------
# Canonical rationals
# ---------------------------------------------------------------------------

_RATIONAL_TEXT = re.compile(r"\s*(?P<num>[-+]?(?:0|[1-9][0-9]*))(?:/(?P<den>[1-9][0-9]*|0))?\s*\Z")


class Rational:
    """Exact rational in lowest terms with a positive denominator."""

    __slots__ = ("_num", "_den")

    def __init__(self, numerator: int | "Rational" = 0, denominator: int = 1):
        if isinstance(numerator, Rational):
            if denominator != 1:
                raise TypeError("denominator given with a Rational numerator")
            self._num, self._den = numerator._num, numerator._den
            return
        if isinstance(numerator, bool) or not isinstance(numerator, int):
            raise TypeError(f"numerator must be int, not {type(numerator).__name__}")
        if isinstance(denominator, bool) or not isinstance(denominator, int):
            raise TypeError(f"denominator must be int, not {type(denominator).__name__}")
        if denominator == 0:
            raise DomainError("zero denominator")
        if denominator < 0:
            numerator, denominator = -numerator, -denominator
        g = gcd_value(abs(numerator), denominator)
        if g > 1:
            numerator //= g
            denominator //= g
        self._num = numerator
        self._den = denominator

    @classmethod
    def _raw(cls, num: int, den: int) -> "Rational":
        # caller guarantees lowest terms and den > 0
        r = object.__new__(cls)
        r._num = num
        r._den = den
        return r

    @property
    def numerator(self) -> int:
        return self._num

    @property
    def denominator(self) -> int:
        return self._den

    # conversions -----------------------------------------------------------

    @staticmethod
    def coerce(x: object) -> "Rational":
        if isinstance(x, Rational):
            return x
        if isinstance(x, int) and not isinstance(x, bool):
            return Rational._raw(x, 1)
        raise TypeError(f"cannot use {type(x).__name__} as an exact rational")

    def floor(self) -> int:
        return self._num // self._den

    def ceil(self) -> int:
        return -((-self._num) // self._den)

    def is_integer(self) -> bool:
        return self._den == 1

    def sign(self) -> int:
        return (self._num > 0) - (self._num < 0)

    def __int__(self) -> int:
        # truncation toward zero, like int(float)
        q = abs(self._num) // self._den
        return q if self._num >= 0 else -q

    def __float__(self) -> float:
        # display only; nothing in the package computes with floats
        return self._num / self._den

    def __bool__(self) -> bool:
        return self._num != 0

    # arithmetic ------------------------------------------------------------

    def __add__(self, other):
        try:
            o = Rational.coerce(other)
        except TypeError:
            return NotImplemented
        if self._den == o._den:
            return Rational(self._num + o._num, self._den)
        return Rational(self._num * o._den + o._num * self._den, self._den * o._den)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            o = Rational.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        try:
            o = Rational.coerce(other)
        except TypeError:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        try:
            o = Rational.coerce(other)
        except TypeError:
            return NotImplemented
        return Rational(self._num * o._num, self._den * o._den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            o = Rational.coerce(other)
        except TypeError:
            return NotImplemented
        if o._num == 0:
            raise DomainError("division by zero")
        return Rational(self._num * o._den, self._den * o._num)

    def __rtruediv__(self, other):
        try:
            o = Rational.coerce(other)
        except TypeError:
            return NotImplemented
        return o / self

    def __neg__(self) -> "Rational":
        return Rational._raw(-self._num, self._den)

    def __pos__(self) -> "Rational":
        return self

    def __abs__(self) -> "Rational":
        return Rational._raw(abs(self._num), self._den)

    def __pow__(self, n: int) -> "Rational":
        if not isinstance(n, int):
            return NotImplemented
        if n >= 0:
            return Rational._raw(self._num**n, self._den**n)
        if self._num == 0:
            raise DomainError("zero to a negative power")
        return Rational(self._den ** (-n), self._num ** (-n))

    def inverse(self) -> "Rational":
        if self._num == 0:
            raise DomainError("zero has no multiplicative inverse")
        return Rational(self._den, self._num)

    # comparison ------------------------------------------------------------

    def _cmp(self, other) -> int:
        o = Rational.coerce(other)
        lhs = self._num * o._den
        rhs = o._num * self._den
        return (lhs > rhs) - (lhs < rhs)

    def __eq__(self, other):
        if isinstance(other, Rational):
            return self._num == other._num and self._den == other._den
        if isinstance(other, int) and not isinstance(other, bool):
            return self._den == 1 and self._num == other
        return NotImplemented

    def __lt__(self, other):
        try:
            return self._cmp(other) < 0
        except TypeError:
            return NotImplemented

    def __le__(self, other):
        try:
            return self._cmp(other) <= 0
        except TypeError:
            return NotImplemented

    def __gt__(self, other):
        try:
            return self._cmp(other) > 0
        except TypeError:
            return NotImplemented

    def __ge__(self, other):
        try:
            return self._cmp(other) >= 0
        except TypeError:
            return NotImplemented

    def __hash__(self) -> int:
        if self._den == 1:
            return hash(self._num)
        return hash((self._num, self._den))

    # text ------------------------------------------------------------------

    def __str__(self) -> str:
        if self._den == 1:
            return str(self._num)
        return f"{self._num}/{self._den}"

    def __repr__(self) -> str:
        return f"Rational({self._num}, {self._den})"


CanonRat = Rational


def parse_rational(text: str) -> Rational:
    """Parse ``"p/q"`` or an integer literal.  Decimal points are rejected."""
    m = _RATIONAL_TEXT.match(text)
    if not m:
        raise DomainError(f"not a rational literal: {text!r}")
    den = int(m.group("den")) if m.group("den") is not None else 1
    if den == 0:
        raise DomainError(f"zero denominator in {text!r}")
    return Rational(int(m.group("num")), den)


def rat_add(a: Rational, b: Rational) -> Rational:
    return a + b


def rat_sub(a: Rational, b: Rational) -> Rational:
    return a - b


def rat_mul(a: Rational, b: Rational) -> Rational:
    return a * b


def rat_div(a: Rational, b: Rational) -> Rational:
    return a / b


def rat_neg(a: Rational) -> Rational:
    return -a


def rat_inv(a: Rational) -> Rational:
    return a.inverse()


# ---------------------------------------------------------------------------
# Generic completion
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Pair:
    first: Any
    second: Any


@dataclass(frozen=True, eq=False)
class Carrier:
    """A set with one binary operation, described by its behaviour.

    ``contains`` decides membership, ``sample`` draws a member for the law
    harness, and ``canonical`` (optional) maps a pair to the unique
    representative of its class.  ``identity`` is an element of the carrier
    acting as identity, if the carrier has one.
    """

    name: str
    op: Callable[[Any, Any], Any]
    contains: Callable[[Any], bool]
    sample: Callable[[random.Random], Any]
    eq: Callable[[Any, Any], bool] = operator.eq
    identity: Any = None
    canonical: Optional[Callable[[Pair], Pair]] = None
    witness: Any = None  # element used to embed x as (witness op x, witness)

    def check(self, x: Any) -> Any:
        if not self.contains(x):
            raise DomainError(f"{x!r} is not an element of {self.name}")
        return x

    def __repr__(self) -> str:
        return f"Carrier({self.name!r})"


def pair_congruent(p: Pair, q: Pair, carrier: Carrier) -> bool:
    """``(x, y) ~ (u, v)`` iff ``x op v == y op u``."""
    for c in (p.first, p.second, q.first, q.second):
        carrier.check(c)
    return carrier.eq(carrier.op(p.first, q.second), carrier.op(p.second, q.first))


def pair_combine(p: Pair, q: Pair, carrier: Carrier) -> Pair:
    return Pair(carrier.op(p.first, q.first), carrier.op(p.second, q.second))


@dataclass(frozen=True, eq=False)
class CcsClass:
    """Congruence class of pairs, stored through its canonical representative."""

    carrier: Carrier
    representative: Pair = field()

    def __post_init__(self):
        rep = self.representative
        self.carrier.check(rep.first)
        self.carrier.check(rep.second)
        if self.carrier.canonical is not None:
            object.__setattr__(self, "representative", self.carrier.canonical(rep))

    def combine(self, other: "CcsClass") -> "CcsClass":
        self._same_carrier(other)
        return CcsClass(self.carrier, pair_combine(self.representative, other.representative, self.carrier))

    def inverse(self) -> "CcsClass":
        return class_inverse(self)

    def contains(self, p: Pair) -> bool:
        return pair_congruent(self.representative, p, self.carrier)

    def _same_carrier(self, other: "CcsClass") -> None:
        if other.carrier is not self.carrier:
            raise DomainError(f"classes over {self.carrier.name} and {other.carrier.name} do not mix")

    def __eq__(self, other):
        if not isinstance(other, CcsClass):
            return NotImplemented
        return other.carrier is self.carrier and pair_congruent(
            self.representative, other.representative, self.carrier
        )

    def __hash__(self) -> int:
        if self.carrier.canonical is None:
            raise TypeError(f"classes over {self.carrier.name} have no canonical form to hash")
        return hash((self.carrier.name, self.representative))

    def __repr__(self) -> str:
        r = self.representative
        return f"[({r.first!s}, {r.second!s})]@{self.carrier.name}"


def class_of(p: Pair, carrier: Carrier) -> CcsClass:
    return CcsClass(carrier, p)


def class_inverse(c: CcsClass) -> CcsClass:
    r = c.representative
    return CcsClass(c.carrier, Pair(r.second, r.first))


def embed(x: Any, carrier: Carrier, y: Any = None) -> CcsClass:
    """The class ``[(y op x, y)]``; independent of the choice of ``y``."""
    carrier.check(x)
    if y is None:
        y = carrier.identity if carrier.identity is not None else carrier.witness
    carrier.check(y)
    return CcsClass(carrier, Pair(carrier.op(y, x), y))


def identity_class(carrier: Carrier, x: Any = None) -> CcsClass:
    if x is None:
        x = carrier.identity if carrier.identity is not None else carrier.witness
    return CcsClass(carrier, Pair(x, x))


# ---------------------------------------------------------------------------
# Instantiations
# ---------------------------------------------------------------------------


def _is_positive_int(x: Any) -> bool:
    return isinstance(x, int) and not isinstance(x, bool) and x >= 1


def _is_positive_rational(x: Any) -> bool:
    return isinstance(x, Rational) and x.numerator > 0


def _canonical_difference(p: Pair, one: Any) -> Pair:
    # (k+1, 1) for +k, (1, k+1) for -k, (1, 1) for zero
    d = p.first - p.second
    if d > 0:
        return Pair(d + one, one)
    if d < 0:
        return Pair(one, one - d)
    return Pair(one, one)


def _canonical_ratio(p: Pair) -> Pair:
    g = gcd_value(p.first, p.second)
    return Pair(p.first // g, p.second // g)


def _sample_positive(rng: random.Random) -> int:
    return rng.randint(1, 10_000)


def _sample_positive_rational(rng: random.Random) -> Rational:
    return Rational(rng.randint(1, 1000), rng.randint(1, 1000))


POSITIVE_SUM = Carrier(
    name="(N+,+)",
    op=operator.add,
    contains=_is_positive_int,
    sample=_sample_positive,
    witness=1,
)

POSITIVE_PRODUCT = Carrier(
    name="(N+,*)",
    op=operator.mul,
    contains=_is_positive_int,
    sample=_sample_positive,
    identity=1,
)

ACCOUNTS = Carrier(
    name="accounts",
    op=operator.add,
    contains=_is_positive_int,
    sample=_sample_positive,
    canonical=lambda p: _canonical_difference(p, 1),
    witness=1,
)

FRACTIONS = Carrier(
    name="fractions",
    op=operator.mul,
    contains=_is_positive_int,
    sample=_sample_positive,
    canonical=_canonical_ratio,
    identity=1,
)

SIGNED_RATIONALS = Carrier(
    name="signed-rationals",
    op=operator.add,
    contains=_is_positive_rational,
    sample=_sample_positive_rational,
    canonical=lambda p: _canonical_difference(p, Rational(1)),
    witness=Rational(1),
)


def account_mul(p: Pair, q: Pair) -> Pair:
    """``(m ~ n) * (p ~ q) = (mp + nq) ~ (mq + np)``."""
    for c in (p.first, p.second, q.first, q.second):
        ACCOUNTS.check(c)
    m, n, a, b = p.first, p.second, q.first, q.second
    return Pair(m * a + n * b, m * b + n * a)


def fraction_add(p: Pair, q: Pair) -> Pair:
    """``m/n + p/q = (mq + np) / nq``."""
    for c in (p.first, p.second, q.first, q.second):
        FRACTIONS.check(c)
    m, n, a, b = p.first, p.second, q.first, q.second
    return Pair(m * b + n * a, n * b)


@dataclass(frozen=True)
class CanonInt:
    """Sign and magnitude of an account class."""

    sign: int
    magnitude: int

    def __post_init__(self):
        natural(self.magnitude)
        if self.sign not in (-1, 0, 1) or (self.sign == 0) != (self.magnitude == 0):
            raise DomainError(f"inconsistent sign {self.sign} for magnitude {self.magnitude}")

    @classmethod
    def from_int(cls, n: int) -> "CanonInt":
        return cls((n > 0) - (n < 0), abs(n))

    def __int__(self) -> int:
        return self.sign * self.magnitude

    def __str__(self) -> str:
        return str(int(self))


def canonicalize_int(p: Pair) -> CanonInt:
    ACCOUNTS.check(p.first)
    ACCOUNTS.check(p.second)
    return CanonInt.from_int(p.first - p.second)


def canonicalize_rat(p: Pair) -> Rational:
    FRACTIONS.check(p.first)
    FRACTIONS.check(p.second)
    return Rational(p.first, p.second)


def rational_of_signed_class(c: CcsClass) -> Rational:
    """Read off the value ``x - y`` of a class over ``(Q+, +)``."""
    if c.carrier is not SIGNED_RATIONALS:
        raise DomainError("expected a class over the signed rationals")
    return c.representative.first - c.representative.second


def signed_class_of(q: Rational) -> CcsClass:
    one = Rational(1)
    if q > 0:
        return CcsClass(SIGNED_RATIONALS, Pair(q + one, one))
    return CcsClass(SIGNED_RATIONALS, Pair(one, one - q))


# ---------------------------------------------------------------------------
# Demonstration input forms
# ---------------------------------------------------------------------------

_ACCOUNT_TEXT = re.compile(r"\s*([1-9][0-9]*)\s*(?:~|⊖)\s*([1-9][0-9]*)\s*\Z")
_FRACTION_TEXT = re.compile(r"\s*([1-9][0-9]*)\s*/\s*([1-9][0-9]*)\s*\Z")


def parse_account(text: str) -> Pair:
    """Parse ``"m~n"`` or ``"m⊖n"`` with positive components."""
    m = _ACCOUNT_TEXT.match(text)
    if not m:
        raise DomainError(f"not an account literal: {text!r}")
    return Pair(int(m.group(1)), int(m.group(2)))


def parse_fraction(text: str) -> Pair:
    m = _FRACTION_TEXT.match(text)
    if not m:
        raise DomainError(f"not a fraction literal: {text!r}")
    return Pair(int(m.group(1)), int(m.group(2)))
