"""Constructive reals as refinable rational intervals.

A :class:`RealStream` answers ``approx(k)`` with a rational interval of
width at most ``2**-k`` that contains the real it stands for.  Arithmetic
builds new streams whose rules ask their operands for more precision until
the width contract is met.

Equality of two streams is only semi-decidable, so :func:`real_compare`
never reports "equal".  It says ``less`` or ``greater`` once the intervals
separate, or ``undecided-at-budget`` when the probe budget runs out.  A
decision, once made, can never be contradicted at another precision,
because every interval contains the true value.
"""

from __future__ import annotations

import enum
import threading
from dataclasses import dataclass
from typing import Callable, Iterable, Optional

from .anthyphairesis import CFExpansion, _convergent_pairs, cf_reconstruct
from .completion import Rational
from .errors import CannotSeparate, DomainError, PrecisionError
from .exhaustion import _rows
from .intervals import RationalInterval, point, sqrt_interval

__all__ = [
    "DEFAULT_PROBE_BUDGET",
    "RealStream",
    "Ordering",
    "Comparison",
    "probe_schedule",
    "real_from_rational",
    "real_from_cf",
    "real_sqrt",
    "real_pi",
    "real_add",
    "real_sub",
    "real_mul",
    "real_neg",
    "real_inv",
    "real_div",
    "real_compare",
    "separation",
    "archimedean_witness",
    "rational_between",
    "supremum_finite",
    "limit_of_monotone",
    "render",
]

DEFAULT_PROBE_BUDGET = 256
# how far past the requested precision an operation may push its operands
MAX_BOOST = 4096


def _eps(k: int) -> Rational:
    return Rational(1, 1 << k)


class RealStream:
    """A real number given by a rule ``k -> RationalInterval``.

    Results are memoised per precision.  Concurrent probes may both compute
    the same ``k``; the rule is deterministic, so whichever result lands in
    the cache first is identical to the other.
    """

    def __init__(self, rule: Callable[[int], RationalInterval], description: str):
        self._rule = rule
        self.description = description
        self._cache: dict[int, RationalInterval] = {}
        self._lock = threading.Lock()

    def approx(self, k: int) -> RationalInterval:
        if k < 0:
            raise DomainError("precision must be non-negative")
        cached = self._cache.get(k)
        if cached is not None:
            return cached
        iv = self._rule(k)
        if iv.width > _eps(k):
            raise PrecisionError(f"{self.description}: width {iv.width} exceeds 2^-{k}")
        with self._lock:
            return self._cache.setdefault(k, iv)

    def __add__(self, other: "RealStream") -> "RealStream":
        return real_add(self, _lift(other))

    __radd__ = __add__

    def __sub__(self, other: "RealStream") -> "RealStream":
        return real_sub(self, _lift(other))

    def __rsub__(self, other) -> "RealStream":
        return real_sub(_lift(other), self)

    def __mul__(self, other: "RealStream") -> "RealStream":
        return real_mul(self, _lift(other))

    __rmul__ = __mul__

    def __neg__(self) -> "RealStream":
        return real_neg(self)

    def __truediv__(self, other: "RealStream") -> "RealStream":
        return real_div(self, _lift(other))

    def __repr__(self) -> str:
        return f"RealStream({self.description})"


def _lift(x) -> RealStream:
    if isinstance(x, RealStream):
        return x
    return real_from_rational(Rational.coerce(x))


def _fit(k: int, compute: Callable[[int], RationalInterval], start: int, what: str) -> RationalInterval:
    """Raise operand precision from ``start`` until the result is ``2**-(k+1)`` wide.

    Rounding outward to the ``2**-(k+2)`` grid then adds at most another
    ``2**-(k+1)``.
    """
    p = max(start, k + 2)
    target = _eps(k + 1)
    while p <= k + MAX_BOOST:
        iv = compute(p)
        if iv.width <= target:
            return iv.round_out(k + 2) if not iv.is_point() else iv
        p += max(8, p - k)
    raise PrecisionError(f"{what}: no enclosure of width 2^-{k} within {MAX_BOOST} extra bits")


def _magnitude_bits(iv: RationalInterval) -> int:
    m = max(abs(iv.lo), abs(iv.hi))
    return m.ceil().bit_length()


# ---------------------------------------------------------------------------
# constructors
# ---------------------------------------------------------------------------


def real_from_rational(q: Rational) -> RealStream:
    q = Rational.coerce(q)
    iv = point(q)
    return RealStream(lambda k: iv, f"rational {q}")


def real_from_cf(e: CFExpansion) -> RealStream:
    """Bracket the value between consecutive convergents."""
    if not e.is_periodic:
        return real_from_rational(cf_reconstruct(e))

    def rule(k: int) -> RationalInterval:
        n = 2
        limit = 1 << k
        while True:
            pairs = _convergent_pairs(e, n)
            (p0, q0), (p1, q1) = pairs[-2], pairs[-1]
            if q0 * q1 >= limit:
                c0, c1 = Rational(p0, q0), Rational(p1, q1)
                return RationalInterval(min(c0, c1), max(c0, c1))
            n *= 2

    return RealStream(rule, f"continued fraction {e}")


def real_sqrt(x: Rational) -> RealStream:
    x = Rational.coerce(x)
    if x < 0:
        raise DomainError(f"square root of negative {x}")
    return RealStream(lambda k: sqrt_interval(x, k), f"sqrt({x})")


def real_pi() -> RealStream:
    """Pi from polygon doubling, refined until the polygons are close enough."""

    def rule(k: int) -> RationalInterval:
        d = k // 2 + 1
        while True:
            iv = _rows(d, max(k + 8, 16 + 4 * d), "hexagon")[-1].pi_enclosure
            if iv.width <= _eps(k):
                return iv
            d += 1

    return RealStream(rule, "pi")


# ---------------------------------------------------------------------------
# field operations
# ---------------------------------------------------------------------------


def real_add(x: RealStream, y: RealStream) -> RealStream:
    return RealStream(
        lambda k: _fit(k, lambda p: x.approx(p) + y.approx(p), k + 2, "add"),
        f"({x.description} + {y.description})",
    )


def real_neg(x: RealStream) -> RealStream:
    return RealStream(lambda k: -x.approx(k), f"-{x.description}")


def real_sub(x: RealStream, y: RealStream) -> RealStream:
    return real_add(x, real_neg(y))


def real_mul(x: RealStream, y: RealStream) -> RealStream:
    def rule(k: int) -> RationalInterval:
        extra = max(_magnitude_bits(x.approx(0)), _magnitude_bits(y.approx(0))) + 2
        return _fit(k, lambda p: x.approx(p) * y.approx(p), k + extra, "mul")

    return RealStream(rule, f"({x.description} * {y.description})")


def probe_schedule(budget: int) -> list[int]:
    """Precisions 0, 1, 2, 4, 8, ... up to and including ``budget``."""
    if budget < 0:
        raise DomainError("probe budget must be non-negative")
    ks = [0]
    k = 1
    while k < budget:
        ks.append(k)
        k *= 2
    if budget > 0:
        ks.append(budget)
    return ks


def separation(x: RealStream, budget: int = DEFAULT_PROBE_BUDGET) -> tuple[int, RationalInterval]:
    """First probed precision at which ``x`` is seen to be nonzero."""
    for k in probe_schedule(budget):
        iv = x.approx(k)
        if iv.excludes_zero():
            return k, iv
    raise CannotSeparate(f"cannot separate {x.description} from 0 within {budget} bits")


def real_inv(x: RealStream, budget: int = DEFAULT_PROBE_BUDGET) -> RealStream:
    """Reciprocal; needs a precision at which ``x`` is visibly nonzero.

    The separation is found eagerly, so a stream that never leaves zero
    fails here rather than at the first probe.
    """
    _, sep = separation(x, budget)
    m = min(abs(sep.lo), abs(sep.hi))  # |x| >= m > 0
    m_bits = m.inverse().ceil().bit_length()

    def compute(p: int) -> RationalInterval:
        iv = x.approx(p)
        # both enclose x; the intersection keeps zero out
        iv = RationalInterval(max(iv.lo, sep.lo), min(iv.hi, sep.hi))
        return iv.reciprocal()

    return RealStream(lambda k: _fit(k, compute, k + 2 * m_bits + 2, "inv"), f"1/{x.description}")


def real_div(x: RealStream, y: RealStream, budget: int = DEFAULT_PROBE_BUDGET) -> RealStream:
    return real_mul(x, real_inv(y, budget))


# ---------------------------------------------------------------------------
# order
# ---------------------------------------------------------------------------


class Ordering(str, enum.Enum):
    LESS = "less"
    GREATER = "greater"
    UNDECIDED = "undecided-at-budget"


@dataclass(frozen=True)
class Comparison:
    ordering: Ordering
    precision: int

    def to_json(self) -> dict:
        return {"ordering": self.ordering.value, "precision": self.precision}


def real_compare(x: RealStream, y: RealStream, budget: int = DEFAULT_PROBE_BUDGET) -> Comparison:
    for k in probe_schedule(budget):
        a, b = x.approx(k), y.approx(k)
        if a.below(b):
            return Comparison(Ordering.LESS, k)
        if b.below(a):
            return Comparison(Ordering.GREATER, k)
    return Comparison(Ordering.UNDECIDED, budget)


def archimedean_witness(a: RealStream, b: RealStream, budget: int = DEFAULT_PROBE_BUDGET) -> int:
    """Least ``n >= 1`` with ``a*n > b`` that the probes can certify.

    ``n`` is certified by ``lo(a)*n > hi(b)``; it is known to be least once
    ``hi(a)*(n-1) <= lo(b)``.  If minimality cannot be settled within the
    budget, the smallest certified ``n`` seen is returned.
    """
    best: Optional[int] = None
    separated = False
    for k in probe_schedule(budget):
        A, B = a.approx(k), b.approx(k)
        if A.lo <= 0:
            if A.hi < 0:
                raise DomainError(f"{a.description} is negative")
            continue
        separated = True
        n = max(B.hi / A.lo, Rational(0)).floor() + 1
        if best is None or n < best:
            best = n
        if best == 1 or A.hi * (best - 1) <= B.lo:
            return best
    if not separated:
        raise CannotSeparate(f"cannot separate {a.description} from 0 within {budget} bits")
    return best


def rational_between(a: RealStream, b: RealStream, budget: int = DEFAULT_PROBE_BUDGET) -> Rational:
    """A rational strictly between ``a < b``: the midpoint of the first visible gap."""
    for k in probe_schedule(budget):
        A, B = a.approx(k), b.approx(k)
        if A.below(B):
            return (A.hi + B.lo) / 2
        if B.below(A):
            raise DomainError(f"{a.description} is greater than {b.description}")
    raise CannotSeparate(f"cannot separate {a.description} from {b.description} within {budget} bits")


def supremum_finite(xs: Iterable[RealStream]) -> RealStream:
    """Least upper bound of a nonempty finite set, as a stream."""
    xs = list(xs)
    if not xs:
        raise DomainError("supremum of an empty set")

    def rule(k: int) -> RationalInterval:
        ivs = [x.approx(k) for x in xs]
        return RationalInterval(max(iv.lo for iv in ivs), max(iv.hi for iv in ivs))

    return RealStream(rule, "sup{" + ", ".join(x.description for x in xs) + "}")


def limit_of_monotone(
    seq: Callable[[int], Rational],
    modulus: Callable[[int], int],
    description: str = "monotone limit",
    spot_checks: int = 8,
) -> RealStream:
    """Limit of a nondecreasing rational sequence with a convergence modulus.

    ``modulus(k) = N`` promises ``limit - seq(N) <= 2**-k``.  Monotonicity
    is spot-checked on the ``spot_checks`` terms before ``N``; a decrease
    raises :class:`DomainError`.
    """

    def rule(k: int) -> RationalInterval:
        n = modulus(k)
        if n < 0:
            raise DomainError(f"modulus returned negative index {n}")
        x = Rational.coerce(seq(n))
        prev = None
        for i in range(max(0, n - spot_checks), n + 1):
            v = Rational.coerce(seq(i))
            if prev is not None and v < prev:
                raise DomainError(f"sequence decreases at index {i}: {prev} > {v}")
            prev = v
        return RationalInterval(x, x + _eps(k))

    return RealStream(rule, description)


def render(x: RealStream, digits: int) -> str:
    """Decimal within one unit in the last place, marked ``±1 ulp``."""
    if digits < 0:
        raise DomainError("digits must be non-negative")
    scale = 10**digits
    k = 1
    while (1 << k) < 4 * scale:
        k += 1
    m = x.approx(k).midpoint
    # |x - m| <= 2^-(k+1) <= 1/(8*scale), rounding adds at most 1/(2*scale)
    n = (m * scale + Rational(1, 2)).floor()
    sign = "-" if n < 0 else ""
    s = str(abs(n)).rjust(digits + 1, "0")
    body = s if digits == 0 else f"{s[:-digits]}.{s[-digits:]}"
    return f"{sign}{body} ±1 ulp"
