"""Exhaustion as computation: polygon bounds on pi and related constructions.

Semiperimeters of regular polygons about the unit circle are squeezed
together by doubling the number of sides.  With ``a`` the circumscribed and
``b`` the inscribed semiperimeter of the n-gon::

    a_2n = 2 a_n b_n / (a_n + b_n)      (harmonic mean)
    b_2n = sqrt(a_2n b_n)               (geometric mean)

Both means are increasing in each argument, so endpoints map to endpoints
and a single outward-rounded square root per doubling keeps every bound
honest.  The hexagon is the default start because its inscribed
semiperimeter is exactly 3; a square start is available too.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .completion import Rational
from .errors import DomainError, PrecisionError
from .intervals import RationalInterval, interval_sqrt, point, sqrt_interval

__all__ = [
    "MAX_DOUBLINGS",
    "PolygonBoundsRow",
    "ZenoRow",
    "RatioVerdict",
    "HalvingVerdict",
    "ProductConstruction",
    "TheodorusVertex",
    "working_bits",
    "polygon_area",
    "pi_bounds",
    "pi_interval",
    "circle_area_bounds",
    "area_ratio_check",
    "exhaustion_halving_check",
    "zeno_table",
    "ruler_compass_product",
    "theodorus_vertices",
]

MAX_DOUBLINGS = 64
START_POLYGONS = ("hexagon", "square")


def working_bits(doublings: int, bits: int) -> int:
    return max(bits, 16 + 4 * doublings)


def polygon_area(h: Rational, p: Rational) -> Rational:
    """Half the altitude to a side times the perimeter."""
    h, p = Rational.coerce(h), Rational.coerce(p)
    if h <= 0 or p <= 0:
        raise DomainError("altitude and perimeter must be positive")
    return h * p / 2


@dataclass(frozen=True)
class PolygonBoundsRow:
    sides: int
    inscribed_semiperimeter: RationalInterval
    circumscribed_semiperimeter: RationalInterval
    bits: int

    @property
    def gap(self) -> Rational:
        return self.circumscribed_semiperimeter.hi - self.inscribed_semiperimeter.lo

    @property
    def pi_enclosure(self) -> RationalInterval:
        return RationalInterval(self.inscribed_semiperimeter.lo, self.circumscribed_semiperimeter.hi)

    def to_json(self) -> dict:
        return {
            "sides": self.sides,
            "inscribed": self.inscribed_semiperimeter.to_json(),
            "circumscribed": self.circumscribed_semiperimeter.to_json(),
            "gap": str(self.gap),
            "bits": self.bits,
        }


class _OrderViolation(Exception):
    pass


def _start(start: str, bits: int) -> tuple[int, RationalInterval, RationalInterval]:
    if start == "hexagon":
        return 6, point(3), sqrt_interval(12, bits)
    if start == "square":
        return 4, sqrt_interval(8, bits), point(4)
    raise DomainError(f"unknown start polygon {start!r}; choose from {', '.join(START_POLYGONS)}")


def _double(a: RationalInterval, b: RationalInterval, bits: int) -> tuple[RationalInterval, RationalInterval]:
    a2 = RationalInterval(
        2 * a.lo * b.lo / (a.lo + b.lo),
        2 * a.hi * b.hi / (a.hi + b.hi),
    ).round_out(bits)
    b2 = interval_sqrt(RationalInterval(a2.lo * b.lo, a2.hi * b.hi), bits)
    return a2, b2


def _rows(doublings: int, bits: int, start: str) -> list[PolygonBoundsRow]:
    sides, b, a = _start(start, bits)
    rows = [PolygonBoundsRow(sides, b, a, bits)]
    for _ in range(doublings):
        a, b = _double(a, b, bits)
        sides *= 2
        prev = rows[-1]
        if not b.below(a):
            raise _OrderViolation(f"{sides}-gon: inscribed and circumscribed bounds overlap")
        if b.lo < prev.inscribed_semiperimeter.lo or a.hi > prev.circumscribed_semiperimeter.hi:
            raise _OrderViolation(f"{sides}-gon: bounds lost monotonicity")
        rows.append(PolygonBoundsRow(sides, b, a, bits))
    return rows


def pi_bounds(doublings: int, bits: int = 64, start: str = "hexagon") -> list[PolygonBoundsRow]:
    """Rows from the start polygon through ``doublings`` side-doublings.

    Works at ``max(bits, 16 + 4*doublings)`` bits; if rounding slack breaks
    the ordering of the bounds it retries once at twice that, then gives up
    with :class:`PrecisionError`.
    """
    if not 0 <= doublings <= MAX_DOUBLINGS:
        raise DomainError(f"doublings must be between 0 and {MAX_DOUBLINGS}")
    if bits < 1:
        raise DomainError("bits must be positive")
    w = working_bits(doublings, bits)
    try:
        return _rows(doublings, w, start)
    except _OrderViolation:
        pass
    try:
        return _rows(doublings, 2 * w, start)
    except _OrderViolation as exc:
        raise PrecisionError(f"{exc} even at {2 * w} bits") from None


def pi_interval(doublings: int, bits: int = 64) -> RationalInterval:
    return pi_bounds(doublings, bits)[-1].pi_enclosure


def circle_area_bounds(r: Rational, doublings: int = 4, bits: int = 64) -> RationalInterval:
    """``pi r^2`` enclosed by the last polygon row, scaled exactly by ``r^2``."""
    r = Rational.coerce(r)
    if r <= 0:
        raise DomainError("radius must be positive")
    return pi_interval(doublings, bits) * (r * r)


@dataclass(frozen=True)
class RatioVerdict:
    ratio: RationalInterval
    expected: Rational
    holds: bool

    def to_json(self) -> dict:
        return {"ratio": self.ratio.to_json(), "expected": str(self.expected), "holds": self.holds}


def area_ratio_check(r1: Rational, r2: Rational, doublings: int = 4, bits: int = 64) -> RatioVerdict:
    """Enclose ``A(r1) / A(r2)`` and test it against the squared ratio of diameters."""
    r1, r2 = Rational.coerce(r1), Rational.coerce(r2)
    a1 = circle_area_bounds(r1, doublings, bits)
    a2 = circle_area_bounds(r2, doublings, bits)
    ratio = a1 / a2
    expected = (2 * r1 / (2 * r2)) ** 2
    return RatioVerdict(ratio, expected, ratio.contains(expected))


@dataclass
class HalvingVerdict:
    holds: bool
    pairs_checked: int
    failures: list[dict] = field(default_factory=list)

    def to_json(self) -> dict:
        return {"holds": self.holds, "pairs_checked": self.pairs_checked, "failures": self.failures}


def exhaustion_halving_check(rows: list[PolygonBoundsRow]) -> HalvingVerdict:
    """Each doubling must remove more than half of the remaining gap."""
    failures = []
    for prev, cur in zip(rows, rows[1:]):
        if not cur.gap < prev.gap / 2:
            failures.append(
                {
                    "sides": [prev.sides, cur.sides],
                    "gaps": [str(prev.gap), str(cur.gap)],
                    "bits": cur.bits,
                }
            )
    return HalvingVerdict(not failures, max(len(rows) - 1, 0), failures)


@dataclass(frozen=True)
class ZenoRow:
    n: int
    a_n: Rational
    t_n: Rational

    def to_json(self) -> dict:
        return {"n": self.n, "a_n": str(self.a_n), "t_n": str(self.t_n)}


def zeno_table(n_max: int) -> list[ZenoRow]:
    """Halving steps ``a_n = 1/2**n`` and their running sums ``t_n``."""
    if n_max < 1:
        raise DomainError("n_max must be at least 1")
    rows = []
    t = Rational(0)
    for n in range(1, n_max + 1):
        a = Rational(1, 1 << n)
        t = t + a
        rows.append(ZenoRow(n, a, t))
    return rows


Point = tuple[Rational, Rational]

# rational unit vector, so that AC has length exactly one
_OBLIQUE = (Rational(3, 5), Rational(4, 5))


def _intersect(p: Point, d: Point, q: Point, e: Point) -> Point:
    # p + s d = q + t e, solved by Cramer's rule
    det = d[0] * (-e[1]) - d[1] * (-e[0])
    if det == 0:
        raise DomainError("lines are parallel")
    rx, ry = q[0] - p[0], q[1] - p[1]
    s = (rx * (-e[1]) - ry * (-e[0])) / det
    return (p[0] + s * d[0], p[1] + s * d[1])


def _sq_dist(p: Point, q: Point) -> Rational:
    return (p[0] - q[0]) ** 2 + (p[1] - q[1]) ** 2


@dataclass(frozen=True)
class ProductConstruction:
    length: Rational
    points: dict
    verified: bool

    def to_json(self) -> dict:
        return {
            "length": str(self.length),
            "points": {k: [str(v[0]), str(v[1])] for k, v in self.points.items()},
            "verified": self.verified,
        }


def ruler_compass_product(a: Rational, b: Rational) -> ProductConstruction:
    """Multiply two lengths with a parallel line, in exact coordinates.

    ``AB = a`` lies on the x-axis; ``C`` and ``E`` sit on an oblique ray
    through ``A`` at distances 1 and ``b``; the parallel to ``BC`` through
    ``E`` meets line ``AB`` at ``D`` and ``AD = ab``.
    """
    a, b = Rational.coerce(a), Rational.coerce(b)
    if a <= 0 or b <= 0:
        raise DomainError("lengths must be positive")
    zero = Rational(0)
    A = (zero, zero)
    B = (a, zero)
    C = _OBLIQUE
    E = (b * C[0], b * C[1])
    bc = (C[0] - B[0], C[1] - B[1])
    D = _intersect(E, bc, A, (Rational(1), zero))
    ad2 = _sq_dist(A, D)
    parallel = (D[0] - E[0]) * bc[1] - (D[1] - E[1]) * bc[0] == 0
    similar = _sq_dist(A, E) * _sq_dist(A, B) == _sq_dist(A, C) * ad2
    length = D[0]
    verified = parallel and similar and length > 0 and length * length == ad2 and _sq_dist(A, C) == 1
    return ProductConstruction(length, {"A": A, "B": B, "C": C, "D": D, "E": E}, verified)


@dataclass(frozen=True)
class TheodorusVertex:
    k: int
    x: RationalInterval
    y: RationalInterval
    hypotenuse: RationalInterval

    def to_json(self) -> dict:
        return {"k": self.k, "x": self.x.to_json(), "y": self.y.to_json(), "hypotenuse": self.hypotenuse.to_json()}


def _spiral(k_max: int, w: int) -> list[TheodorusVertex]:
    x, y = point(1), point(0)
    out = []
    for k in range(1, k_max + 1):
        norm = interval_sqrt((x.square() + y.square()).round_out(w), w)
        # unit leg perpendicular to the previous hypotenuse
        nx = (x - y / norm).round_out(w)
        ny = (y + x / norm).round_out(w)
        x, y = nx, ny
        hyp = interval_sqrt((x.square() + y.square()).round_out(w), w)
        out.append(TheodorusVertex(k, x, y, hyp))
    return out


def theodorus_vertices(k_max: int, bits: int = 32) -> list[TheodorusVertex]:
    """Vertices of the spiral; the k-th hypotenuse encloses ``sqrt(k + 1)``.

    Hypotenuse intervals are at most ``2**-bits`` wide.  Working precision
    grows with ``k_max``; one retry at double the extra precision is made
    before :class:`PrecisionError`.
    """
    if k_max < 1:
        raise DomainError("k_max must be at least 1")
    if bits < 1:
        raise DomainError("bits must be positive")
    limit = Rational(1, 1 << bits)
    extra = 16 + 2 * k_max
    for w in (bits + extra, bits + 2 * extra):
        verts = _spiral(k_max, w)
        if all(v.hypotenuse.width <= limit for v in verts):
            return verts
    raise PrecisionError(f"spiral to k={k_max} did not reach 2^-{bits} width at {bits + 2 * extra} bits")
