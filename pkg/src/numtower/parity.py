"""Pythagorean triples, the odd/even lemmas, and the descent behind incommensurability.

The six lemmas are checked over brute-forced triples rather than proved.
For a triple ``(a, b, c)`` with ``a^2 + b^2 = c^2``:

1. ``c`` even implies ``a`` and ``b`` even.
2. ``c`` even implies ``(a/2, b/2, c/2)`` is again a triple.
3. ``4 | c`` implies ``4 | a`` and ``4 | b``.
4. ``c`` odd implies exactly one of ``a``, ``b`` is odd.
5. Two of ``a, b, c`` even implies the third is even.
6. One of ``a, b, c`` odd implies exactly two are odd.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

from .errors import BudgetExceeded, DomainError
from .naturals import isqrt, natural

__all__ = [
    "Triple",
    "LEMMAS",
    "LemmaReport",
    "DescentVerdict",
    "IrrationalityWitness",
    "PebbleDiagram",
    "PEBBLE",
    "UNIT",
    "PEBBLE_BUDGET",
    "is_pythagorean",
    "pythagorean_triples",
    "check_parity_lemmas",
    "halve_triple",
    "incommensurability_descent",
    "descent_search",
    "sqrt2_irrationality_witness",
    "pebble_render",
]

PEBBLE = "∘"
UNIT = "•"
PEBBLE_BUDGET = 99


@dataclass(frozen=True)
class Triple:
    a: int
    b: int
    c: int

    def __post_init__(self):
        for v in (self.a, self.b, self.c):
            natural(v)
            if v == 0:
                raise DomainError("triple components must be positive")

    def __iter__(self):
        return iter((self.a, self.b, self.c))

    def __str__(self) -> str:
        return f"({self.a}, {self.b}, {self.c})"


def is_pythagorean(t: Triple) -> bool:
    return t.a * t.a + t.b * t.b == t.c * t.c


def pythagorean_triples(c_max: int) -> list[Triple]:
    """Every ordered triple with ``c <= c_max``; both ``(3,4,5)`` and ``(4,3,5)``."""
    out = []
    for c in range(1, c_max + 1):
        cc = c * c
        for a in range(1, c):
            rest = cc - a * a
            b = isqrt(rest)
            if b * b == rest and b > 0:
                out.append(Triple(a, b, c))
    return out


def _even(n: int) -> bool:
    return n % 2 == 0


def _lemma1(t):
    if not _even(t.c):
        return None
    return _even(t.a) and _even(t.b)


def _lemma2(t):
    if not _even(t.c):
        return None
    return is_pythagorean(halve_triple(t))


def _lemma3(t):
    if t.c % 4:
        return None
    return t.a % 4 == 0 and t.b % 4 == 0


def _lemma4(t):
    if _even(t.c):
        return None
    return _even(t.a) != _even(t.b)


def _lemma5(t):
    if sum(_even(v) for v in t) < 2:
        return None
    return all(_even(v) for v in t)


def _lemma6(t):
    odd = sum(not _even(v) for v in t)
    if odd == 0:
        return None
    return odd == 2


# each predicate returns None when its hypothesis does not apply
LEMMAS: dict[int, tuple[str, Callable[[Triple], Optional[bool]]]] = {
    1: ("c even => a and b even", _lemma1),
    2: ("c even => (a/2, b/2, c/2) is a triple", _lemma2),
    3: ("4 | c => 4 | a and 4 | b", _lemma3),
    4: ("c odd => exactly one of a, b odd", _lemma4),
    5: ("two of a, b, c even => the third even", _lemma5),
    6: ("one of a, b, c odd => exactly two odd", _lemma6),
}


@dataclass
class LemmaReport:
    lemma_id: int
    statement: str
    triples_checked: int = 0
    violations: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "lemma_id": self.lemma_id,
            "statement": self.statement,
            "triples_checked": self.triples_checked,
            "violation_count": len(self.violations),
            "violations": list(self.violations),
        }


def check_parity_lemmas(c_max: int, triples: Optional[list[Triple]] = None) -> list[LemmaReport]:
    """Check lemmas 1-6 on every triple with ``c <= c_max``.

    ``triples_checked`` counts the triples where the lemma's hypothesis applies.
    """
    natural(c_max)
    if triples is None:
        triples = pythagorean_triples(c_max)
    reports = [LemmaReport(i, stmt) for i, (stmt, _) in LEMMAS.items()]
    for t in triples:
        for rep in reports:
            verdict = LEMMAS[rep.lemma_id][1](t)
            if verdict is None:
                continue
            rep.triples_checked += 1
            if not verdict:
                rep.violations.append(str(t))
    return reports


def halve_triple(t: Triple) -> Triple:
    if any(v % 2 for v in t):
        raise DomainError(f"cannot halve {t}: a component is odd")
    return Triple(t.a // 2, t.b // 2, t.c // 2)


@dataclass
class DescentVerdict:
    a: int
    c: int
    pythagorean: bool
    chain: list[Triple]
    outcome: str
    detail: str

    def to_json(self) -> dict:
        return {
            "a": self.a,
            "c": self.c,
            "pythagorean": self.pythagorean,
            "chain": [list(t) for t in self.chain],
            "outcome": self.outcome,
            "detail": self.detail,
        }


def incommensurability_descent(a: int, c: int) -> DescentVerdict:
    """Follow the halving argument for a would-be side/diagonal pair ``(a, a, c)``.

    While ``c`` is even the triple is halved (lemmas 1 and 2).  An odd ``c``
    would make ``a`` both odd and even (lemma 4).  Since no such triple
    exists, in practice the result is ``not-pythagorean`` with the
    discrepancy ``c^2 - 2a^2`` reported.
    """
    t = Triple(a, a, c)
    if not is_pythagorean(t):
        diff = c * c - 2 * a * a
        near = " (near miss)" if abs(diff) == 1 else ""
        return DescentVerdict(
            a, c, False, [t], "not-pythagorean", f"2*{a}^2 = {2 * a * a} != {c * c} = {c}^2, difference {diff}{near}"
        )
    chain = [t]
    while t.c % 2 == 0:
        if t.a % 2:
            return DescentVerdict(a, c, True, chain, "contradiction", f"{t}: c even but a odd, against lemma 1")
        t = halve_triple(t)
        chain.append(t)
    # c odd: lemma 4 needs exactly one leg odd, impossible with equal legs
    return DescentVerdict(a, c, True, chain, "contradiction", f"{t}: c odd with equal legs, against lemma 4")


def descent_search(n: int) -> list[Triple]:
    """All ``(a, a, c)`` triples with ``a, c <= n``.  Expected to be empty.

    For each ``a`` the only candidate is ``c = isqrt(2 a^2)``, so this is
    exhaustive over all pairs.
    """
    natural(n)
    found = []
    for a in range(1, n + 1):
        s = 2 * a * a
        c = isqrt(s)
        if c <= n and c * c == s:
            found.append(Triple(a, a, c))
    return found


@dataclass(frozen=True)
class IrrationalityWitness:
    p: int
    q: int
    two_q_squared: int
    p_squared: int

    @property
    def p_squared_side(self) -> str:
        return "smaller" if self.p_squared < self.two_q_squared else "larger"

    def __str__(self) -> str:
        return (
            f"2*{self.q}^2 = {self.two_q_squared} != {self.p_squared} = {self.p}^2 "
            f"(p^2 is {self.p_squared_side})"
        )

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "q": self.q,
            "two_q_squared": self.two_q_squared,
            "p_squared": self.p_squared,
            "p_squared_side": self.p_squared_side,
        }


def sqrt2_irrationality_witness(p: int, q: int) -> IrrationalityWitness:
    """Show ``p/q`` is not a square root of 2 by exact comparison of ``2q^2`` and ``p^2``."""
    for v in (p, q):
        natural(v)
        if v == 0:
            raise DomainError("p and q must be positive")
    w = IrrationalityWitness(p, q, 2 * q * q, p * p)
    if w.two_q_squared == w.p_squared:  # pragma: no cover - impossible by the theorem
        raise AssertionError(f"{p}/{q} squares to 2")
    return w


@dataclass(frozen=True)
class PebbleDiagram:
    kind: str
    text: str
    identity: str
    holds: bool

    def to_json(self) -> dict:
        return {"kind": self.kind, "diagram": self.text, "identity": self.identity, "holds": self.holds}


def _grid(rows: list[list[str]]) -> str:
    return "\n".join(" ".join(r).rstrip() for r in rows)


def _odd_square(n: int) -> PebbleDiagram:
    # (2m+1)^2: four blocks of m*(m+1) pebbles around a single centre unit,
    # separated by blank gutters either side of the middle row and column
    m = n // 2
    cells = []
    for i in range(n):
        if i in (m, m + 1) and m > 0:
            cells.append([" "] * (n + 2))
        row = []
        for j in range(n):
            if j in (m, m + 1) and m > 0:
                row.append(" ")
            row.append(UNIT if i == j == m else PEBBLE)
        cells.append(row)
    k = m * (m + 1)
    return PebbleDiagram("odd-square", _grid(cells), f"{n}^2 = {n * n} = 4*{k} + 1", n * n == 4 * k + 1)


def _even_square(n: int) -> PebbleDiagram:
    m = n // 2
    cells = []
    for i in range(n):
        if i == m:
            cells.append([" "] * (n + 1))
        row = []
        for j in range(n):
            if j == m:
                row.append(" ")
            row.append(PEBBLE)
        cells.append(row)
    k = m * m
    return PebbleDiagram("even-square", _grid(cells), f"{n}^2 = {n * n} = 4*{k}", n * n == 4 * k)


def _sum_of_odds(value: int, multitude: int) -> PebbleDiagram:
    # each odd number is pairs of pebbles plus one unit; the units pair off
    # because their multitude is even
    pairs = (value - 1) // 2
    lines = []
    for i in range(multitude):
        body = " ".join(PEBBLE * 2 for _ in range(pairs))
        unit = UNIT + ("┐" if i % 2 == 0 else "┘")
        lines.append(f"{body}  {unit}".strip() if body else unit)
    total = value * multitude
    ident = f"{multitude}*{value} = {total} = 2*{total // 2}"
    return PebbleDiagram("sum-of-odds", "\n".join(lines), ident, total % 2 == 0)


def pebble_render(kind: str, n: int, multitude: Optional[int] = None) -> PebbleDiagram:
    """Render a pebble picture and machine-check the identity it shows.

    ``odd-square`` and ``even-square`` take the side ``n``; ``sum-of-odds``
    draws ``multitude`` (even) copies of the odd number ``n``.
    """
    natural(n)
    if n < 1:
        raise DomainError("n must be positive")
    if n > PEBBLE_BUDGET:
        raise BudgetExceeded(f"n = {n} exceeds the render budget of {PEBBLE_BUDGET}")
    if kind == "odd-square":
        if n % 2 == 0:
            raise DomainError(f"{n} is not odd")
        return _odd_square(n)
    if kind == "even-square":
        if n % 2:
            raise DomainError(f"{n} is not even")
        return _even_square(n)
    if kind == "sum-of-odds":
        if multitude is None:
            raise DomainError("sum-of-odds needs a multitude")
        natural(multitude)
        if multitude > PEBBLE_BUDGET:
            raise BudgetExceeded(f"multitude {multitude} exceeds the render budget of {PEBBLE_BUDGET}")
        if n % 2 == 0:
            raise DomainError(f"{n} is not odd")
        if multitude == 0 or multitude % 2:
            raise DomainError(f"multitude {multitude} is not a positive even number")
        return _sum_of_odds(n, multitude)
    raise DomainError(f"unknown pebble kind {kind!r}; choose odd-square, even-square or sum-of-odds")
