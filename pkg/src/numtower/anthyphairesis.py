"""Alternating subtraction: GCD traces, continued fractions, surd periods.

Each step of the trace records ``dividend = quotient * divisor + remainder``.
The quotient is the number of times the divisor is subtracted before the
remainder becomes smaller than it.  The default mode gets it by one
division.  ``literal=True`` really subtracts, which is instructive but
capped.

Whether a magnitude is commensurable with the unit cannot be decided by
waiting for a procedure not to stop.  It is handled as two checkable facts.
Rationals have finite expansions (``cf_expand`` always terminates).
Square roots of non-squares have periodic expansions (``surd_cf`` finds a
repeated state and stops).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .completion import Rational
from .errors import BudgetExceeded, DomainError
from .naturals import isqrt, natural

__all__ = [
    "Step",
    "AnthyphairesisTrace",
    "CFExpansion",
    "SurdState",
    "LITERAL_SUBTRACTION_CAP",
    "gcd",
    "coprime",
    "cf_expand",
    "cf_reconstruct",
    "surd_cf",
    "quadratic_cf",
    "convergents",
    "approximation_gap",
    "render_trace",
]

LITERAL_SUBTRACTION_CAP = 10**6


@dataclass(frozen=True)
class Step:
    dividend: int
    quotient: int
    divisor: int
    remainder: int

    def to_json(self) -> dict:
        return {
            "dividend": self.dividend,
            "quotient": self.quotient,
            "divisor": self.divisor,
            "remainder": self.remainder,
        }


@dataclass(frozen=True)
class AnthyphairesisTrace:
    steps: tuple[Step, ...]
    terminal: int
    subtractions: Optional[int] = None  # set only by literal mode

    @property
    def quotients(self) -> list[int]:
        return [s.quotient for s in self.steps]

    def to_json(self) -> list[dict]:
        return [s.to_json() for s in self.steps]


def _trace(a: int, b: int, literal: bool) -> AnthyphairesisTrace:
    steps = []
    subtractions = 0
    while b:
        if literal:
            q, r = 0, a
            while r >= b:
                r -= b
                q += 1
                subtractions += 1
                if subtractions > LITERAL_SUBTRACTION_CAP:
                    raise BudgetExceeded(
                        f"literal subtraction exceeded {LITERAL_SUBTRACTION_CAP} steps; drop --literal"
                    )
        else:
            q, r = divmod(a, b)
        steps.append(Step(a, q, b, r))
        a, b = b, r
    return AnthyphairesisTrace(tuple(steps), a, subtractions if literal else None)


def gcd(a: int, b: int, *, literal: bool = False) -> tuple[int, AnthyphairesisTrace]:
    """Greatest common measure of two positive numbers, with its trace.

    The first step divides ``a`` by ``b`` as given (so ``gcd(5, 7)`` opens
    with ``5 = 0 × 7 + 5``); this keeps the trace quotients identical to the
    continued fraction of ``a/b``.
    """
    natural(a)
    natural(b)
    if a == 0 or b == 0:
        raise DomainError("gcd needs two positive numbers")
    t = _trace(a, b, literal)
    return t.terminal, t


def coprime(a: int, b: int) -> bool:
    """True when alternating subtraction ends at the unit."""
    g, _ = gcd(a, b)
    return g == 1


@dataclass(frozen=True)
class CFExpansion:
    """``[a0; a1, a2, ...]`` with an optional repeating tail.

    A finite expansion is kept canonical: if it has more than one term, the
    last quotient is at least 2 (a trailing 1 is merged into its predecessor).
    """

    quotients: tuple[int, ...]
    periodic_tail: Optional[tuple[int, ...]] = None

    def __post_init__(self):
        qs = tuple(self.quotients)
        if not qs:
            raise DomainError("an expansion needs at least one quotient")
        if qs[0] < 0 or any(q < 1 for q in qs[1:]):
            raise DomainError(f"invalid partial quotients {list(qs)}")
        tail = self.periodic_tail
        if tail is not None:
            tail = tuple(tail)
            if not tail or any(q < 1 for q in tail):
                raise DomainError(f"invalid periodic tail {list(tail)}")
        elif len(qs) > 1 and qs[-1] == 1:
            qs = qs[:-2] + (qs[-2] + 1,)
        object.__setattr__(self, "quotients", qs)
        object.__setattr__(self, "periodic_tail", tail)

    @property
    def is_periodic(self) -> bool:
        return self.periodic_tail is not None

    def terms(self):
        """Yield partial quotients forever for periodic expansions."""
        yield from self.quotients
        if self.periodic_tail is not None:
            while True:
                yield from self.periodic_tail

    def __str__(self) -> str:
        head = self.quotients
        rest = [str(q) for q in head[1:]]
        if self.periodic_tail is not None:
            rest.append("(" + ", ".join(str(q) for q in self.periodic_tail) + ")")
        if not rest:
            return f"[{head[0]}]"
        return f"[{head[0]}; {', '.join(rest)}]"

    def to_json(self) -> dict:
        return {
            "quotients": list(self.quotients),
            "periodic_tail": list(self.periodic_tail) if self.periodic_tail is not None else None,
        }


def cf_expand(p: int, q: int) -> CFExpansion:
    natural(p)
    natural(q)
    if q == 0:
        raise DomainError("denominator must be at least 1")
    if p == 0:
        return CFExpansion((0,))
    _, t = gcd(p, q)
    return CFExpansion(tuple(t.quotients))


def cf_reconstruct(e: CFExpansion) -> Rational:
    if e.is_periodic:
        raise DomainError("a periodic expansion is not a rational number")
    num, den = 1, 0
    for a in reversed(e.quotients):
        num, den = a * num + den, num
    return Rational(num, den)


@dataclass(frozen=True)
class SurdState:
    """The tail ``(P + sqrt(D)) / Q`` still to be expanded."""

    D: int
    P: int
    Q: int

    def floor(self, root: int) -> int:
        # root = isqrt(D); sqrt(D) is irrational so the floor never lands on an integer
        if self.Q > 0:
            return (self.P + root) // self.Q
        return -((self.P + root) // -self.Q) - 1

    def next(self, a: int) -> "SurdState":
        P = a * self.Q - self.P
        return SurdState(self.D, P, (self.D - P * P) // self.Q)


def quadratic_cf(P: int, D: int, Q: int) -> tuple[CFExpansion, list[SurdState]]:
    """Expand ``(P + sqrt(D)) / Q`` for non-square ``D`` and ``Q != 0``.

    Returns the expansion (pre-period in ``quotients``, period in
    ``periodic_tail``) and the visited states.
    """
    natural(D)
    if Q == 0:
        raise DomainError("Q must be nonzero")
    root = isqrt(D)
    if root * root == D:
        raise DomainError(f"{D} is a perfect square (isqrt gives {root}); its root is rational")
    if (D - P * P) % Q:
        # scale so that Q divides D - P^2, keeping the value
        D, P, Q = D * Q * Q, P * abs(Q), Q * abs(Q)
        root = isqrt(D)
    state = SurdState(D, P, Q)
    seen: dict[tuple[int, int], int] = {}
    quotients: list[int] = []
    states: list[SurdState] = []
    while (state.P, state.Q) not in seen:
        seen[(state.P, state.Q)] = len(quotients)
        states.append(state)
        a = state.floor(root)
        quotients.append(a)
        state = state.next(a)
    start = seen[(state.P, state.Q)]
    head, tail = quotients[:start], quotients[start:]
    if not head:
        # purely periodic: show one period's first term as the head
        head, tail = [tail[0]], tail[1:] + tail[:1]
    return CFExpansion(tuple(head), tuple(tail)), states


def surd_cf(D: int) -> CFExpansion:
    """Periodic expansion of ``sqrt(D)``; ``sqrt(2)`` gives ``[1; (2)]``."""
    natural(D)
    if D < 2:
        raise DomainError(f"sqrt({D}) is rational")
    e, _ = quadratic_cf(0, D, 1)
    return e


def _convergent_pairs(e: CFExpansion, n: int) -> list[tuple[int, int]]:
    if n < 1:
        raise DomainError("need at least one convergent")
    out = []
    # standard recurrence, seeded with p_{-1}/q_{-1} = 1/0 and p_{-2}/q_{-2} = 0/1
    p, p_prev = 1, 0
    q, q_prev = 0, 1
    for i, a in enumerate(e.terms()):
        if i >= n:
            break
        p, p_prev = a * p + p_prev, p
        q, q_prev = a * q + q_prev, q
        out.append((p, q))
    return out


def convergents(e: CFExpansion, n: int) -> list[Rational]:
    """First ``n`` convergents (fewer if a finite expansion runs out)."""
    return [Rational(p, q) for p, q in _convergent_pairs(e, n)]


def approximation_gap(e: CFExpansion, k: int) -> Rational:
    """``1 / (q_k q_{k+1})``, an upper bound on ``|value - p_k/q_k|``."""
    if k < 0:
        raise DomainError("index must be non-negative")
    pairs = _convergent_pairs(e, k + 2)
    if len(pairs) < k + 2:
        raise DomainError(f"convergent {k + 1} does not exist; the expansion is exhausted")
    return Rational(1, pairs[k][1] * pairs[k + 1][1])


def render_trace(trace: AnthyphairesisTrace) -> str:
    """Boxed-table layout: one ``a = q × b + r`` row per step, terminal in parentheses."""
    rows = []
    last = len(trace.steps) - 2  # the step leaving the last nonzero remainder
    for i, s in enumerate(trace.steps):
        r = f"({s.remainder})" if i == last else str(s.remainder)
        rows.append((str(s.dividend), str(s.quotient), str(s.divisor), r))
    if not rows:
        return ""
    widths = [max(len(row[i]) for row in rows) for i in range(4)]
    lines = []
    for d, q, b, r in rows:
        lines.append(f"{d:>{widths[0]}} = {q:>{widths[1]}} × {b:>{widths[2]}} + {r}")
    return "\n".join(lines)
