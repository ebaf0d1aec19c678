"""Randomised law harness for the completions and for the rationals.

Every check draws its samples from ``random.Random(seed)``, so a run is
reproducible from ``(suite, seed, samples)``.  A check either expects the
law to hold (no counterexample may be found) or expects it to fail (a
structure known to lack an identity or inverses must not produce one).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .completion import (
    ACCOUNTS,
    FRACTIONS,
    POSITIVE_PRODUCT,
    POSITIVE_SUM,
    SIGNED_RATIONALS,
    Carrier,
    CcsClass,
    Pair,
    Rational,
    account_mul,
    canonicalize_int,
    canonicalize_rat,
    embed,
    fraction_add,
    identity_class,
    pair_combine,
    pair_congruent,
    rational_of_signed_class,
)
from .errors import DomainError

SUITES = ("ccs", "group", "field", "ordered-field")
DEFAULT_SAMPLES = 1000
MAX_COUNTEREXAMPLES = 5


@dataclass
class LawCheck:
    suite: str
    structure: str
    law: str
    expect: str  # "holds" or "fails"
    samples: int = 0
    counterexamples: list[str] = field(default_factory=list)
    note: str = ""

    @property
    def found_violation(self) -> bool:
        return bool(self.counterexamples)

    @property
    def passed(self) -> bool:
        return self.found_violation == (self.expect == "fails")

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "structure": self.structure,
            "law": self.law,
            "expect": self.expect,
            "samples": self.samples,
            "passed": self.passed,
            "counterexamples": list(self.counterexamples),
            "note": self.note,
        }


def _check(suite, structure, law, samples, trial: Callable[[], str | None], expect="holds") -> LawCheck:
    """Run *trial* ``samples`` times; a non-None return is a counterexample."""
    result = LawCheck(suite, structure, law, expect, samples)
    for _ in range(samples):
        bad = trial()
        if bad is not None:
            result.counterexamples.append(bad)
            if len(result.counterexamples) >= MAX_COUNTEREXAMPLES:
                break
    return result


def _rand_pair(carrier: Carrier, rng: random.Random) -> Pair:
    return Pair(carrier.sample(rng), carrier.sample(rng))


def _congruent_copy(p: Pair, carrier: Carrier, rng: random.Random) -> Pair:
    # (x, y) * (z, z) is congruent to (x, y) by cancellation
    z = carrier.sample(rng)
    return pair_combine(p, Pair(z, z), carrier)


# ---------------------------------------------------------------------------
# ccs suite
# ---------------------------------------------------------------------------


def _ccs_checks(rng: random.Random, n: int) -> list[LawCheck]:
    out = []
    for carrier in (ACCOUNTS, FRACTIONS, SIGNED_RATIONALS):
        s, op, eq = carrier.sample, carrier.op, carrier.eq
        name = carrier.name

        def closure(c=carrier, s=s, op=op):
            a, b = s(rng), s(rng)
            return None if c.contains(op(a, b)) else f"{a} o {b} leaves the carrier"

        def commutative(s=s, op=op, eq=eq):
            a, b = s(rng), s(rng)
            return None if eq(op(a, b), op(b, a)) else f"{a}, {b}"

        def associative(s=s, op=op, eq=eq):
            a, b, c = s(rng), s(rng), s(rng)
            return None if eq(op(op(a, b), c), op(a, op(b, c))) else f"{a}, {b}, {c}"

        def cancellative(s=s, op=op, eq=eq):
            a, b = s(rng), s(rng)
            # c is a near neighbour of b so that a collision would be visible
            c = op(b, s(rng)) if rng.random() < 0.5 else b
            if eq(op(a, b), op(a, c)) and not eq(b, c):
                return f"{a} o {b} == {a} o {c}"
            return None

        def reflexive(c=carrier):
            p = _rand_pair(c, rng)
            return None if pair_congruent(p, p, c) else str(p)

        def symmetric(c=carrier):
            p = _rand_pair(c, rng)
            q = _congruent_copy(p, c, rng) if rng.random() < 0.5 else _rand_pair(c, rng)
            return None if pair_congruent(p, q, c) == pair_congruent(q, p, c) else f"{p}, {q}"

        def transitive(c=carrier):
            p = _rand_pair(c, rng)
            q = _congruent_copy(p, c, rng)
            r = _congruent_copy(q, c, rng)
            if pair_congruent(p, q, c) and pair_congruent(q, r, c) and not pair_congruent(p, r, c):
                return f"{p}, {q}, {r}"
            return None

        def well_defined(c=carrier):
            p, q = _rand_pair(c, rng), _rand_pair(c, rng)
            p2, q2 = _congruent_copy(p, c, rng), _congruent_copy(q, c, rng)
            lhs, rhs = pair_combine(p, q, c), pair_combine(p2, q2, c)
            return None if pair_congruent(lhs, rhs, c) else f"{p}~{p2}, {q}~{q2}"

        for law, fn in [
            ("closure", closure),
            ("commutativity", commutative),
            ("associativity", associative),
            ("cancellation", cancellative),
            ("congruence reflexive", reflexive),
            ("congruence symmetric", symmetric),
            ("congruence transitive", transitive),
            ("combine respects congruence", well_defined),
        ]:
            out.append(_check("ccs", name, law, n, fn))

    def account_mul_well_defined():
        p, q = _rand_pair(ACCOUNTS, rng), _rand_pair(ACCOUNTS, rng)
        p2, q2 = _congruent_copy(p, ACCOUNTS, rng), _congruent_copy(q, ACCOUNTS, rng)
        ok = pair_congruent(account_mul(p, q), account_mul(p2, q2), ACCOUNTS)
        return None if ok else f"{p}~{p2}, {q}~{q2}"

    def account_mul_matches_integers():
        p, q = _rand_pair(ACCOUNTS, rng), _rand_pair(ACCOUNTS, rng)
        got = int(canonicalize_int(account_mul(p, q)))
        want = int(canonicalize_int(p)) * int(canonicalize_int(q))
        return None if got == want else f"{p} * {q} -> {got}, expected {want}"

    def fraction_add_well_defined():
        p, q = _rand_pair(FRACTIONS, rng), _rand_pair(FRACTIONS, rng)
        p2, q2 = _congruent_copy(p, FRACTIONS, rng), _congruent_copy(q, FRACTIONS, rng)
        ok = pair_congruent(fraction_add(p, q), fraction_add(p2, q2), FRACTIONS)
        return None if ok else f"{p}~{p2}, {q}~{q2}"

    def fraction_add_matches_rationals():
        p, q = _rand_pair(FRACTIONS, rng), _rand_pair(FRACTIONS, rng)
        got = canonicalize_rat(fraction_add(p, q))
        want = canonicalize_rat(p) + canonicalize_rat(q)
        return None if got == want else f"{p} + {q} -> {got}, expected {want}"

    out.append(_check("ccs", "accounts", "account_mul respects congruence", n, account_mul_well_defined))
    out.append(_check("ccs", "accounts", "account_mul agrees with integer product", n, account_mul_matches_integers))
    out.append(_check("ccs", "fractions", "fraction_add respects congruence", n, fraction_add_well_defined))
    out.append(_check("ccs", "fractions", "fraction_add agrees with rational sum", n, fraction_add_matches_rationals))
    return out


# ---------------------------------------------------------------------------
# group suite
# ---------------------------------------------------------------------------


def _group_checks(rng: random.Random, n: int) -> list[LawCheck]:
    out = []
    for carrier, label in ((ACCOUNTS, "(Z,+)"), (FRACTIONS, "(Q+,*)"), (SIGNED_RATIONALS, "(Q,+)")):

        def cls(c=carrier):
            return CcsClass(c, _rand_pair(c, rng))

        def identity(c=carrier):
            a = cls()
            e = identity_class(c, c.sample(rng))
            return None if e.combine(a) == a and a.combine(e) == a else repr(a)

        def inverse(c=carrier):
            a = cls()
            e = identity_class(c)
            return None if a.combine(a.inverse()) == e and a.inverse().combine(a) == e else repr(a)

        def associative():
            a, b, c = cls(), cls(), cls()
            return None if a.combine(b).combine(c) == a.combine(b.combine(c)) else f"{a!r}, {b!r}, {c!r}"

        def commutative():
            a, b = cls(), cls()
            return None if a.combine(b) == b.combine(a) else f"{a!r}, {b!r}"

        def embed_hom(c=carrier):
            x, y = c.sample(rng), c.sample(rng)
            lhs = embed(c.op(x, y), c)
            rhs = embed(x, c).combine(embed(y, c))
            return None if lhs == rhs else f"{x}, {y}"

        def canonical_unique(c=carrier):
            p = _rand_pair(c, rng)
            q = _congruent_copy(p, c, rng) if rng.random() < 0.5 else _rand_pair(c, rng)
            same_rep = c.canonical(p) == c.canonical(q)
            idem = c.canonical(c.canonical(p)) == c.canonical(p)
            ok = idem and same_rep == pair_congruent(p, q, c)
            return None if ok else f"{p}, {q}"

        for law, fn in [
            ("identity", identity),
            ("inverse", inverse),
            ("associativity", associative),
            ("commutativity", commutative),
            ("embedding is a homomorphism", embed_hom),
            ("canonical form unique per class", canonical_unique),
        ]:
            out.append(_check("group", label, law, n, fn))

    def signed_matches_rational():
        a = CcsClass(SIGNED_RATIONALS, _rand_pair(SIGNED_RATIONALS, rng))
        b = CcsClass(SIGNED_RATIONALS, _rand_pair(SIGNED_RATIONALS, rng))
        got = rational_of_signed_class(a.combine(b))
        want = rational_of_signed_class(a) + rational_of_signed_class(b)
        return None if got == want else f"{a!r} + {b!r}"

    out.append(_check("group", "(Q,+)", "class sum agrees with Rational addition", n, signed_matches_rational))
    out.extend(structure_table(rng, min(n, 200)))
    return out


def _search_identity(carrier: Carrier, rng: random.Random, samples: int, bound: int):
    xs = [carrier.sample(rng) for _ in range(samples)]
    for e in range(1, bound + 1):
        if all(carrier.eq(carrier.op(e, x), x) for x in xs):
            return e
    return None


def structure_table(rng: random.Random, samples: int, bound: int = 200) -> list[LawCheck]:
    """Presence/absence of identity and inverses across the four structures.

    For the positive naturals the search is exhaustive over ``1..bound``;
    for the completions the witness is the identity class and the swapped
    pair.
    """
    out = []
    for carrier, label, has_identity in ((POSITIVE_SUM, "(N+,+)", False), (POSITIVE_PRODUCT, "(N+,*)", True)):
        e = _search_identity(carrier, rng, samples, bound)
        chk = LawCheck("group", label, "identity element exists", "holds" if has_identity else "fails", samples)
        if e is None:
            chk.counterexamples.append(f"no identity in 1..{bound}")
        else:
            chk.note = f"identity {e}"
        out.append(chk)

        chk = LawCheck("group", label, "inverses exist", "fails", samples)
        if e is None:
            chk.counterexamples.append("no identity to invert to")
        else:
            for _ in range(samples):
                a = carrier.sample(rng)
                if a == e:
                    continue
                if not any(carrier.op(a, b) == e for b in range(1, bound + 1)):
                    chk.counterexamples.append(f"{a} has no inverse in 1..{bound}")
                    break
        out.append(chk)

    for carrier, label in ((ACCOUNTS, "(Z,+)"), (FRACTIONS, "(Q+,*)")):
        e = identity_class(carrier)
        chk = LawCheck("group", label, "identity element exists", "holds", samples, note=repr(e))
        for _ in range(samples):
            a = CcsClass(carrier, _rand_pair(carrier, rng))
            if e.combine(a) != a:
                chk.counterexamples.append(repr(a))
                break
        out.append(chk)
        chk = LawCheck("group", label, "inverses exist", "holds", samples)
        for _ in range(samples):
            a = CcsClass(carrier, _rand_pair(carrier, rng))
            if a.combine(a.inverse()) != e:
                chk.counterexamples.append(repr(a))
                break
        out.append(chk)
    return out


# ---------------------------------------------------------------------------
# field and ordered-field suites over Q
# ---------------------------------------------------------------------------


def _rand_rational(rng: random.Random) -> Rational:
    return Rational(rng.randint(-1000, 1000), rng.randint(1, 1000))


def _field_checks(rng: random.Random, n: int) -> list[LawCheck]:
    zero, one = Rational(0), Rational(1)

    def triple():
        return _rand_rational(rng), _rand_rational(rng), _rand_rational(rng)

    def law(pred):
        def trial():
            a, b, c = triple()
            return None if pred(a, b, c) else f"a={a}, b={b}, c={c}"

        return trial

    def mul_inverse(a, b, c):
        if a == zero:
            try:
                a.inverse()
            except DomainError:
                return True
            return False
        return a * a.inverse() == one

    laws_: list[tuple[str, Callable]] = [
        ("addition associative", lambda a, b, c: (a + b) + c == a + (b + c)),
        ("addition commutative", lambda a, b, c: a + b == b + a),
        ("multiplication associative", lambda a, b, c: (a * b) * c == a * (b * c)),
        ("multiplication commutative", lambda a, b, c: a * b == b * a),
        ("distributivity", lambda a, b, c: a * (b + c) == a * b + a * c),
        ("additive identity", lambda a, b, c: a + zero == a),
        ("multiplicative identity", lambda a, b, c: a * one == a),
        ("additive inverse", lambda a, b, c: a + (-a) == zero),
        ("multiplicative inverse", mul_inverse),
    ]
    return [_check("field", "(Q,+,*)", name, n, law(pred)) for name, pred in laws_]


def _ordered_checks(rng: random.Random, n: int) -> list[LawCheck]:
    zero = Rational(0)

    def pick():
        # small range so that ties a == b actually occur
        if rng.random() < 0.2:
            return Rational(rng.randint(-3, 3), rng.randint(1, 3))
        return _rand_rational(rng)

    def trichotomy():
        a, b = pick(), pick()
        return None if [a < b, a == b, b < a].count(True) == 1 else f"{a}, {b}"

    def transitive():
        a, b, c = sorted((pick(), pick(), pick()))
        if a < b and b < c and not a < c:
            return f"{a}, {b}, {c}"
        return None

    def positive_closed():
        a, b = abs(pick()) + Rational(1, 1000), abs(pick()) + Rational(1, 1000)
        return None if zero < a + b and zero < a * b else f"{a}, {b}"

    def order_by_difference():
        a, b = pick(), pick()
        return None if (a < b) == (zero < b + (-a)) else f"{a}, {b}"

    return [
        _check("ordered-field", "(Q,<)", "trichotomy", n, trichotomy),
        _check("ordered-field", "(Q,<)", "transitivity", n, transitive),
        _check("ordered-field", "(Q,<)", "positives closed under + and *", n, positive_closed),
        _check("ordered-field", "(Q,<)", "a < b iff 0 < b - a", n, order_by_difference),
    ]


_RUNNERS = {
    "ccs": _ccs_checks,
    "group": _group_checks,
    "field": _field_checks,
    "ordered-field": _ordered_checks,
}


def run_suite(suite: str, seed: int = 0, samples: int = DEFAULT_SAMPLES) -> list[LawCheck]:
    if suite not in _RUNNERS:
        raise DomainError(f"unknown law suite {suite!r}; choose from {', '.join(SUITES)}")
    if samples < 1:
        raise DomainError("samples must be positive")
    # each suite gets its own stream so that suites are reproducible in isolation
    rng = random.Random(f"{suite}:{seed}")
    return _RUNNERS[suite](rng, samples)


def run_suites(suites: Iterable[str] = SUITES, seed: int = 0, samples: int = DEFAULT_SAMPLES) -> list[LawCheck]:
    out: list[LawCheck] = []
    for s in suites:
        out.extend(run_suite(s, seed, samples))
    return out
