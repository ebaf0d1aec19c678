"""Command-line entry point: ``numtower <subcommand> [args] [flags]``.

Exit codes: 0 success, 1 domain error (one line ``error: <kind>: <reason>``
on stderr, or a JSON error document with ``--json``), 2 usage error.
Numeric arguments are parsed as exact naturals or rationals; ``sqrt:D``
names a square root where a real is accepted.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Callable, Optional

from . import anthyphairesis as anth
from . import exhaustion as exh
from . import laws
from . import parity
from . import reals
from .completion import Rational, parse_rational
from .errors import DomainError
from .intervals import decimal_down, decimal_up, sqrt_interval
from .naturals import parse_natural

PROG = "numtower"

# name -> (summary, example argv); every example must run (tests enforce it)
COMMANDS: dict[str, tuple[str, list[str]]] = {
    "gcd": ("greatest common measure by alternating subtraction", ["gcd", "136", "6", "--trace"]),
    "coprime": ("are two numbers prime to one another", ["coprime", "17", "3"]),
    "cf": ("continued fraction of p/q", ["cf", "17/3"]),
    "cf-reconstruct": ("fold partial quotients back into p/q", ["cf-reconstruct", "5", "1", "2"]),
    "surd": ("periodic continued fraction of sqrt(D)", ["surd", "2"]),
    "convergents": ("convergents with error bounds", ["convergents", "sqrt:2", "--max", "5"]),
    "triples": ("Pythagorean triples and the parity lemmas", ["triples", "--max", "20"]),
    "descent": ("side/diagonal descent; search mode without arguments", ["descent", "12", "17"]),
    "pebble": ("pebble diagrams: odd-square N, even-square N, sum-of-odds N M", ["pebble", "odd-square", "5"]),
    "pi": ("polygon-doubling bounds on pi", ["pi", "--doublings", "4", "--digits", "6"]),
    "area": ("bounds on the area of a circle of radius R", ["area", "2", "--digits", "6"]),
    "ratio-areas": ("circle areas against squared diameters", ["ratio-areas", "1", "2"]),
    "halving-check": ("each doubling removes more than half the gap", ["halving-check", "--doublings", "10"]),
    "zeno": ("partial sums of 1/2 + 1/4 + ...", ["zeno", "--max", "5"]),
    "ruler-product": ("multiply two lengths with a parallel line", ["ruler-product", "3/2", "4/3"]),
    "theodorus": ("vertices of the spiral of square roots", ["theodorus", "--max", "16", "--digits", "6"]),
    "real": (
        "constructive reals: add|mul|compare|between|archimedean|sup X Y...",
        ["real", "between", "sqrt:2", "3/2"],
    ),
    "laws": ("algebraic law suites: ccs|group|field|ordered-field|all", ["laws", "field", "--max", "100"]),
    "help": ("list subcommands with examples", ["help"]),
}

REAL_VERBS = ("add", "mul", "compare", "between", "archimedean", "sup")


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------


def _nat(text: str) -> int:
    try:
        return parse_natural(text)
    except DomainError as exc:
        raise UsageError(str(exc)) from None


def _rat(text: str) -> Rational:
    try:
        return parse_rational(text)
    except DomainError as exc:
        raise UsageError(str(exc)) from None


_RAW_FRACTION = re.compile(r"\s*(0|[1-9][0-9]*)(?:/([1-9][0-9]*))?\s*\Z")
_SURD = re.compile(r"\s*sqrt:(0|[1-9][0-9]*)\s*\Z")


def _raw_fraction(text: str) -> tuple[int, int]:
    # kept unreduced so that 22/6 traces 22 against 6
    m = _RAW_FRACTION.match(text)
    if not m:
        raise UsageError(f"expected p/q with natural p and positive q, got {text!r}")
    return int(m.group(1)), int(m.group(2) or 1)


def _real(text: str) -> reals.RealStream:
    m = _SURD.match(text)
    if m:
        return reals.real_sqrt(Rational(int(m.group(1))))
    return reals.real_from_rational(_rat(text))


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit one JSON document")
    common.add_argument("--bits", type=int, default=None, help="working precision / probe budget in bits")
    common.add_argument("--doublings", type=int, default=None, help="number of side doublings")
    common.add_argument("--max", type=int, default=None, help="upper bound or sample count")
    common.add_argument("--digits", type=int, default=None, help="decimal digits, rounded outward")
    common.add_argument("--seed", type=int, default=None, help="seed for sampled law suites")
    common.add_argument("--trace", action="store_true", help="show the subtraction trace")
    common.add_argument("--literal", action="store_true", help="subtract one at a time (capped)")

    parser = argparse.ArgumentParser(prog=PROG, description="Exact number-tower arithmetic and exhaustion bounds.")
    sub = parser.add_subparsers(dest="command", metavar="<subcommand>")
    sub.required = True
    for name, (summary, _) in COMMANDS.items():
        p = sub.add_parser(name, parents=[common], help=summary, description=summary)
        p.add_argument("args", nargs="*")
    return parser


# ---------------------------------------------------------------------------
# commands: each returns (text, json_document)
# ---------------------------------------------------------------------------

Result = tuple[str, dict]


def _need(args: list[str], n: int, usage: str, at_most: Optional[int] = None) -> None:
    hi = n if at_most is None else at_most
    if not n <= len(args) <= hi:
        raise UsageError(f"usage: {PROG} {usage}")


def cmd_gcd(ns) -> Result:
    _need(ns.args, 2, "gcd A B [--trace] [--literal]")
    a, b = _nat(ns.args[0]), _nat(ns.args[1])
    g, trace = anth.gcd(a, b, literal=ns.literal)
    lines = []
    if ns.trace or ns.literal:
        lines.append(anth.render_trace(trace))
    lines.append(f"gcd({a}, {b}) = {g}")
    if trace.subtractions is not None:
        lines.append(f"subtractions: {trace.subtractions}")
    doc = {"a": a, "b": b, "gcd": g, "trace": trace.to_json(), "subtractions": trace.subtractions}
    return "\n".join(lines), doc


def cmd_coprime(ns) -> Result:
    _need(ns.args, 2, "coprime A B")
    a, b = _nat(ns.args[0]), _nat(ns.args[1])
    g, trace = anth.gcd(a, b)
    if g == 1:
        text = f"{a} and {b} are prime to one another"
    else:
        text = f"{a} and {b} are not prime to one another; greatest common measure {g}"
    if ns.trace:
        text = anth.render_trace(trace) + "\n" + text
    return text, {"a": a, "b": b, "coprime": g == 1, "gcd": g, "trace": trace.to_json()}


def cmd_cf(ns) -> Result:
    _need(ns.args, 1, "cf P/Q")
    p, q = _raw_fraction(ns.args[0])
    e = anth.cf_expand(p, q)
    trace = anth.gcd(p, q)[1].to_json() if p else []
    text = str(e)
    if ns.trace and p:
        text = anth.render_trace(anth.gcd(p, q)[1]) + "\n" + text
    return text, {"input": f"{p}/{q}", **e.to_json(), "trace": trace}


_QUOTIENT_TOKEN = re.compile(r"[0-9]+")


def cmd_cf_reconstruct(ns) -> Result:
    if not ns.args:
        raise UsageError(f"usage: {PROG} cf-reconstruct A0 A1 ...  (or \"[a0; a1, ...]\")")
    tokens = _QUOTIENT_TOKEN.findall(" ".join(ns.args))
    if not tokens or re.search(r"[^0-9\s\[\];,]", " ".join(ns.args)):
        raise UsageError("partial quotients must be natural numbers")
    e = anth.CFExpansion(tuple(int(t) for t in tokens))
    r = anth.cf_reconstruct(e)
    return str(r), {"quotients": list(e.quotients), "value": str(r)}


def _surd_arg(text: str) -> int:
    m = _SURD.match(text)
    return int(m.group(1)) if m else _nat(text)


def cmd_surd(ns) -> Result:
    _need(ns.args, 1, "surd D")
    D = _surd_arg(ns.args[0])
    e = anth.surd_cf(D)
    doc = {"D": D, **e.to_json(), "period_length": len(e.periodic_tail)}
    return f"sqrt({D}) = {e}", doc


def cmd_convergents(ns) -> Result:
    _need(ns.args, 1, "convergents P/Q|sqrt:D [--max N] [--bits B]")
    n = ns.max if ns.max is not None else 5
    bits = ns.bits if ns.bits is not None else 64
    if n < 1:
        raise UsageError("--max must be at least 1")
    m = _SURD.match(ns.args[0])
    if m:
        D = int(m.group(1))
        e = anth.surd_cf(D)
        enclosure = sqrt_interval(D, bits)
    else:
        p, q = _raw_fraction(ns.args[0])
        e = anth.cf_expand(p, q)
        enclosure = None
    cs = anth.convergents(e, n)
    rows = []
    for k, c in enumerate(cs):
        row = {"k": k, "convergent": str(c), "gap": None, "verified": None}
        try:
            gap = anth.approximation_gap(e, k)
        except DomainError:
            gap = None
        if gap is not None:
            row["gap"] = str(gap)
            if enclosure is not None:
                err = max(enclosure.hi - c, c - enclosure.lo)
                row["verified"] = err < gap
        rows.append(row)
    lines = [f"expansion {e}"]
    for r in rows:
        line = f"{r['k']:>3}  {r['convergent']}"
        if r["gap"] is not None:
            line += f"  |error| < {r['gap']}"
        if r["verified"] is not None:
            line += "  verified" if r["verified"] else f"  unverified at {bits} bits"
        lines.append(line)
    return "\n".join(lines), {"expansion": e.to_json(), "bits": bits if enclosure else None, "convergents": rows}


def cmd_triples(ns) -> Result:
    _need(ns.args, 0, "triples [--max C]")
    c_max = ns.max if ns.max is not None else 20
    if c_max < 1:
        raise UsageError("--max must be positive")
    ts = parity.pythagorean_triples(c_max)
    reports = parity.check_parity_lemmas(c_max, ts)
    lines = [f"{len(ts)} triples with c <= {c_max}"]
    if len(ts) <= 40:
        lines.append(" ".join(str(t) for t in ts))
    for r in reports:
        lines.append(f"lemma {r.lemma_id}: {r.statement}: checked {r.triples_checked}, violations {len(r.violations)}")
    doc = {
        "c_max": c_max,
        "count": len(ts),
        "triples": [list(t) for t in ts],
        "lemmas": [r.to_json() for r in reports],
    }
    return "\n".join(lines), doc


def cmd_descent(ns) -> Result:
    _need(ns.args, 0, "descent [A C] [--max N]", at_most=2)
    if len(ns.args) == 1:
        raise UsageError(f"usage: {PROG} descent [A C] [--max N]")
    if ns.args:
        a, c = _nat(ns.args[0]), _nat(ns.args[1])
        v = parity.incommensurability_descent(a, c)
        return f"{v.outcome}: {v.detail}", {"mode": "verdict", **v.to_json()}
    n = ns.max if ns.max is not None else 2000
    found = parity.descent_search(n)
    text = f"no (a, a, c) triple with a, c <= {n}" if not found else f"found {[str(t) for t in found]}"
    return text, {"mode": "search", "n": n, "found": [list(t) for t in found]}


def cmd_pebble(ns) -> Result:
    _need(ns.args, 2, "pebble KIND N [M]", at_most=3)
    kind = ns.args[0]
    n = _nat(ns.args[1])
    m = _nat(ns.args[2]) if len(ns.args) > 2 else None
    d = parity.pebble_render(kind, n, m)
    return f"{d.text}\n{d.identity} ({'verified' if d.holds else 'FAILED'})", d.to_json()


def _fmt_lo(x: Rational, digits: Optional[int]) -> str:
    return str(x) if digits is None else decimal_down(x, digits)


def _fmt_hi(x: Rational, digits: Optional[int]) -> str:
    return str(x) if digits is None else decimal_up(x, digits)


def _doublings(ns, default: int) -> int:
    return ns.doublings if ns.doublings is not None else default


def cmd_pi(ns) -> Result:
    _need(ns.args, 0, "pi [--doublings N] [--bits B] [--digits D]")
    d = _doublings(ns, 4)
    bits = ns.bits if ns.bits is not None else 64
    rows = exh.pi_bounds(d, bits)
    lines = ["sides lower upper gap"]
    out_rows = []
    for r in rows:
        lo = _fmt_lo(r.inscribed_semiperimeter.lo, ns.digits)
        hi = _fmt_hi(r.circumscribed_semiperimeter.hi, ns.digits)
        gap = _fmt_hi(r.gap, ns.digits)
        lines.append(f"{r.sides} {lo} {hi} {gap}")
        out_rows.append({**r.to_json(), "lower": lo, "upper": hi, "gap_text": gap})
    doc = {"doublings": d, "bits": rows[-1].bits, "digits": ns.digits, "rows": out_rows}
    return "\n".join(lines), doc


def cmd_area(ns) -> Result:
    _need(ns.args, 1, "area R [--doublings N] [--bits B] [--digits D]")
    r = _rat(ns.args[0])
    iv = exh.circle_area_bounds(r, _doublings(ns, 4), ns.bits or 64)
    lo, hi = _fmt_lo(iv.lo, ns.digits), _fmt_hi(iv.hi, ns.digits)
    return f"area of circle r={r} in [{lo}, {hi}]", {"radius": str(r), "lower": lo, "upper": hi}


def cmd_ratio_areas(ns) -> Result:
    _need(ns.args, 2, "ratio-areas R1 R2")
    r1, r2 = _rat(ns.args[0]), _rat(ns.args[1])
    v = exh.area_ratio_check(r1, r2, _doublings(ns, 4), ns.bits or 64)
    lo, hi = _fmt_lo(v.ratio.lo, ns.digits), _fmt_hi(v.ratio.hi, ns.digits)
    text = f"A({r1})/A({r2}) in [{lo}, {hi}]; (d1/d2)^2 = {v.expected}: {'contained' if v.holds else 'NOT contained'}"
    return text, {"r1": str(r1), "r2": str(r2), "lower": lo, "upper": hi, "expected": str(v.expected), "holds": v.holds}


def cmd_halving_check(ns) -> Result:
    _need(ns.args, 0, "halving-check [--doublings N] [--bits B]")
    rows = exh.pi_bounds(_doublings(ns, 10), ns.bits or 128)
    v = exh.exhaustion_halving_check(rows)
    lines = [f"{r.sides} gap {decimal_up(r.gap, 20)}" for r in rows]
    lines.append(f"{'holds' if v.holds else 'FAILS'}: {v.pairs_checked} consecutive pairs, {len(v.failures)} failures")
    return "\n".join(lines), {"bits": rows[-1].bits, **v.to_json(), "gaps": [str(r.gap) for r in rows]}


def cmd_zeno(ns) -> Result:
    _need(ns.args, 0, "zeno [--max N]")
    n = ns.max if ns.max is not None else 10
    rows = exh.zeno_table(n)
    lines = ["n a_n t_n 1-t_n"] + [f"{r.n} {r.a_n} {r.t_n} {1 - r.t_n}" for r in rows]
    doc = {"rows": [{**r.to_json(), "remaining": str(1 - r.t_n)} for r in rows]}
    return "\n".join(lines), doc


def cmd_ruler_product(ns) -> Result:
    _need(ns.args, 2, "ruler-product A B")
    c = exh.ruler_compass_product(_rat(ns.args[0]), _rat(ns.args[1]))
    lines = [f"{k} = ({v[0]}, {v[1]})" for k, v in c.points.items()]
    lines.append(f"AD = {c.length} ({'verified' if c.verified else 'NOT verified'})")
    return "\n".join(lines), c.to_json()


def cmd_theodorus(ns) -> Result:
    _need(ns.args, 0, "theodorus [--max K] [--bits B] [--digits D]")
    k_max = ns.max if ns.max is not None else 16
    verts = exh.theodorus_vertices(k_max, ns.bits or 32)
    lines, rows = [], []
    for v in verts:
        lo, hi = _fmt_lo(v.hypotenuse.lo, ns.digits), _fmt_hi(v.hypotenuse.hi, ns.digits)
        lines.append(f"{v.k} sqrt({v.k + 1}) in [{lo}, {hi}]")
        rows.append({**v.to_json(), "lower": lo, "upper": hi})
    return "\n".join(lines), {"vertices": rows}


def cmd_real(ns) -> Result:
    if not ns.args or ns.args[0] not in REAL_VERBS:
        raise UsageError(f"usage: {PROG} real {{{'|'.join(REAL_VERBS)}}} X Y ...")
    verb, rest = ns.args[0], ns.args[1:]
    if verb == "sup":
        if not rest:
            raise UsageError(f"usage: {PROG} real sup X [Y ...]")
    elif len(rest) != 2:
        raise UsageError(f"usage: {PROG} real {verb} X Y")
    xs = [_real(t) for t in rest]
    budget = ns.bits if ns.bits is not None else reals.DEFAULT_PROBE_BUDGET
    if verb in ("add", "mul", "sup"):
        if verb == "add":
            z = xs[0] + xs[1]
        elif verb == "mul":
            z = xs[0] * xs[1]
        else:
            z = reals.supremum_finite(xs)
        k = ns.bits if ns.bits is not None else 64
        digits = ns.digits if ns.digits is not None else 20
        iv = z.approx(k)
        rendered = reals.render(z, digits)
        text = f"{rendered}\nin [{iv.lo}, {iv.hi}] at 2^-{k}"
        return text, {"verb": verb, "value": rendered, "bits": k, "interval": iv.to_json()}
    if verb == "compare":
        c = reals.real_compare(xs[0], xs[1], budget)
        return f"{c.ordering.value} at precision 2^-{c.precision}", {"verb": verb, **c.to_json()}
    if verb == "between":
        r = reals.rational_between(xs[0], xs[1], budget)
        return str(r), {"verb": verb, "value": str(r)}
    n = reals.archimedean_witness(xs[0], xs[1], budget)
    return str(n), {"verb": verb, "value": n}


def cmd_laws(ns) -> Result:
    _need(ns.args, 1, "laws SUITE|all [--seed S] [--max SAMPLES]")
    suite = ns.args[0]
    suites = laws.SUITES if suite == "all" else (suite,)
    if suite != "all" and suite not in laws.SUITES:
        raise UsageError(f"unknown suite {suite!r}; choose from all, {', '.join(laws.SUITES)}")
    seed = ns.seed if ns.seed is not None else 0
    samples = ns.max if ns.max is not None else laws.DEFAULT_SAMPLES
    checks = laws.run_suites(suites, seed, samples)
    lines = []
    for c in checks:
        mark = "PASS" if c.passed else "FAIL"
        exp = "" if c.expect == "holds" else " (expected to fail)"
        lines.append(f"{mark} {c.suite} {c.structure} {c.law}{exp}")
    failed = sum(not c.passed for c in checks)
    lines.append(f"{len(checks) - failed}/{len(checks)} checks passed (seed {seed}, {samples} samples)")
    doc = {"seed": seed, "samples": samples, "passed": failed == 0, "checks": [c.to_json() for c in checks]}
    if failed:
        raise _LawFailure("\n".join(lines), doc, failed)
    return "\n".join(lines), doc


class _LawFailure(DomainError):
    kind = "laws"

    def __init__(self, text: str, doc: dict, failed: int):
        super().__init__(f"{failed} law checks failed")
        self.text = text
        self.doc = doc


def cmd_help(ns) -> Result:
    width = max(len(n) for n in COMMANDS)
    lines = [f"usage: {PROG} <subcommand> [args] [--json] [--bits N] [--doublings N] [--max N] "
             "[--digits N] [--seed N] [--trace] [--literal]", ""]
    entries = []
    for name, (summary, example) in COMMANDS.items():
        lines.append(f"  {name:<{width}}  {summary}")
        lines.append(f"  {'':<{width}}  e.g. {PROG} {' '.join(example)}")
        entries.append({"name": name, "summary": summary, "example": example})
    return "\n".join(lines), {"commands": entries}


HANDLERS: dict[str, Callable[[argparse.Namespace], Result]] = {
    "gcd": cmd_gcd,
    "coprime": cmd_coprime,
    "cf": cmd_cf,
    "cf-reconstruct": cmd_cf_reconstruct,
    "surd": cmd_surd,
    "convergents": cmd_convergents,
    "triples": cmd_triples,
    "descent": cmd_descent,
    "pebble": cmd_pebble,
    "pi": cmd_pi,
    "area": cmd_area,
    "ratio-areas": cmd_ratio_areas,
    "halving-check": cmd_halving_check,
    "zeno": cmd_zeno,
    "ruler-product": cmd_ruler_product,
    "theodorus": cmd_theodorus,
    "real": cmd_real,
    "laws": cmd_laws,
    "help": cmd_help,
}


def run(argv: list[str], stdout=None, stderr=None) -> int:
    """Execute one invocation and return its exit code."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = _build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    as_json = ns.json
    try:
        text, doc = HANDLERS[ns.command](ns)
    except UsageError as exc:
        print(f"{PROG}: error: {exc}", file=stderr)
        return 2
    except _LawFailure as exc:
        if as_json:
            print(json.dumps({"command": ns.command, **exc.doc}), file=stdout)
        else:
            print(exc.text, file=stdout)
        print(f"error: {exc.kind}: {exc}", file=stderr)
        return 1
    except DomainError as exc:
        reason = " ".join(str(exc).split())
        if as_json:
            print(json.dumps({"error": {"kind": exc.kind, "message": reason}}), file=stdout)
        print(f"error: {exc.kind}: {reason}", file=stderr)
        return 1
    if as_json:
        print(json.dumps({"command": ns.command, **doc}), file=stdout)
    else:
        print(text, file=stdout)
    return 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
