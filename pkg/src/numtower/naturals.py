"""Non-negative integers of unbounded size.

The carrier is Python's ``int`` restricted to values >= 0; every function
here validates that restriction so that higher layers never see a negative
"natural".  Zero is included because remainders and interval endpoints
need it; the positive naturals are the subset used by the completions.
"""

from __future__ import annotations

import re

from .errors import DomainError

__all__ = [
    "Natural",
    "natural",
    "add",
    "sub",
    "mul",
    "divmod_nat",
    "isqrt",
    "is_square",
    "gcd_value",
    "parse_natural",
    "format_natural",
]

Natural = int

_DECIMAL = re.compile(r"(?:0|[1-9][0-9]*)\Z")
_HEX = re.compile(r"0[xX][0-9a-fA-F]+\Z")


def natural(x: object) -> int:
    """Validate *x* as a natural number and return it."""
    if isinstance(x, bool) or not isinstance(x, int):
        raise DomainError(f"not an integer: {x!r}")
    if x < 0:
        raise DomainError(f"negative value is not a natural: {x}")
    return x


def add(a: int, b: int) -> int:
    return natural(a) + natural(b)


def sub(a: int, b: int) -> int:
    """Truncated subtraction is not offered: ``a < b`` is an error."""
    natural(a)
    natural(b)
    if a < b:
        raise DomainError(f"cannot subtract {b} from the smaller {a}")
    return a - b


def mul(a: int, b: int) -> int:
    return natural(a) * natural(b)


def divmod_nat(a: int, b: int) -> tuple[int, int]:
    """Return ``(q, r)`` with ``a == q*b + r`` and ``0 <= r < b``."""
    natural(a)
    natural(b)
    if b == 0:
        raise DomainError("division by zero")
    return divmod(a, b)


def isqrt(a: int) -> int:
    """Floor square root by Newton iteration on integers.

    Starts above the root (a power of two with half the bit length, rounded
    up) so the iterates decrease monotonically until they stop.
    """
    natural(a)
    if a < 2:
        return a
    x = 1 << ((a.bit_length() + 1) // 2)
    while True:
        y = (x + a // x) >> 1
        if y >= x:
            return x
        x = y


def is_square(a: int) -> bool:
    r = isqrt(a)
    return r * r == a


def gcd_value(a: int, b: int) -> int:
    """Greatest common measure by repeated division, without recording a trace.

    ``gcd_value(0, 0)`` is 0; otherwise the result is positive.  The traced
    version lives in :mod:`numtower.anthyphairesis`.
    """
    natural(a)
    natural(b)
    while b:
        a, b = b, a % b
    return a


def parse_natural(text: str) -> int:
    """Parse a decimal literal (no leading zeros) or a ``0x`` hex literal."""
    s = text.strip()
    if _DECIMAL.match(s):
        return int(s)
    if _HEX.match(s):
        return int(s, 16)
    raise DomainError(f"not a natural number literal: {text!r}")


def format_natural(a: int) -> str:
    return str(natural(a))
