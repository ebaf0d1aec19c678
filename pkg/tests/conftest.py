import io
import json
from fractions import Fraction

import pytest

from numtower import cli


def _arctan_inv(n: int, terms: int) -> Fraction:
    # alternating series for arctan(1/n); the tail is below the first omitted term
    total = Fraction(0)
    for k in range(terms):
        total += Fraction((-1) ** k, (2 * k + 1) * n ** (2 * k + 1))
    return total


def machin_pi(terms: int = 30) -> tuple[Fraction, Fraction]:
    """Independent enclosure of pi from Machin's formula, as (value, error bound)."""
    value = 16 * _arctan_inv(5, terms) - 4 * _arctan_inv(239, terms)
    err = 16 * Fraction(1, (2 * terms + 1) * 5 ** (2 * terms + 1)) + 4 * Fraction(
        1, (2 * terms + 1) * 239 ** (2 * terms + 1)
    )
    return value, err


class Run:
    def __init__(self, code, out, err):
        self.code, self.out, self.err = code, out, err

    @property
    def doc(self):
        return json.loads(self.out)


def run_cli(*argv: str) -> Run:
    out, err = io.StringIO(), io.StringIO()
    code = cli.run(list(argv), stdout=out, stderr=err)
    return Run(code, out.getvalue(), err.getvalue())


@pytest.fixture
def numtower():
    return run_cli
