import pytest

from numtower import parity as pa
from numtower.errors import BudgetExceeded, DomainError


def brute_triples(c_max):
    return {(a, b, c) for c in range(1, c_max + 1) for a in range(1, c) for b in range(1, c) if a * a + b * b == c * c}


def test_triples_match_brute_force():
    assert {tuple(t) for t in pa.pythagorean_triples(60)} == brute_triples(60)


def test_lemmas_hold_up_to_200():
    for rep in pa.check_parity_lemmas(200):
        assert rep.triples_checked > 0
        assert rep.violations == []


def test_lemma_predicate_detects_violation():
    # a fake "triple" that breaks lemma 1 shows the checker is not vacuous
    fake = pa.Triple(3, 5, 6)
    assert pa.LEMMAS[1][1](fake) is False


def test_halve_triple():
    assert pa.halve_triple(pa.Triple(6, 8, 10)) == pa.Triple(3, 4, 5)
    with pytest.raises(DomainError):
        pa.halve_triple(pa.Triple(3, 4, 5))


@pytest.mark.parametrize("a, c, near", [(12, 17, True), (70, 99, True), (5, 7, True), (10, 14, False)])
def test_descent_verdicts(a, c, near):
    v = pa.incommensurability_descent(a, c)
    assert v.outcome == "not-pythagorean"
    assert ("near miss" in v.detail) is near


def test_descent_search_empty():
    assert pa.descent_search(500) == []


def test_irrationality_witness():
    w = pa.sqrt2_irrationality_witness(17, 12)
    assert (w.two_q_squared, w.p_squared, w.p_squared_side) == (288, 289, "larger")
    assert pa.sqrt2_irrationality_witness(7, 5).p_squared_side == "smaller"


def test_squares_mod_four():
    assert {n * n % 4 for n in range(1, 501)} == {0, 1}
    for n in range(1, 501):
        assert n * n % 4 == n % 2


def test_pebble_odd_square():
    d = pa.pebble_render("odd-square", 5)
    assert d.holds and d.identity == "5^2 = 25 = 4*6 + 1"
    assert d.text.count(pa.PEBBLE) == 24 and d.text.count(pa.UNIT) == 1


def test_pebble_even_square():
    d = pa.pebble_render("even-square", 6)
    assert d.holds and d.text.count(pa.PEBBLE) == 36


def test_pebble_sum_of_odds():
    d = pa.pebble_render("sum-of-odds", 11, 4)
    assert d.holds and d.identity == "4*11 = 44 = 2*22"
    assert d.text.count(pa.UNIT) == 4


@pytest.mark.parametrize(
    "args, exc",
    [
        (("odd-square", 4), DomainError),
        (("even-square", 5), DomainError),
        (("sum-of-odds", 11, 3), DomainError),
        (("sum-of-odds", 10, 4), DomainError),
        (("odd-square", 101), BudgetExceeded),
        (("hexagon", 3), DomainError),
    ],
)
def test_pebble_rejects(args, exc):
    with pytest.raises(exc):
        pa.pebble_render(*args)
