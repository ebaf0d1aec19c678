import random
import threading
from fractions import Fraction

import pytest

from conftest import machin_pi
from exprtrees import build, exact, random_tree
from numtower import reals
from numtower.anthyphairesis import surd_cf
from numtower.completion import Rational
from numtower.errors import CannotSeparate
from numtower.intervals import sqrt_interval

Q = Rational
sqrt2 = reals.real_sqrt(Q(2))


def F(r):
    return Fraction(r.numerator, r.denominator)


@pytest.mark.parametrize("k", [8, 32, 128])
def test_rational_expression_trees(k):
    rng = random.Random(k)
    eps = Q(1, 1 << k)
    for _ in range(150):
        t = random_tree(rng, 5)
        iv = build(t).approx(k)
        assert iv.width <= eps
        v = exact(t)
        assert F(iv.lo) <= v <= F(iv.hi)


@pytest.mark.parametrize("k", [8, 32])
def test_surd_expression_tree_widths(k):
    rng = random.Random(100 + k)
    for _ in range(60):
        x = build(random_tree(rng, 4, surds=True))
        iv = x.approx(k)
        assert iv.width <= Q(1, 1 << k)
        # nested: a finer request lies inside the coarser enclosure's neighbourhood
        fine = x.approx(k + 10)
        assert fine.intersects(iv)


def test_sqrt2_squared():
    iv = (sqrt2 * sqrt2).approx(20)
    assert iv.contains(2) and iv.width <= Q(1, 1 << 20)


def test_cf_stream_matches_sqrt():
    x = reals.real_from_cf(surd_cf(2))
    assert x.approx(40).intersects(sqrt_interval(2, 40))


def test_pi_stream_against_machin():
    pi, err = machin_pi()
    iv = reals.real_pi().approx(60)
    assert F(iv.lo) <= pi + err and pi - err <= F(iv.hi)


def test_compare():
    assert reals.real_compare(sqrt2, reals.real_from_rational(Q(3, 2))).ordering is reals.Ordering.LESS
    assert reals.real_compare(reals.real_pi(), reals.real_from_rational(Q(22, 7))).ordering is reals.Ordering.LESS
    c = reals.real_compare(sqrt2, reals.real_sqrt(Q(2)), budget=64)
    assert c.ordering is reals.Ordering.UNDECIDED and c.ordering.value == "undecided-at-budget"


def test_probe_schedule():
    assert reals.probe_schedule(16) == [0, 1, 2, 4, 8, 16]
    assert reals.probe_schedule(20)[-1] == 20


def test_inverse_of_zero_cannot_separate():
    with pytest.raises(CannotSeparate):
        reals.real_inv(reals.real_from_rational(Q(0)), budget=32)


def test_inverse_and_division():
    x = reals.real_inv(sqrt2)
    iv = x.approx(30)
    assert iv.width <= Q(1, 1 << 30)
    assert iv.lo > 0 and iv.lo**2 <= Q(1, 2) <= iv.hi**2
    third = reals.real_div(reals.real_from_rational(Q(1)), reals.real_from_rational(Q(3)))
    assert third.approx(50).contains(Q(1, 3))


@pytest.mark.parametrize(
    "a, b, n",
    [(Q(2), Q(7), 4), (Q(1, 1000), Q(1), 1001), (None, Q(10), 8)],
)
def test_archimedean_witness(a, b, n):
    A = sqrt2 if a is None else reals.real_from_rational(a)
    assert reals.archimedean_witness(A, reals.real_from_rational(b)) == n


def test_rational_between():
    r = reals.rational_between(sqrt2, reals.real_from_rational(Q(3, 2)))
    assert r * r > 2 and r < Q(3, 2)
    assert reals.rational_between(reals.real_from_rational(Q(1, 3)), reals.real_from_rational(Q(1, 2))) == Q(5, 12)
    with pytest.raises(CannotSeparate):
        reals.rational_between(sqrt2, reals.real_sqrt(Q(2)), budget=32)


def test_supremum_finite():
    s = reals.supremum_finite([sqrt2, reals.real_from_rational(Q(7, 5)), reals.real_from_rational(Q(-3))])
    iv = s.approx(30)
    assert iv.intersects(sqrt_interval(2, 30)) and iv.width <= Q(1, 1 << 30)


def zeno_limit():
    return reals.limit_of_monotone(lambda n: 1 - Q(1, 1 << n), lambda k: k, "zeno")


def test_zeno_limit_comparisons():
    one = reals.real_from_rational(Q(1))
    assert reals.real_compare(zeno_limit(), one).ordering is reals.Ordering.UNDECIDED
    below = reals.real_from_rational(1 - Q(1, 1 << 8))
    assert reals.real_compare(zeno_limit(), below, budget=16).ordering is reals.Ordering.GREATER


def test_render():
    assert reals.render(reals.real_pi(), 20).startswith("3.1415926535897932384")
    assert reals.render(sqrt2, 5).endswith("±1 ulp")


def test_memo_is_thread_safe():
    x = sqrt2 * reals.real_pi()
    results = []
    threads = [threading.Thread(target=lambda: results.append(x.approx(64))) for _ in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert len({(r.lo, r.hi) for r in results}) == 1
