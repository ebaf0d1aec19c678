import random
import time
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import machin_pi
from numtower import exhaustion as ex
from numtower.completion import Rational
from numtower.errors import DomainError
from numtower.intervals import RationalInterval, decimal_down, decimal_up, interval_sqrt, point, sqrt_interval

PI, PI_ERR = machin_pi()


def F(r):
    return Fraction(r.numerator, r.denominator)


@given(st.integers(0, 10**12), st.integers(0, 80))
def test_sqrt_interval_encloses_and_is_narrow(n, bits):
    iv = sqrt_interval(n, bits)
    assert iv.lo * iv.lo <= n <= iv.hi * iv.hi
    assert iv.width <= Rational(1, 1 << bits)


def test_interval_ops_contain_point_results():
    rng = random.Random(4)
    for _ in range(500):
        a = RationalInterval(*sorted((Rational(rng.randint(-50, 50), rng.randint(1, 9)) for _ in range(2))))
        b = RationalInterval(*sorted((Rational(rng.randint(-50, 50), rng.randint(1, 9)) for _ in range(2))))
        x = a.lo + (a.hi - a.lo) * Rational(rng.randint(0, 10), 10)
        y = b.lo + (b.hi - b.lo) * Rational(rng.randint(0, 10), 10)
        assert (a + b).contains(x + y)
        assert (a - b).contains(x - y)
        assert (a * b).contains(x * y)
        assert a.square().contains(x * x)
        if b.excludes_zero():
            assert (a / b).contains(x / y)
        assert (a * b).round_out(5).contains_interval(a * b)


def test_interval_errors_and_format():
    with pytest.raises(DomainError):
        RationalInterval(Rational(2), Rational(1))
    with pytest.raises(DomainError):
        RationalInterval(Rational(-1), Rational(1)).reciprocal()
    assert str(point(Rational(1, 2))) == "[1/2, 1/2]"
    assert decimal_down(Rational(-1, 3), 3) == "-0.334"
    assert decimal_up(Rational(-1, 3), 3) == "-0.333"
    assert interval_sqrt(RationalInterval(Rational(4), Rational(9)), 10).contains_interval(
        RationalInterval(Rational(2), Rational(3))
    )


def test_ninety_six_gon():
    rows = ex.pi_bounds(4)
    assert [r.sides for r in rows] == [6, 12, 24, 48, 96]
    enc = rows[-1].pi_enclosure
    assert enc.lo >= Rational(31410, 10000) and enc.hi <= Rational(31428, 10000)
    assert F(enc.lo) < PI - PI_ERR and PI + PI_ERR < F(enc.hi)
    assert decimal_down(enc.lo, 6) <= "3.141592" and decimal_up(enc.hi, 6) >= "3.141593"


@pytest.mark.parametrize("start", ex.START_POLYGONS)
def test_every_row_encloses_pi(start):
    for r in ex.pi_bounds(12, 96, start=start):
        assert F(r.pi_enclosure.lo) < PI - PI_ERR and PI + PI_ERR < F(r.pi_enclosure.hi)
        assert r.inscribed_semiperimeter.below(r.circumscribed_semiperimeter)


def test_twenty_doublings_gap():
    t = time.perf_counter()
    rows = ex.pi_bounds(20, 128)
    assert rows[-1].gap < Rational(1, 10**10)
    assert time.perf_counter() - t < 1


def test_pi_bounds_domain():
    with pytest.raises(DomainError):
        ex.pi_bounds(ex.MAX_DOUBLINGS + 1)
    with pytest.raises(DomainError):
        ex.pi_bounds(3, start="triangle")


def test_halving():
    v = ex.exhaustion_halving_check(ex.pi_bounds(10, 128))
    assert v.holds and v.pairs_checked == 10 and not v.failures


def test_halving_detects_failure():
    rows = ex.pi_bounds(2, 64)
    v = ex.exhaustion_halving_check([rows[0], rows[0]])
    assert not v.holds and v.failures


@pytest.mark.parametrize("r1, r2", [(1, 2), (3, 5), (2, 3), (Rational(1, 3), Rational(7, 2))])
def test_area_ratio(r1, r2):
    v = ex.area_ratio_check(Rational.coerce(r1), Rational.coerce(r2))
    assert v.holds
    assert v.expected == (Rational.coerce(r1) / r2) ** 2


def test_circle_area_contains_pi_r_squared():
    iv = ex.circle_area_bounds(Rational(2), 6)
    assert F(iv.lo) < 4 * (PI - PI_ERR) and 4 * (PI + PI_ERR) < F(iv.hi)


def test_polygon_area():
    assert ex.polygon_area(Rational(3), Rational(8)) == 12
    with pytest.raises(DomainError):
        ex.polygon_area(Rational(0), Rational(1))


def test_zeno_table():
    rows = ex.zeno_table(64)
    assert rows[19].t_n == Rational(1048575, 1048576)
    for r in rows:
        assert 1 - r.t_n == Rational(1, 1 << r.n)
        assert r.a_n == Rational(1, 1 << r.n)


def test_ruler_product_golden():
    c = ex.ruler_compass_product(Rational(3, 2), Rational(4, 3))
    assert c.verified and c.length == 2
    pts = {k: (str(x), str(y)) for k, (x, y) in c.points.items()}
    assert pts == {
        "A": ("0", "0"),
        "B": ("3/2", "0"),
        "C": ("3/5", "4/5"),
        "D": ("2", "0"),
        "E": ("4/5", "16/15"),
    }


def test_ruler_product_random():
    rng = random.Random(10)
    for _ in range(200):
        a = Rational(rng.randint(1, 10**6), rng.randint(1, 10**6))
        b = Rational(rng.randint(1, 10**6), rng.randint(1, 10**6))
        c = ex.ruler_compass_product(a, b)
        assert c.verified and c.length == a * b


def test_theodorus():
    verts = ex.theodorus_vertices(16, 32)
    for v in verts:
        assert v.hypotenuse.width <= Rational(1, 1 << 32)
        assert v.hypotenuse.lo ** 2 <= v.k + 1 <= v.hypotenuse.hi ** 2
    with pytest.raises(DomainError):
        ex.theodorus_vertices(0)
