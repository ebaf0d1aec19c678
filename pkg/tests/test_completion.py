import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from numtower import completion as cp
from numtower import laws
from numtower.completion import Pair, Rational
from numtower.errors import DomainError

ints = st.integers(-10**12, 10**12)
nonzero = ints.filter(bool)


def F(r: Rational) -> Fraction:
    return Fraction(r.numerator, r.denominator)


@given(ints, nonzero, ints, nonzero)
def test_rational_field_ops_match_fraction(a, b, c, d):
    x, y = Rational(a, b), Rational(c, d)
    fx, fy = Fraction(a, b), Fraction(c, d)
    assert F(x + y) == fx + fy
    assert F(x - y) == fx - fy
    assert F(x * y) == fx * fy
    assert F(-x) == -fx
    if c:
        assert F(x / y) == fx / fy
    assert (x < y) == (fx < fy)
    assert x.floor() == (fx.numerator // fx.denominator)


@given(ints, nonzero)
def test_rational_is_reduced(a, b):
    r = Rational(a, b)
    f = Fraction(a, b)
    assert (r.numerator, r.denominator) == (f.numerator, f.denominator)


def test_rational_basics():
    assert str(Rational(22, 6)) == "11/3"
    assert str(Rational(-4, 2)) == "-2"
    assert Rational(3) == 3 and hash(Rational(3)) == hash(3)
    assert Rational(1, 2) ** -2 == 4
    with pytest.raises(DomainError):
        Rational(1, 0)
    with pytest.raises(DomainError):
        Rational(0).inverse()


@pytest.mark.parametrize("text, value", [("17/3", Rational(17, 3)), ("-4/6", Rational(-2, 3)), ("5", Rational(5))])
def test_parse_rational(text, value):
    assert cp.parse_rational(text) == value


@pytest.mark.parametrize("text", ["1.5", "1/0", "a/b", "", "3/-4"])
def test_parse_rational_rejects(text):
    with pytest.raises(DomainError):
        cp.parse_rational(text)


def test_accounts_canonical_forms():
    assert cp.CcsClass(cp.ACCOUNTS, Pair(7, 3)).representative == Pair(5, 1)
    assert cp.CcsClass(cp.ACCOUNTS, Pair(3, 7)).representative == Pair(1, 5)
    assert cp.CcsClass(cp.ACCOUNTS, Pair(4, 4)).representative == Pair(1, 1)
    assert int(cp.canonicalize_int(Pair(3, 7))) == -4
    assert str(cp.canonicalize_int(Pair(3, 7))) == "-4"


def test_fractions_lowest_terms():
    assert cp.CcsClass(cp.FRACTIONS, Pair(22, 6)).representative == Pair(11, 3)
    assert cp.canonicalize_rat(Pair(136, 6)) == Rational(68, 3)


def test_congruence_and_combination():
    a = cp.class_of(Pair(5, 2), cp.ACCOUNTS)
    b = cp.class_of(Pair(9, 6), cp.ACCOUNTS)
    assert a == b
    assert a.contains(Pair(100, 97))
    assert int(cp.canonicalize_int(a.combine(a.inverse()).representative)) == 0
    assert a.combine(cp.identity_class(cp.ACCOUNTS)) == a


def test_embedding_independent_of_witness():
    for y in (1, 2, 50):
        assert cp.embed(7, cp.ACCOUNTS, y) == cp.embed(7, cp.ACCOUNTS)
    for y in (1, 3, 11):
        assert cp.embed(4, cp.FRACTIONS, y) == cp.embed(4, cp.FRACTIONS)


def test_account_mul_and_fraction_add_agree_with_oracles():
    rng = random.Random(1)
    for _ in range(300):
        p = Pair(rng.randint(1, 99), rng.randint(1, 99))
        q = Pair(rng.randint(1, 99), rng.randint(1, 99))
        prod = cp.account_mul(p, q)
        assert prod.first - prod.second == (p.first - p.second) * (q.first - q.second)
        s = cp.fraction_add(p, q)
        assert Fraction(s.first, s.second) == Fraction(p.first, p.second) + Fraction(q.first, q.second)


def test_signed_rationals_roundtrip():
    for q in (Rational(-7, 3), Rational(0), Rational(5, 2)):
        assert cp.rational_of_signed_class(cp.signed_class_of(q)) == q


def test_classes_over_different_carriers_do_not_mix():
    with pytest.raises(DomainError):
        cp.class_of(Pair(2, 1), cp.ACCOUNTS).combine(cp.class_of(Pair(2, 1), cp.FRACTIONS))


def test_carrier_rejects_non_members():
    with pytest.raises(DomainError):
        cp.class_of(Pair(0, 1), cp.ACCOUNTS)


def test_parse_account_and_fraction():
    assert cp.parse_account("3~7") == Pair(3, 7)
    assert cp.parse_account("3⊖7") == Pair(3, 7)
    assert cp.parse_fraction("22/6") == Pair(22, 6)
    with pytest.raises(DomainError):
        cp.parse_account("0~1")


@pytest.mark.parametrize("suite", laws.SUITES)
def test_law_suites_pass(suite):
    checks = laws.run_suite(suite, seed=0, samples=300)
    assert checks
    bad = [c.law for c in checks if not c.passed]
    assert not bad, bad


def test_law_suites_are_seeded():
    a = [c.to_json() for c in laws.run_suite("field", seed=3, samples=50)]
    b = [c.to_json() for c in laws.run_suite("field", seed=3, samples=50)]
    assert a == b


def test_structure_table_expectations():
    table = {(c.structure, c.law): c for c in laws.structure_table(random.Random(0), 100)}
    assert table[("(N+,+)", "identity element exists")].expect == "fails"
    assert table[("(N+,*)", "identity element exists")].expect == "holds"
    assert table[("(N+,*)", "inverses exist")].expect == "fails"
    for s in ("(Z,+)", "(Q+,*)"):
        assert table[(s, "inverses exist")].expect == "holds"
    assert all(c.passed for c in table.values())


def test_unknown_suite():
    with pytest.raises(DomainError):
        laws.run_suite("ring")
