import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from numsem import core, modular
from numsem.errors import (
    BadInput,
    DegenerateInterval,
    DepthTooLarge,
    NotReduced,
    OrderViolation,
    ParseError,
)


def F(n, d=1):
    return modular.Frac(n, d)


def IV(lo, hi, lo_open=False, hi_open=False):
    return modular.RationalInterval(lo, hi, lo_open=lo_open, hi_open=hi_open)


# --- fractions ---------------------------------------------------------------

def test_frac_validation():
    with pytest.raises(NotReduced):
        modular.Frac(2, 4)
    with pytest.raises(NotReduced):
        modular.Frac(3, 0)
    assert modular.Frac(1, 0).is_finite is False
    assert modular.Frac.reduced(2, 4) == F(1, 2)
    assert F(1, 2) < F(2, 3) < F(1, 1) < F(1, 0)


def test_parse_fraction():
    assert modular.parse_fraction("11/4") == F(11, 4)
    assert modular.parse_fraction("3") == F(3)
    with pytest.raises(ParseError):
        modular.parse_fraction("1/0")
    with pytest.raises(NotReduced):
        modular.parse_fraction("2/4")
    with pytest.raises(ParseError):
        modular.parse_fraction("x/2")


def test_parse_interval():
    iv = modular.parse_interval("(3/2..3)")
    assert iv.lo_open and iv.hi_open
    assert iv.lo == F(3, 2) and iv.hi == F(3)
    iv = modular.parse_interval("11/4..11/3")
    assert not iv.lo_open and not iv.hi_open
    with pytest.raises(DegenerateInterval):
        modular.parse_interval("2/1..2/1")
    with pytest.raises(OrderViolation):
        modular.parse_interval("3/1..2/1")


# --- inequality solving ------------------------------------------------------

def test_solve_examples():
    assert modular.solve_prop_modular(4, 11, 1).min_gens == (3, 7, 11)
    assert modular.solve_prop_modular(1, 23, 1) == core.NATURALS
    lhs = modular.solve_prop_modular(5, 11, 2)
    rhs = modular.semigroup_from_interval(IV(F(11, 5), F(11, 3)))
    assert lhs == rhs
    with pytest.raises(BadInput):
        modular.solve_prop_modular(0, 5, 1)


def test_interval_examples():
    assert modular.semigroup_from_interval(IV(F(4, 3), F(3, 2))).min_gens == (3, 4)
    assert modular.semigroup_from_interval(IV(F(11, 4), F(11, 3))).min_gens == (3, 7, 11)
    open_mod = modular.semigroup_from_interval(
        IV(F(3, 2), F(3), lo_open=True, hi_open=True))
    assert open_mod.min_gens == (2, 5)


@given(st.integers(1, 60), st.integers(1, 60), st.integers(1, 60),
       st.integers(1, 60), st.data())
@settings(max_examples=150, deadline=None)
def test_interval_membership_matches_rationals(a, b, c, d, data):
    lo, hi = Fraction(a, b), Fraction(c, d)
    if lo == hi:
        return
    if lo > hi:
        lo, hi = hi, lo
    lo_open = data.draw(st.booleans())
    hi_open = data.draw(st.booleans())
    iv = modular.RationalInterval(
        F(lo.numerator, lo.denominator), F(hi.numerator, hi.denominator),
        lo_open=lo_open, hi_open=hi_open)
    for x in range(0, 50):
        expect = x == 0
        kmax = math.ceil(x / lo) + 1
        for k in range(1, kmax + 1):
            above = k * lo < x if lo_open else k * lo <= x
            below = x < k * hi if hi_open else x <= k * hi
            if above and below:
                expect = True
                break
        assert modular.interval_contains(iv, x) == expect


def test_interval_theorem_random():
    rng = random.Random(11)
    for _ in range(100):
        b = rng.randrange(3, 401)
        a = rng.randrange(2, b)
        c = rng.randrange(1, a)
        lhs = modular.solve_prop_modular(a, b, c)
        rhs = modular.semigroup_from_interval(
            IV(modular.Frac.reduced(b, a), modular.Frac.reduced(b, a - c)))
        assert lhs == rhs


def test_contracted_examples():
    assert modular.solve_contracted(3, 7, 1, 2).min_gens == (5, 6, 7, 8, 9)
    assert modular.solve_contracted(2, 5, 1, 1).min_gens == (3, 4, 5)
    for a, b in ((4, 11), (7, 19), (3, 8)):
        assert modular.solve_contracted(a, b, 1, 0) == \
            modular.solve_prop_modular(a, b, 1)


# --- Bezout sequences ---------------------------------------------------------

def test_bezout_examples():
    seq = modular.proper_bezout_sequence(F(11, 4), F(11, 3))
    assert [str(t) for t in seq.terms] == ["11/4", "3/1", "7/2", "11/3"]
    assert modular.proper_bezout_sequence(F(1), F(2)).terms == (F(1), F(2))
    assert modular.proper_bezout_sequence(F(4, 3), F(3, 2)).terms == \
        (F(4, 3), F(3, 2))
    with pytest.raises(OrderViolation):
        modular.proper_bezout_sequence(F(3, 2), F(4, 3))


def _random_reduced_pair(rng, top=200):
    while True:
        f1 = modular.Frac.reduced(rng.randrange(1, top + 1),
                                  rng.randrange(1, top + 1))
        f2 = modular.Frac.reduced(rng.randrange(1, top + 1),
                                  rng.randrange(1, top + 1))
        if f1 < f2:
            return f1, f2
        if f2 < f1:
            return f2, f1


def test_bezout_postconditions_random():
    rng = random.Random(5)
    for _ in range(120):
        f1, f2 = _random_reduced_pair(rng)
        seq = modular.proper_bezout_sequence(f1, f2)
        terms = seq.terms
        assert modular.is_bezout_sequence(terms)
        assert modular.is_proper_bezout_sequence(terms)
        assert modular.numerators_convex(list(seq.numerators()))
        assert all(a < b for a, b in zip(terms, terms[1:]))
        # generated semigroup equals the interval semigroup, gap by gap
        iv = IV(f1, f2)
        gen = core.from_generators(seq.numerators())
        assert all(modular.interval_contains(iv, n) for n in seq.numerators())
        assert not any(modular.interval_contains(iv, x) for x in gen.gaps())


def test_bezout_properness_is_tight():
    rng = random.Random(6)
    checked = 0
    while checked < 40:
        f1, f2 = _random_reduced_pair(rng, top=80)
        terms = modular.proper_bezout_sequence(f1, f2).terms
        if len(terms) < 3:
            continue
        checked += 1
        for i in range(1, len(terms) - 1):
            shorter = terms[:i] + terms[i + 1:]
            assert not modular.is_bezout_sequence(shorter)


# --- Stern-Brocot ----------------------------------------------------------------

def test_rows_match_fixtures():
    assert [str(f) for f in modular.stern_brocot_row(0)] == ["0/1", "1/1", "1/0"]
    assert [str(f) for f in modular.stern_brocot_row(1)] == \
        ["0/1", "1/2", "1/1", "2/1", "1/0"]
    assert [str(f) for f in modular.stern_brocot_row(2)] == \
        ["0/1", "1/3", "1/2", "2/3", "1/1", "3/2", "2/1", "3/1", "1/0"]
    with pytest.raises(DepthTooLarge):
        modular.stern_brocot_row(21)


def test_predecessor_examples():
    assert modular.stern_brocot_predecessor(F(4, 3), F(5, 3)) == F(3, 2)
    assert modular.stern_brocot_predecessor(F(1, 2), F(2)) == F(1)
    assert modular.stern_brocot_predecessor(F(11, 4), F(11, 3)) == F(3)


def test_predecessor_numerator_is_multiplicity():
    rng = random.Random(12)
    for _ in range(80):
        f1, f2 = _random_reduced_pair(rng, top=120)
        pred = modular.stern_brocot_predecessor(f1, f2)
        assert pred.num == modular.interval_multiplicity(IV(f1, f2))


# --- recognizer -------------------------------------------------------------------

def test_recognizer_examples():
    rec = modular.is_proportionally_modular(core.from_generators([3, 7, 11]))
    assert rec.status == "yes"
    arr = rec.witness
    assert sorted(arr) == [3, 7, 11]
    assert all(math.gcd(arr[i], arr[i + 1]) == 1 for i in range(2))
    assert modular.is_proportionally_modular(core.from_generators([2, 3])).status == "yes"
    assert modular.is_proportionally_modular(core.from_generators([4, 6, 7])).status == "no"
    assert modular.is_proportionally_modular(core.NATURALS).status == "yes"


def test_solve_outputs_are_recognized():
    rng = random.Random(13)
    for _ in range(60):
        b = rng.randrange(3, 200)
        a = rng.randrange(2, b)
        c = rng.randrange(1, a)
        s = modular.solve_prop_modular(a, b, c)
        if s.embedding_dimension <= 9:
            assert modular.is_proportionally_modular(s).status == "yes"


def test_recognizer_witness_conditions():
    rng = random.Random(14)
    for _ in range(40):
        b = rng.randrange(10, 300)
        a = rng.randrange(2, b)
        c = rng.randrange(1, a)
        s = modular.solve_prop_modular(a, b, c)
        rec = modular.is_proportionally_modular(s)
        if rec.status != "yes":
            continue
        arr = rec.witness
        e = len(arr)
        valley = arr.index(min(arr))
        assert all(arr[i] >= arr[i + 1] for i in range(valley))
        assert all(arr[i] <= arr[i + 1] for i in range(valley, e - 1))
        assert all(math.gcd(arr[i], arr[i + 1]) == 1 for i in range(e - 1))
        assert all((arr[j - 1] + arr[j + 1]) % arr[j] == 0 for j in range(1, e - 1))
