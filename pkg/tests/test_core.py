import math
import random
from functools import reduce

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from numsem import core
from numsem.errors import (
    BadInput,
    EmptyInput,
    GcdNotOne,
    NotAMember,
    NotASemigroup,
    NotFundamentalGapSet,
    ParseError,
)

import oracles
from conftest import up_to_genus


def S(*gens):
    return core.from_generators(list(gens))


# --- construction ------------------------------------------------------------

def test_from_generators_examples():
    assert S(1).min_gens == (1,)
    assert S(1).frobenius == -1
    assert S(1).genus == 0
    assert S(2, 3).frobenius == 1
    assert S(2, 3).genus == 1
    red = S(3, 5, 7, 10)
    assert red.min_gens == (3, 5, 7)
    assert red.frobenius == 4


def test_from_generators_errors():
    with pytest.raises(EmptyInput):
        core.from_generators([])
    with pytest.raises(GcdNotOne):
        core.from_generators([2, 4])
    with pytest.raises(BadInput):
        core.from_generators([0, 3])
    with pytest.raises(BadInput):
        core.from_generators([-2, 3])


def test_contains():
    s = S(2, 3)
    assert 1 not in s
    assert 0 in s
    assert all(x in s for x in range(2, 50))
    assert not s.contains(-3)
    assert 4 not in S(3, 5, 7)


gens_strategy = st.lists(st.integers(1, 40), min_size=1, max_size=5).filter(
    lambda gs: reduce(math.gcd, gs) == 1)


@given(gens_strategy)
@settings(max_examples=120, deadline=None)
def test_membership_matches_sum_closure(gens):
    s = core.from_generators(gens)
    bound = s.frobenius + max(gens) + 3
    naive = oracles.sum_closure_members(gens, bound)
    for x in range(bound + 1):
        assert s.contains(x) == (x in naive)


@given(gens_strategy)
@settings(max_examples=120, deadline=None)
def test_canonical_value_properties(gens):
    s = core.from_generators(gens)
    bound = s.frobenius + s.multiplicity + 3
    assert oracles.naive_min_gens(gens, bound) == list(s.min_gens)
    assert reduce(math.gcd, s.min_gens) == 1
    assert s.genus == len(s.gaps())
    assert s.contains(s.frobenius + 1)
    # closure by full double loop over the small elements
    members = [x for x in range(bound + 1) if s.contains(x)]
    for a in members:
        for b in members:
            if a + b <= bound:
                assert s.contains(a + b)


def test_from_gaps_examples():
    assert core.from_gaps([]) == core.NATURALS
    assert core.from_gaps([1, 2, 4]).min_gens == (3, 5, 7)
    assert core.from_gaps([1, 3]).min_gens == (2, 5)
    with pytest.raises(NotASemigroup) as exc:
        core.from_gaps([2])
    assert exc.value.witness == (1, 1)


def test_round_trips(semigroups_by_genus):
    for s in up_to_genus(semigroups_by_genus, 10):
        assert core.from_gaps(s.gaps()) == s
        assert core.from_fundamental_gaps(core.fundamental_gaps(s)) == s


# --- invariants ---------------------------------------------------------------

def test_invariant_report_examples():
    rep = core.invariant_report(S(2, 3))
    assert rep.type_ == 1 and rep.pseudo_frobenius == (1,)
    rep = core.invariant_report(S(3, 5, 7))
    assert rep.pseudo_frobenius == (2, 4)
    assert rep.type_ == 2
    assert (rep.wilf_left, rep.wilf_right) == (9, 10)
    rep = core.invariant_report(S(4, 5, 6))
    assert (rep.frobenius, rep.genus, rep.type_) == (7, 4, 1)


def test_naturals_conventions():
    rep = core.invariant_report(core.NATURALS)
    assert rep.pseudo_frobenius == (-1,)
    assert rep.type_ == 1
    assert core.classify(core.NATURALS) == core.SYMMETRIC


def test_pf_max_is_frobenius(semigroups_by_genus):
    for s in up_to_genus(semigroups_by_genus, 9):
        pf = core.pseudo_frobenius_numbers(s)
        assert max(pf) == s.frobenius


def test_sylvester_dim2_formulas():
    for a in range(2, 31):
        for b in range(a + 1, 31):
            if math.gcd(a, b) != 1:
                continue
            s = S(a, b)
            assert s.frobenius == a * b - a - b
            assert s.genus == (a - 1) * (b - 1) // 2
            assert core.invariant_report(s).type_ == 1


def test_apery_examples():
    assert core.apery_set(S(2, 3), 2).witnesses == (0, 3)
    assert core.apery_set(S(3, 5, 7), 3).witnesses == (0, 7, 5)
    assert core.apery_set(S(4, 5, 6), 4).witnesses == (0, 5, 6, 11)
    with pytest.raises(NotAMember):
        core.apery_set(S(3, 5, 7), 4)


def test_apery_frobenius_identity(semigroups_by_genus):
    rng = random.Random(7)
    for s in up_to_genus(semigroups_by_genus, 9):
        if s.is_natural:
            continue
        n = rng.choice([g for g in s.min_gens])
        ap = core.apery_set(s, n)
        assert max(ap.witnesses) - n == s.frobenius
        for i, w in enumerate(ap.witnesses):
            assert w % n == i
            assert not s.contains(w - n)


# --- gap representations ---------------------------------------------------------

def test_fundamental_gaps_examples():
    assert core.fundamental_gaps(core.NATURALS) == ()
    assert core.fundamental_gaps(S(3, 5, 7)) == (4,)
    assert core.fundamental_gaps(S(2, 3)) == (1,)


def test_divisor_identity(semigroups_by_genus):
    for s in up_to_genus(semigroups_by_genus, 10):
        fg = core.fundamental_gaps(s)
        assert core.divisor_closure(fg) == set(s.gaps())


def test_from_fundamental_gaps():
    assert core.from_fundamental_gaps([4]).min_gens == (3, 5, 7)
    assert core.from_fundamental_gaps([]) == core.NATURALS
    # {2} is a fundamental gap set: its divisor closure {1,2} leaves <3,4,5>
    assert core.from_fundamental_gaps([2]).min_gens == (3, 4, 5)
    with pytest.raises(NotFundamentalGapSet):
        core.from_fundamental_gaps([2, 4])  # reconstruction has FG {4}
    with pytest.raises(NotFundamentalGapSet):
        core.from_fundamental_gaps([5])  # complement of {1,5} is not closed


# --- classification --------------------------------------------------------------

def test_classify_examples():
    assert core.classify(S(4, 6, 7)) == core.SYMMETRIC
    assert core.classify(S(3, 5, 7)) == core.PSEUDO_SYMMETRIC
    assert core.classify(S(4, 6, 7, 9)) == core.REDUCIBLE_OTHER


def test_classify_genus_identities(semigroups_by_genus):
    for s in up_to_genus(semigroups_by_genus, 10):
        cls = core.classify(s)
        if cls == core.SYMMETRIC and not s.is_natural:
            assert 2 * s.genus == s.frobenius + 1
            assert s.frobenius % 2 == 1
        if cls == core.PSEUDO_SYMMETRIC:
            assert 2 * s.genus == s.frobenius + 2
            assert s.frobenius % 2 == 0


# --- oversemigroups --------------------------------------------------------------

def test_oversemigroups_examples():
    assert core.oversemigroups(core.NATURALS) == (core.NATURALS,)
    assert set(core.oversemigroups(S(2, 3))) == {S(2, 3), core.NATURALS}
    assert set(core.oversemigroups(S(3, 4, 5))) == \
        {S(3, 4, 5), S(2, 3), core.NATURALS}


def test_oversemigroups_exhaustive(semigroups_by_genus):
    # compare against every semigroup with Frobenius number at most F(S)
    leaves = oracles.closed_complements(15)
    pool = [core.from_gaps(g) for g in leaves]
    for s in up_to_genus(semigroups_by_genus, 8):
        sgaps = set(s.gaps())
        expected = {t for t in pool
                    if t.frobenius <= s.frobenius and set(t.gaps()) <= sgaps}
        got = set(core.oversemigroups(s))
        assert got == expected
        for t in got:
            assert core.is_oversemigroup(t, s)


# --- serialization -----------------------------------------------------------------

def test_parse_and_json():
    assert core.parse_generators("3,5,7") == (3, 5, 7)
    assert core.parse_generators(" 3 , 5 ") == (3, 5)
    with pytest.raises(ParseError):
        core.parse_generators("3,x")
    with pytest.raises(ParseError):
        core.parse_generators("")
    d = S(3, 5, 7).to_json_dict()
    assert d == {"min_gens": [3, 5, 7], "frobenius": 4, "genus": 3,
                 "gaps": [1, 2, 4]}
    assert d["gaps"] == sorted(d["gaps"])
