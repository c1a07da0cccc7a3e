"""Numerical semigroups as canonical immutable values.

A numerical semigroup is an additively closed subset of the nonnegative
integers containing 0 whose complement is finite.  The canonical value stores
the unique minimal generating system, the Frobenius number F (largest
nonmember, -1 for the full set), a membership bitmap on [0, F+1] packed into
a Python int (bit i set iff i is a member; membership above F is implicit),
and the cached genus (number of gaps).

All values are immutable and hashable; every operation here is a pure
function, so values can be shared freely across threads or processes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Iterator

from .errors import (
    BadInput,
    EmptyInput,
    GcdNotOne,
    NotAMember,
    NotASemigroup,
    NotFundamentalGapSet,
    ParseError,
)

SYMMETRIC = "symmetric"
PSEUDO_SYMMETRIC = "pseudo_symmetric"
REDUCIBLE_OTHER = "reducible_other"


@dataclass(frozen=True)
class NumericalSemigroup:
    """Canonical value: minimal generators, Frobenius number, bitmap, genus."""

    min_gens: tuple[int, ...]
    frobenius: int
    members: int  # bitmap on [0, frobenius+1], bit i == membership of i
    genus: int

    @property
    def multiplicity(self) -> int:
        return self.min_gens[0]

    @property
    def embedding_dimension(self) -> int:
        return len(self.min_gens)

    @property
    def conductor(self) -> int:
        return self.frobenius + 1

    @property
    def is_natural(self) -> bool:
        return self.frobenius == -1

    def contains(self, x: int) -> bool:
        if x < 0:
            return False
        if x > self.frobenius:
            return True
        return bool((self.members >> x) & 1)

    def __contains__(self, x: int) -> bool:
        return self.contains(x)

    def gaps(self) -> tuple[int, ...]:
        return tuple(x for x in range(1, self.frobenius + 1)
                     if not (self.members >> x) & 1)

    def elements_up_to(self, bound: int) -> Iterator[int]:
        """Members in [0, bound], ascending."""
        for x in range(bound + 1):
            if self.contains(x):
                yield x

    def to_json_dict(self) -> dict:
        return {
            "min_gens": list(self.min_gens),
            "frobenius": self.frobenius,
            "genus": self.genus,
            "gaps": list(self.gaps()),
        }

    def __str__(self) -> str:
        return "<" + ",".join(str(g) for g in self.min_gens) + ">"


NATURALS = NumericalSemigroup(min_gens=(1,), frobenius=-1, members=1, genus=0)


def parse_generators(text: str) -> tuple[int, ...]:
    """Parse a comma-separated generator list like "3,5,7"."""
    parts = [p.strip() for p in text.split(",") if p.strip()]
    if not parts:
        raise ParseError(f"no generators in {text!r}")
    try:
        return tuple(int(p) for p in parts)
    except ValueError:
        raise ParseError(f"bad generator list {text!r}") from None


# --- construction -----------------------------------------------------------

def _monoid_mask(gens: Iterable[int], nbits: int) -> int:
    """Membership bitmap on [0, nbits) of the monoid generated by gens."""
    lim = (1 << nbits) - 1
    mask = 1
    changed = True
    while changed:
        changed = False
        for g in gens:
            grown = mask | ((mask << g) & lim)
            if grown != mask:
                mask = grown
                changed = True
    return mask


def _minimal_generators(mask: int, frobenius: int, mult: int) -> tuple[int, ...]:
    """Extract minimal generators from a membership bitmap.

    mask must be accurate on [0, frobenius+1]; every minimal generator lies
    in [mult, frobenius + mult] because x - mult is a gap for any generator
    x > mult.
    """
    top = frobenius + mult + 1
    ext = mask | (~((1 << (frobenius + 1)) - 1) & ((1 << (top + 1)) - 1))
    positives = ext & ~1
    if top <= 4096:
        # one shifted-or per positive member marks all two-term sums
        reducible = 0
        lim = (1 << (top + 1)) - 1
        a = positives
        while a:
            low = a & -a
            bit = low.bit_length() - 1
            if 2 * bit > top:
                break
            reducible |= (positives << bit) & lim
            a &= a - 1
        gens = positives & ~reducible
        return tuple(x for x in range(1, top + 1) if (gens >> x) & 1)
    # large conductor: per-candidate scan with early exit
    out = []
    for x in range(mult, top + 1):
        if not (ext >> x) & 1:
            continue
        reducible = False
        for a in range(mult, x // 2 + 1):
            if (ext >> a) & 1 and (ext >> (x - a)) & 1:
                reducible = True
                break
        if not reducible:
            out.append(x)
    return tuple(out)


def _from_member_mask(mask: int, frobenius: int) -> NumericalSemigroup:
    """Canonicalize a membership bitmap known to be additively closed.

    mask covers at least [0, frobenius+1]; bits above frobenius are ignored
    and treated as members.
    """
    if frobenius < 0:
        return NATURALS
    full = (1 << (frobenius + 2)) - 1
    mask = (mask & full) | (1 << (frobenius + 1))
    nonmembers = ~mask & full
    f = nonmembers.bit_length() - 1
    if f < 0:
        return NATURALS
    if f != frobenius:
        return _from_member_mask(mask, f)
    genus = bin(nonmembers).count("1")
    positive = mask & ~1  # nonzero: bit f+1 is always set
    mult = (positive & -positive).bit_length() - 1
    gens = _minimal_generators(mask, f, mult)
    return NumericalSemigroup(min_gens=gens, frobenius=f,
                              members=mask & full, genus=genus)


def from_generators(gens: Iterable[int]) -> NumericalSemigroup:
    """Canonical semigroup generated by gens; gcd must be 1.

    Duplicates and redundant generators are dropped; zero or negative
    entries are rejected outright.
    """
    glist = list(gens)
    if not glist:
        raise EmptyInput("empty generator list")
    for g in glist:
        if not isinstance(g, int) or g < 1:
            raise BadInput(f"generators must be positive integers, got {g!r}")
    gset = sorted(set(glist))
    if reduce(math.gcd, gset) != 1:
        raise GcdNotOne(f"gcd of {gset} is {reduce(math.gcd, gset)}")
    if gset[0] == 1:
        return NATURALS
    mult = gset[0]
    nbits = max(2 * gset[-1] + 2, 64)
    while True:
        mask = _monoid_mask(gset, nbits)
        nonmembers = ~mask & ((1 << nbits) - 1)
        f = nonmembers.bit_length() - 1
        # accept only if the window ends with a run of >= mult members,
        # which forces every larger integer in (add mult repeatedly)
        if f + mult + 2 <= nbits:
            break
        nbits *= 2
    return _from_member_mask(mask, f)


def from_gaps(gapset: Iterable[int]) -> NumericalSemigroup:
    """Semigroup whose gap set is exactly gapset, if the complement is closed.

    Raises NotASemigroup with a witnessing pair (x, y) of members whose sum
    lands in gapset otherwise.
    """
    gaps_ = sorted(set(gapset))
    for x in gaps_:
        if not isinstance(x, int) or x < 1:
            raise BadInput(f"gaps must be positive integers, got {x!r}")
    if not gaps_:
        return NATURALS
    f = gaps_[-1]
    full = (1 << (f + 2)) - 1
    mask = full
    for x in gaps_:
        mask &= ~(1 << x)
    # closure check: no two members may sum to a gap
    for a in range(1, f + 1):
        if not (mask >> a) & 1:
            continue
        viol = mask & ~(mask >> a) & ((1 << (f - a + 1)) - 1)
        if viol:
            b = (viol & -viol).bit_length() - 1
            raise NotASemigroup(
                f"complement not closed: {a} + {b} = {a + b} is a gap",
                witness=(a, b))
    return _from_member_mask(mask, f)


def intersect(s: NumericalSemigroup, t: NumericalSemigroup) -> NumericalSemigroup:
    if s.frobenius < t.frobenius:
        s, t = t, s
    f = s.frobenius
    if f < 0:
        return NATURALS
    full = (1 << (f + 2)) - 1
    tmask = t.members | (~((1 << (t.frobenius + 2)) - 1) & full)
    return _from_member_mask(s.members & tmask, f)


def adjoin_frobenius(s: NumericalSemigroup) -> NumericalSemigroup:
    """S together with its Frobenius number (the parent in the genus tree)."""
    if s.is_natural:
        return s
    return _from_member_mask(s.members | (1 << s.frobenius), s.frobenius)


# --- invariants ---------------------------------------------------------------

@dataclass(frozen=True)
class InvariantReport:
    multiplicity: int
    embedding_dimension: int
    frobenius: int
    genus: int
    type_: int
    pseudo_frobenius: tuple[int, ...]
    wilf_left: int
    wilf_right: int


def pseudo_frobenius_numbers(s: NumericalSemigroup) -> tuple[int, ...]:
    """Gaps x with x + (S minus 0) inside S.

    By convention PF of the full set is (-1,), so the type of every
    semigroup is at least one and F = max PF always holds.
    """
    if s.is_natural:
        return (-1,)
    f, m = s.frobenius, s.multiplicity
    small = [x for x in range(m, f + m + 1) if s.contains(x)]
    out = []
    for x in s.gaps():
        if all(s.contains(x + t) for t in small):
            out.append(x)
    return tuple(out)


def invariant_report(s: NumericalSemigroup) -> InvariantReport:
    pf = pseudo_frobenius_numbers(s)
    e, g, f = s.embedding_dimension, s.genus, s.frobenius
    return InvariantReport(
        multiplicity=s.multiplicity,
        embedding_dimension=e,
        frobenius=f,
        genus=g,
        type_=len(pf),
        pseudo_frobenius=pf,
        wilf_left=e * g,
        wilf_right=(e - 1) * (f + 1),
    )


@dataclass(frozen=True)
class AperySet:
    base: int
    witnesses: tuple[int, ...]  # index i holds the least member congruent to i


def apery_set(s: NumericalSemigroup, n: int) -> AperySet:
    if n < 1 or not s.contains(n):
        raise NotAMember(f"{n} is not a positive member of {s}")
    witnesses = [-1] * n
    found = 0
    x = 0
    while found < n:
        if s.contains(x) and witnesses[x % n] < 0:
            witnesses[x % n] = x
            found += 1
        x += 1
    return AperySet(base=n, witnesses=tuple(witnesses))


# --- gap-side representations -------------------------------------------------

def fundamental_gaps(s: NumericalSemigroup) -> tuple[int, ...]:
    """Gaps x with 2x and 3x members (hence kx for every k >= 2)."""
    return tuple(x for x in s.gaps() if s.contains(2 * x) and s.contains(3 * x))


def divisor_closure(xs: Iterable[int]) -> set[int]:
    out: set[int] = set()
    for x in xs:
        for d in range(1, int(math.isqrt(x)) + 1):
            if x % d == 0:
                out.add(d)
                out.add(x // d)
    return out


def from_fundamental_gaps(xs: Iterable[int]) -> NumericalSemigroup:
    """Reconstruct the semigroup whose fundamental gaps are exactly xs."""
    xset = sorted(set(xs))
    for x in xset:
        if not isinstance(x, int) or x < 1:
            raise BadInput(f"fundamental gaps must be positive integers, got {x!r}")
    try:
        s = from_gaps(divisor_closure(xset))
    except NotASemigroup as exc:
        raise NotFundamentalGapSet(
            f"divisor closure of {xset} is not a gap set: {exc}") from exc
    fg = set(fundamental_gaps(s))
    if fg != set(xset):
        raise NotFundamentalGapSet(
            f"reconstruction has fundamental gaps {sorted(fg)}, not {xset}")
    return s


# --- classification -----------------------------------------------------------

def classify(s: NumericalSemigroup) -> str:
    """One of symmetric / pseudo_symmetric / reducible_other.

    The full set is symmetric by convention.  The defining gap test is the
    primary computation; the genus shortcut (g = (F+1)/2 resp. (F+2)/2) is
    asserted against it.
    """
    if s.is_natural:
        return SYMMETRIC
    f, g = s.frobenius, s.genus
    gaps_ = s.gaps()
    sym = all(s.contains(f - x) for x in gaps_)
    psym = f % 2 == 0 and all(s.contains(f - x) or 2 * x == f for x in gaps_)
    assert sym == (2 * g == f + 1), "symmetry gap test disagrees with genus count"
    assert (psym and not sym) == (f % 2 == 0 and 2 * g == f + 2), \
        "pseudo-symmetry gap test disagrees with genus count"
    if sym:
        return SYMMETRIC
    if psym:
        return PSEUDO_SYMMETRIC
    return REDUCIBLE_OTHER


def is_irreducible(s: NumericalSemigroup) -> bool:
    return classify(s) in (SYMMETRIC, PSEUDO_SYMMETRIC)


# --- oversemigroups -----------------------------------------------------------

def special_gaps(s: NumericalSemigroup) -> tuple[int, ...]:
    """Gaps x for which S with x adjoined is again a semigroup."""
    if s.is_natural:
        return ()
    return tuple(x for x in pseudo_frobenius_numbers(s) if s.contains(2 * x))


def _adjoin(s: NumericalSemigroup, x: int) -> NumericalSemigroup:
    remaining = [y for y in s.gaps() if y != x]
    return from_gaps(remaining)


def oversemigroups(s: NumericalSemigroup) -> tuple[NumericalSemigroup, ...]:
    """All semigroups containing s, via breadth-first special-gap adjunction."""
    seen = {s}
    frontier = [s]
    while frontier:
        t = frontier.pop()
        for x in special_gaps(t):
            u = _adjoin(t, x)
            if u not in seen:
                seen.add(u)
                frontier.append(u)
    return tuple(sorted(seen, key=lambda t: (t.genus, t.min_gens)))


def is_oversemigroup(t: NumericalSemigroup, s: NumericalSemigroup) -> bool:
    """True iff t contains s, checked bit-wise: every gap of t is a gap of s."""
    bound = max(t.conductor, s.conductor, 0)
    return all(t.contains(x) for x in s.elements_up_to(bound))
