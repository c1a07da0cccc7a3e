"""Proportionally modular Diophantine inequalities and interval semigroups.

The solution set of a*x mod b <= c*x is a numerical semigroup; for
c < a < b it equals the set of integers falling in some dilation k*[b/a,
b/(a-c)].  Bezout sequences (adjacent-unimodular fraction chains) connect
interval descriptions with generator descriptions, and the Stern-Brocot
tree navigates both.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from . import core
from .core import NumericalSemigroup
from .errors import (
    BadInput,
    DegenerateInterval,
    DepthTooLarge,
    NotReduced,
    OrderViolation,
    ParseError,
)


@dataclass(frozen=True)
class Frac:
    """Reduced nonnegative fraction; 1/0 serves as the Stern-Brocot sentinel."""

    num: int
    den: int

    def __post_init__(self):
        if self.num < 0 or self.den < 0:
            raise BadInput(f"negative fraction {self.num}/{self.den}")
        if self.num == 0 and self.den == 0:
            raise BadInput("0/0 is not a fraction")
        if self.den == 0 and self.num != 1:
            raise NotReduced(f"{self.num}/0 is not reduced")
        if self.den and math.gcd(self.num, self.den) != 1:
            raise NotReduced(f"{self.num}/{self.den} is not reduced")

    @classmethod
    def reduced(cls, num: int, den: int) -> "Frac":
        if den == 0:
            return cls(1, 0)
        g = math.gcd(num, den)
        return cls(num // g, den // g)

    def __lt__(self, other: "Frac") -> bool:
        return self.num * other.den < other.num * self.den

    def __le__(self, other: "Frac") -> bool:
        return self.num * other.den <= other.num * self.den

    def __gt__(self, other: "Frac") -> bool:
        return other < self

    def __ge__(self, other: "Frac") -> bool:
        return other <= self

    @property
    def is_finite(self) -> bool:
        return self.den != 0

    def __str__(self) -> str:
        return f"{self.num}/{self.den}"


def parse_fraction(text: str) -> Frac:
    t = text.strip()
    try:
        if "/" in t:
            p, q = t.split("/")
            num, den = int(p), int(q)
        else:
            num, den = int(t), 1
    except ValueError:
        raise ParseError(f"bad fraction {text!r}") from None
    if den == 0:
        raise ParseError("zero denominator")
    if num < 0 or den < 0:
        raise ParseError(f"fractions must be nonnegative: {text!r}")
    return Frac(num, den)  # NotReduced propagates


def mediant(f: Frac, g: Frac) -> Frac:
    return Frac(f.num + g.num, f.den + g.den)


def _det(g: Frac, f: Frac) -> int:
    """Unimodularity form: positive when f < g, equal to 1 for tree neighbours."""
    return g.num * f.den - f.num * g.den


@dataclass(frozen=True)
class RationalInterval:
    lo: Frac
    hi: Frac
    lo_open: bool = False
    hi_open: bool = False

    def __post_init__(self):
        if not (self.lo.is_finite and self.hi.is_finite):
            raise BadInput("interval endpoints must be finite")
        if self.lo.num < 1 or self.hi.num < 1:
            raise BadInput("interval endpoints must be positive")
        if self.hi < self.lo:
            raise OrderViolation(f"interval ends reversed: {self.lo} > {self.hi}")
        if not self.lo < self.hi:
            raise DegenerateInterval(f"degenerate interval at {self.lo}")

    def __str__(self) -> str:
        return ("(" if self.lo_open else "") + f"{self.lo}..{self.hi}" + \
            (")" if self.hi_open else "")


def parse_interval(text: str) -> RationalInterval:
    t = text.strip()
    lo_open = t.startswith("(")
    hi_open = t.endswith(")")
    t = t.removeprefix("(").removesuffix(")")
    if ".." not in t:
        raise ParseError(f"interval must look like p/q..r/s, got {text!r}")
    a, b = t.split("..", 1)
    return RationalInterval(parse_fraction(a), parse_fraction(b),
                            lo_open=lo_open, hi_open=hi_open)


# --- interval membership -------------------------------------------------------

def _k_range(iv: RationalInterval, x: int) -> tuple[int, int]:
    """Integers k with x inside the k-th dilation of the interval,
    as an inclusive range (possibly empty)."""
    # x <= k*hi  (strict when hi_open)  and  k*lo <= x  (strict when lo_open)
    c, d = iv.hi.num, iv.hi.den
    a, b = iv.lo.num, iv.lo.den
    if iv.hi_open:
        kmin = (x * d) // c + 1
    else:
        kmin = -((-x * d) // c)
    if iv.lo_open:
        kmax = -((-x * b) // a) - 1
    else:
        kmax = (x * b) // a
    return kmin, kmax


def interval_contains(iv: RationalInterval, x: int) -> bool:
    """True iff x is in the submonoid of the rationals generated by the
    interval, i.e. lies in some k-fold dilation."""
    if x == 0:
        return True
    if x < 0:
        return False
    kmin, kmax = _k_range(iv, x)
    return max(kmin, 1) <= kmax


def _interval_conductor_bound(iv: RationalInterval) -> int:
    """Every integer at or above the bound is a member: once
    k > lo/(hi-lo), consecutive dilations overlap."""
    a, b = iv.lo.num, iv.lo.den
    c, d = iv.hi.num, iv.hi.den
    width_num = c * b - a * d  # (hi-lo) * b * d, positive
    k = -((-a * d) // width_num) + 1
    return (k * a) // b + 1


def semigroup_from_interval(iv: RationalInterval) -> NumericalSemigroup:
    bound = _interval_conductor_bound(iv)
    gaps = [x for x in range(1, bound + 1) if not interval_contains(iv, x)]
    return core.from_gaps(gaps)


def interval_multiplicity(iv: RationalInterval) -> int:
    """Least positive member of the interval semigroup."""
    a, b = iv.lo.num, iv.lo.den
    c, d = iv.hi.num, iv.hi.den
    klimit = max(b + 1, (b * d) // (c * b - a * d) + 2)
    for k in range(1, klimit + 1):
        if iv.lo_open:
            x = (k * a) // b + 1
        else:
            x = -((-k * a) // b)
        kmin, kmax = _k_range(iv, x) if x >= 1 else (1, 0)
        if x >= 1 and kmin <= k <= kmax:
            return x
    raise AssertionError(f"no positive member found in {iv}")  # unreachable


# --- inequalities ---------------------------------------------------------------

def solve_prop_modular(a: int, b: int, c: int) -> NumericalSemigroup:
    """Solution set of a*x mod b <= c*x.

    Every x at or past ceil((b-1)/c) satisfies the inequality, so the scan
    is finite.  For c < a < b the result coincides with the interval
    semigroup of [b/a, b/(a-c)].
    """
    if a < 1 or b < 1 or c < 1:
        raise BadInput("factor, modulus and proportion must be positive")
    bound = -((-(b - 1)) // c)
    gaps = [x for x in range(1, bound + 1) if (a * x) % b > c * x]
    return core.from_gaps(gaps)


def solve_contracted(a: int, b: int, c: int, d: int) -> NumericalSemigroup:
    """Zero together with the solutions of a*x mod b <= c*x - d."""
    if b < 1 or c < 1:
        raise BadInput("modulus and proportion must be positive")
    if a < 0 or d < 0:
        raise BadInput("factor and shift must be nonnegative")
    bound = -((-(b - 1 + d)) // c)
    gaps = [x for x in range(1, bound + 1) if (a * x) % b > c * x - d]
    return core.from_gaps(gaps)


# --- Stern-Brocot tree ----------------------------------------------------------

_ZERO = Frac(0, 1)
_INF = Frac(1, 0)


def stern_brocot_row(depth: int) -> list[Frac]:
    """The mediant-expansion row at the given depth, sentinels included."""
    if depth < 0:
        raise BadInput("depth must be nonnegative")
    if depth > 20:
        raise DepthTooLarge(f"depth {depth} above budget 20")
    row = [_ZERO, Frac(1, 1), _INF]
    for _ in range(depth):
        nxt = [row[0]]
        for left, right in zip(row, row[1:]):
            nxt.append(mediant(left, right))
            nxt.append(right)
        row = nxt
    return row


def _check_pair(f1: Frac, f2: Frac) -> None:
    if not (f1.is_finite and f2.is_finite):
        raise BadInput("sentinel fractions not allowed here")
    if f1.num < 1 or f2.num < 1:
        raise BadInput("fractions must be positive")
    if not f1 < f2:
        raise OrderViolation(f"{f1} is not below {f2}")


def stern_brocot_predecessor(f1: Frac, f2: Frac) -> Frac:
    """Deepest common ancestor of f1 and f2: the first node of the descent
    that separates them.  Its numerator is the multiplicity of the interval
    semigroup of [f1, f2]."""
    _check_pair(f1, f2)
    lo, hi = _ZERO, _INF
    while True:
        med = mediant(lo, hi)
        if med < f1:
            lo = med
        elif f2 < med:
            hi = med
        else:
            return med


def _simplest_between(f1: Frac, f2: Frac) -> Frac:
    """Smallest-denominator fraction strictly between f1 and f2."""
    lo, hi = _ZERO, _INF
    while True:
        med = mediant(lo, hi)
        if med <= f1:
            lo = med
        elif f2 <= med:
            hi = med
        else:
            return med


@dataclass(frozen=True)
class BezoutSequence:
    """Strictly increasing fractions with adjacent unimodularity; proper
    means no unimodular long-range pair remains."""

    terms: tuple[Frac, ...]
    proper: bool = False

    def numerators(self) -> tuple[int, ...]:
        return tuple(f.num for f in self.terms)


def is_bezout_sequence(terms) -> bool:
    return all(_det(g, f) == 1 for f, g in zip(terms, terms[1:]))


def is_proper_bezout_sequence(terms) -> bool:
    if not is_bezout_sequence(terms):
        return False
    n = len(terms)
    for i in range(n):
        for j in range(i + 2, n):
            if _det(terms[j], terms[i]) < 2:
                return False
    return True


def numerators_convex(nums) -> bool:
    valley = nums.index(min(nums))
    left = all(nums[i] >= nums[i + 1] for i in range(valley))
    right = all(nums[i] <= nums[i + 1] for i in range(valley, len(nums) - 1))
    return left and right


def proper_bezout_sequence(f1: Frac, f2: Frac) -> BezoutSequence:
    """The unique proper Bezout sequence with the given ends.

    Built by refining: between any adjacent non-unimodular pair insert the
    smallest-denominator fraction strictly between them, then reduce to
    proper form by greedy farthest-unimodular jumps from the left.  All
    postconditions are re-verified; a violation raises.
    """
    _check_pair(f1, f2)
    seq = [f1, f2]
    i = 0
    inserts = 0
    while i < len(seq) - 1:
        if _det(seq[i + 1], seq[i]) == 1:
            i += 1
            continue
        seq.insert(i + 1, _simplest_between(seq[i], seq[i + 1]))
        inserts += 1
        if inserts > 100000:
            raise AssertionError("Bezout refinement failed to terminate")
    out = [seq[0]]
    i = 0
    while i < len(seq) - 1:
        j = max(j for j in range(i + 1, len(seq)) if _det(seq[j], seq[i]) == 1)
        out.append(seq[j])
        i = j
    terms = tuple(out)
    if terms[0] != f1 or terms[-1] != f2:
        raise AssertionError("Bezout reduction lost an end")
    if not is_proper_bezout_sequence(terms):
        raise AssertionError(f"constructed sequence not proper: {terms}")
    if not numerators_convex([f.num for f in terms]):
        raise AssertionError(f"numerators not convex: {terms}")
    return BezoutSequence(terms=terms, proper=True)


# --- recognizer -----------------------------------------------------------------

@dataclass(frozen=True)
class PMRecognition:
    status: str  # yes / no / undecided
    witness: Optional[tuple[int, ...]]  # convex ordering of the generators


_RECOGNIZER_MAX_DIM = 24


def is_proportionally_modular(s: NumericalSemigroup) -> "PMRecognition":
    """Search for a convex ordering of the minimal generators with coprime
    neighbours and the interior divisibility condition.

    A convex arrangement of distinct values is a descending prefix, the
    minimum, then an ascending suffix, so it is determined by the subset
    placed left of the minimum: 2^(e-1) arrangements suffice.
    """
    gens = s.min_gens
    e = len(gens)
    if e == 1:
        return PMRecognition("yes", (gens[0],))
    if e > _RECOGNIZER_MAX_DIM:
        return PMRecognition("undecided", None)
    smallest = gens[0]
    others = list(gens[1:])  # ascending
    for pick in range(1 << (e - 1)):
        left = [others[i] for i in range(e - 1) if (pick >> i) & 1]
        right = [others[i] for i in range(e - 1) if not (pick >> i) & 1]
        arr = list(reversed(left)) + [smallest] + right
        if any(math.gcd(arr[i], arr[i + 1]) != 1 for i in range(e - 1)):
            continue
        if any((arr[j - 1] + arr[j + 1]) % arr[j] != 0 for j in range(1, e - 1)):
            continue
        return PMRecognition("yes", tuple(arr))
    return PMRecognition("no", None)
