"""Quotients by a positive integer, multiples searches, irreducible decompositions.

The quotient S/p collects the x whose p-fold multiple lies in S.  Going the
other way, the multiples search enumerates every T with T/d = S below a
Frobenius cap: the multiples of d inside T are forced to be exactly d*S, the
remaining residues are filled by a pruned inclusion/exclusion search over
closure-consistent subsets.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from itertools import combinations

from . import core
from .core import NumericalSemigroup
from .errors import BadInput, BudgetExceeded, CapTooSmall


def quotient(s: NumericalSemigroup, p: int) -> NumericalSemigroup:
    """S/p = {x : p*x in S}; closed because p(x+y) = px + py."""
    if p < 1:
        raise BadInput("quotient divisor must be positive")
    if p == 1 or s.is_natural:
        return s
    bound = s.frobenius // p + 1
    mask = 1
    for x in range(1, bound + 2):
        if s.contains(p * x):
            mask |= 1 << x
    return core._from_member_mask(mask, bound)


def quotient_fundamental_gaps(s: NumericalSemigroup, d: int) -> tuple[int, ...]:
    """Fundamental gaps of S/d, computed as {h/d : h fundamental gap of S,
    d divides h} and verified against the definitional scan."""
    if d < 1:
        raise BadInput("divisor must be positive")
    predicted = tuple(sorted(h // d for h in core.fundamental_gaps(s) if h % d == 0))
    direct = core.fundamental_gaps(quotient(s, d))
    if predicted != direct:
        raise AssertionError(
            f"fundamental-gap transport identity failed for {s} / {d}: "
            f"{predicted} vs {direct}")
    return predicted


# --- multiples ------------------------------------------------------------------

_FREE_POSITION_BUDGET = 30


def multiples_up_to(s: NumericalSemigroup, d: int, f_cap: int
                    ) -> tuple[NumericalSemigroup, ...]:
    """All T with T/d = S and F(T) <= f_cap, sorted by (frobenius, generators).

    T must contain d*S, avoid d*(gaps of S), and contain every integer past
    f_cap; every gap d*y of the forced part sits at or below d*F(S), so no
    T exists when the cap is smaller than that.
    """
    if d < 1:
        raise BadInput("multiplier must be positive")
    if f_cap < s.frobenius:
        raise BadInput(f"cap {f_cap} below F(S) = {s.frobenius}")
    if d == 1:
        return (s,)
    if f_cap < d * s.frobenius:
        raise CapTooSmall(
            f"no multiple exists with Frobenius <= {f_cap}: every {d}-fold "
            f"multiple of {s} has Frobenius >= {d * s.frobenius}")
    free = sum(1 for x in range(1, f_cap + 1) if x % d != 0)
    if free > _FREE_POSITION_BUDGET:
        raise BudgetExceeded(
            f"{free} undetermined residue positions exceed the search budget")

    results: list[int] = []

    def rec(x: int, mask: int) -> None:
        if x > f_cap:
            results.append(mask)
            return
        forced = False
        half = x >> 1
        a = 1
        while a <= half:
            if (mask >> a) & 1 and (mask >> (x - a)) & 1:
                forced = True
                break
            a += 1
        if x % d == 0:
            must = s.contains(x // d)
            if forced and not must:
                return  # closure forces a forbidden multiple: dead branch
            rec(x + 1, mask | (1 << x) if must else mask)
        elif forced:
            rec(x + 1, mask | (1 << x))
        else:
            rec(x + 1, mask | (1 << x))
            rec(x + 1, mask)

    rec(1, 1)
    out = []
    for mask in results:
        full = mask | (1 << (f_cap + 1))
        t = core._from_member_mask(full, f_cap)
        assert quotient(t, d) == s, f"search produced {t} with {t}/{d} != {s}"
        out.append(t)
    if not out:
        raise CapTooSmall(f"no multiple of {s} by {d} has Frobenius <= {f_cap}")
    return tuple(sorted(out, key=lambda t: (t.frobenius, t.min_gens)))


def min_multiple_frobenius(s: NumericalSemigroup, d: int = 2
                           ) -> tuple[int, NumericalSemigroup]:
    """Least Frobenius number among the d-fold multiples of s, with a witness.

    Searches with a doubling cap schedule; the first nonempty cap already
    contains the global minimizer.
    """
    f_cap = max(d * s.frobenius, s.frobenius, d)
    while True:
        try:
            ts = multiples_up_to(s, d, f_cap)
        except CapTooSmall:
            f_cap *= 2
            continue
        best = min(ts, key=lambda t: (t.frobenius, t.min_gens))
        return best.frobenius, best


# --- irreducible decomposition ----------------------------------------------------

@dataclass(frozen=True)
class IrreducibleDecomposition:
    components: tuple[NumericalSemigroup, ...]
    minimal: bool


def irreducible_decomposition(s: NumericalSemigroup) -> IrreducibleDecomposition:
    """Minimum-cardinality family of irreducible oversemigroups intersecting
    to s.  Ties are broken by lexicographic comparison of the sorted
    Frobenius numbers, largest key first: components as close to s as
    possible."""
    if core.is_irreducible(s):
        return IrreducibleDecomposition(components=(s,), minimal=True)
    candidates = [t for t in core.oversemigroups(s)
                  if not t.is_natural and core.is_irreducible(t)]
    candidates.sort(key=lambda t: (t.frobenius, t.min_gens))
    for k in range(1, len(candidates) + 1):
        hits = []
        for family in combinations(candidates, k):
            meet = reduce(core.intersect, family)
            if meet == s:
                hits.append(family)
        if hits:
            best = max(hits, key=lambda fam: (sorted(t.frobenius for t in fam),
                                              fam[0].min_gens))
            comps = tuple(sorted(best, key=lambda t: (t.frobenius, t.min_gens)))
            return IrreducibleDecomposition(components=comps, minimal=True)
    raise AssertionError(f"no irreducible decomposition found for {s}")
