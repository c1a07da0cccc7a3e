"""Genus tree of numerical semigroups and Frobenius-variety enumeration.

The tree has the full set at the root; the sons of S are S minus x for each
minimal generator x exceeding F(S), and the level of a vertex equals its
genus.  A Frobenius variety (family closed under intersection and under
adjoining the Frobenius number) is upward closed along tree paths, so
filtering children through a membership predicate enumerates exactly the
variety.

The traversal keeps lightweight (bitmap, frobenius, generators-above-F,
multiplicity) tuples and updates generator sets incrementally: removing x
can only create the new minimal generator x + m (plus x + m + 1 when x is
the multiplicity itself), every other generator above x survives unchanged.
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass
from multiprocessing import get_context
from typing import Callable, Iterable, Optional

from . import core
from .core import NumericalSemigroup
from .errors import BadInput, BudgetExceeded, VarietyAuditError

MAX_GENUS = 40


# --- membership predicates ----------------------------------------------------

def _mask_is_arf(mask: int, f: int) -> bool:
    # x+y-z with x, y, z members, x, y >= z; only values <= f can fail
    if f <= 0:
        return True
    mems = [z for z in range(1, f + 1) if (mask >> z) & 1]
    n = len(mems)
    for iz in range(n):
        z = mems[iz]
        for ix in range(iz, n):
            x = mems[ix]
            base = x - z
            if base > f:
                break
            for iy in range(ix, n):
                v = base + mems[iy]
                if v > f:
                    break
                if not (mask >> v) & 1:
                    return False
    return True


def _mask_is_saturated(mask: int, f: int) -> bool:
    # gcd-step test: s + gcd(members <= s) must be a member, for members <= f
    if f <= 0:
        return True
    import math
    d = 0
    for s in range(1, f + 1):
        if not (mask >> s) & 1:
            continue
        d = math.gcd(d, s)
        v = s + d
        if v <= f and not (mask >> v) & 1:
            return False
    return True


def is_arf(s: NumericalSemigroup) -> bool:
    """Closed under x+y-z for members x, y >= z."""
    return _mask_is_arf(s.members, s.frobenius)


def is_saturated(s: NumericalSemigroup) -> bool:
    """Closed under adding the gcd of all smaller nonzero members.

    Integer combinations z1*s1+...+zr*sr >= 0 over members below s realize
    exactly the multiples of their gcd, so stepping by gcd dominates the
    definitional condition.
    """
    return _mask_is_saturated(s.members, s.frobenius)


def is_max_embedding_dimension(s: NumericalSemigroup) -> bool:
    return s.embedding_dimension == s.multiplicity


def arf_closure(s: NumericalSemigroup) -> NumericalSemigroup:
    """Smallest Arf semigroup containing s, by iterated saturation."""
    if s.is_natural:
        return s
    f = s.frobenius
    mask = s.members
    while True:
        add = 0
        mems = [z for z in range(1, f + 1) if (mask >> z) & 1]
        n = len(mems)
        for iz in range(n):
            z = mems[iz]
            for ix in range(iz, n):
                base = mems[ix] - z
                if base > f:
                    break
                for iy in range(ix, n):
                    v = base + mems[iy]
                    if v > f:
                        break
                    if not (mask >> v) & 1:
                        add |= 1 << v
        if not add:
            break
        mask |= add
    return core._from_member_mask(mask, f)


def saturated_closure(s: NumericalSemigroup) -> NumericalSemigroup:
    """Smallest saturated semigroup containing s, by iterated gcd steps."""
    import math
    if s.is_natural:
        return s
    f = s.frobenius
    mask = s.members
    while True:
        add = 0
        d = 0
        for t in range(1, f + 1):
            if not (mask >> t) & 1:
                continue
            d = math.gcd(d, t)
            v = t + d
            if v <= f and not (mask >> v) & 1:
                add |= 1 << v
        if not add:
            break
        mask |= add
    return core._from_member_mask(mask, f)


@dataclass(frozen=True)
class PatternCheck:
    admitted_up_to_bound: bool
    counterexample: Optional[tuple[int, ...]]  # first violating sequence


def admits_pattern_bounded(s: NumericalSemigroup, coeffs: Iterable[int],
                           bound: int) -> PatternCheck:
    """Check a linear pattern on all nonincreasing member sequences with
    leading term at most bound.  A positive answer is bounded evidence, not
    a proof."""
    cs = tuple(coeffs)
    if not cs:
        raise BadInput("empty coefficient list")
    if any(c == 0 for c in cs):
        raise BadInput("pattern coefficients must be nonzero")
    if bound < s.frobenius + 1:
        raise BadInput(f"bound {bound} below conductor {s.frobenius + 1}")
    members = [x for x in range(bound + 1) if s.contains(x)]
    n = len(cs)
    seq = [0] * n

    def rec(pos: int, cap_idx: int) -> Optional[tuple[int, ...]]:
        if pos == n:
            val = sum(c * v for c, v in zip(cs, seq))
            if val < 0 or not s.contains(val):
                return tuple(seq)
            return None
        for i in range(cap_idx + 1):
            seq[pos] = members[i]
            bad = rec(pos + 1, i)
            if bad is not None:
                return bad
        return None

    # ascending leading term with nonincreasing tails: first violation in lex order
    bad = rec(0, len(members) - 1)
    if bad is not None:
        return PatternCheck(False, bad)
    return PatternCheck(True, None)


def variety_generated(xs: Iterable[NumericalSemigroup]) -> tuple[NumericalSemigroup, ...]:
    """Least family containing xs closed under intersection and
    Frobenius-adjoin; always contains the full set."""
    seen = set(xs)
    if not seen:
        raise BadInput("empty generating family")
    work = list(seen)
    while work:
        t = work.pop()
        u = core.adjoin_frobenius(t)
        if u not in seen:
            seen.add(u)
            work.append(u)
        for v in list(seen):
            w = core.intersect(t, v)
            if w not in seen:
                seen.add(w)
                work.append(w)
    return tuple(sorted(seen, key=lambda t: (t.genus, t.min_gens)))


# --- the tree -----------------------------------------------------------------

def children(s: NumericalSemigroup) -> list[NumericalSemigroup]:
    """Sons in the genus tree: S minus x for minimal generators x > F(S),
    in increasing x order.  Each son's Frobenius number is the removed x."""
    out = []
    for x in s.min_gens:
        if x <= s.frobenius:
            continue
        full = (1 << (x + 2)) - 1
        ext = s.members | (full & ~((1 << (s.frobenius + 1)) - 1))
        out.append(core._from_member_mask(ext & ~(1 << x), x))
    return out


@dataclass(frozen=True)
class GenusCensus:
    counts: tuple[int, ...]  # counts[g] = accepted vertices at level g
    predicate_name: str


_NAMED_PREDICATES: dict[str, Optional[Callable[[int, int], bool]]] = {
    "all": None,
    "arf": _mask_is_arf,
    "saturated": _mask_is_saturated,
}


def _expand(node, accept, sink, counts, g_max, keep_leaves=False):
    """Expand one tree node, counting accepted children into counts and
    feeding non-leaf children to sink (every child when keep_leaves)."""
    mask, F, gens, m, g = node
    gc = g + 1
    atmax = gc == g_max and not keep_leaves
    for x in gens:
        cmask = mask ^ (1 << x)
        if accept is not None and not accept(cmask, x):
            continue
        counts[gc] += 1
        if atmax:
            continue
        if x == m:
            cm = m + 1
            cands = (x + m, x + m + 1)
        else:
            cm = m
            cands = (x + m,)
        cgens = [y for y in gens if y > x]
        for y in cands:
            if y in gens:
                continue
            rep = False
            a = cm
            half = y >> 1
            while a <= half:
                if (cmask >> a) & 1 and (cmask >> (y - a)) & 1:
                    rep = True
                    break
                a += 1
            if not rep:
                cgens.append(y)
        if cgens or keep_leaves:
            sink((cmask, x, tuple(cgens), cm, gc))


def _root_node(g_max: int):
    limit = 3 * g_max + 6
    full = (1 << (limit + 1)) - 1
    return (full, -1, (1,), 1, 0)


def _dfs_counts(start_node, g_max, accept, deadline=None):
    counts = [0] * (g_max + 1)
    stack = [start_node]
    pop = stack.pop
    push = stack.append
    ticks = 0
    while stack:
        node = pop()
        _expand(node, accept, push, counts, g_max)
        ticks += 1
        if deadline is not None and ticks % 2048 == 0 and time.monotonic() > deadline:
            raise BudgetExceeded("enumeration ran past its time budget")
    return counts


def _subtree_task(args):
    node, g_max, pred_name, deadline = args
    accept = _NAMED_PREDICATES[pred_name]
    return _dfs_counts(node, g_max, accept, deadline)


def _frontier(g_max, accept, depth, counts):
    """BFS the first `depth` levels; returns nodes at that depth.  Accepted
    vertices of levels <= depth are tallied into counts."""
    counts[0] += 1
    level = [_root_node(g_max)]
    for _ in range(depth):
        nxt: list = []
        for node in level:
            _expand(node, accept, nxt.append, counts, g_max)
        level = nxt
    return level


def enumerate_tree(g_max: int, predicate: str | Callable = "all",
                   jobs: int = 1, budget_ms: Optional[int] = None,
                   audit_custom: bool = True) -> GenusCensus:
    """Count semigroups per genus level, filtered by a variety predicate.

    predicate is "all", "arf", "saturated", or a callable on canonical
    semigroup values (audited against the variety axioms before use unless
    audit_custom is false).  Counts are independent of jobs.
    """
    if g_max < 0:
        raise BadInput("genus bound must be nonnegative")
    if g_max > MAX_GENUS:
        raise BudgetExceeded(f"genus bound {g_max} above budget {MAX_GENUS}")
    deadline = time.monotonic() + budget_ms / 1000.0 if budget_ms else None

    if callable(predicate):
        if audit_custom:
            audit_variety_predicate(predicate)
        accept = _lift_custom(predicate)
        name = getattr(predicate, "__name__", "custom")
        jobs = 1
    else:
        if predicate not in _NAMED_PREDICATES:
            raise BadInput(f"unknown variety {predicate!r}")
        accept = _NAMED_PREDICATES[predicate]
        name = predicate

    if g_max == 0:
        return GenusCensus(counts=(1,), predicate_name=name)

    jobs = max(1, jobs)
    if jobs == 1 or g_max < 14:
        counts = _dfs_counts(_root_node(g_max), g_max, accept, deadline)
        counts[0] = 1
        return GenusCensus(counts=tuple(counts), predicate_name=name)

    counts = [0] * (g_max + 1)
    split_depth = min(11, g_max - 1)
    frontier = _frontier(g_max, accept, split_depth, counts)
    tasks = [(node, g_max, name, deadline) for node in frontier]
    ctx = get_context("fork")
    with ctx.Pool(processes=jobs) as pool:
        for sub in pool.imap_unordered(_subtree_task, tasks, chunksize=1):
            for g, c in enumerate(sub):
                counts[g] += c
    return GenusCensus(counts=tuple(counts), predicate_name=name)


def _lift_custom(pred: Callable[[NumericalSemigroup], bool]):
    def accept(cmask: int, f: int) -> bool:
        return pred(core._from_member_mask(cmask, f))
    return accept


def semigroups_at_genus(g: int, predicate: str | Callable = "all") -> list[NumericalSemigroup]:
    """All accepted vertices at one tree level, sorted by generators."""
    if g < 0:
        raise BadInput("genus must be nonnegative")
    if g > MAX_GENUS:
        raise BudgetExceeded(f"genus {g} above budget {MAX_GENUS}")
    if callable(predicate):
        accept = _lift_custom(predicate)
    else:
        accept = _NAMED_PREDICATES[predicate]
    if g == 0:
        return [core.NATURALS]
    counts = [0] * (g + 1)
    level = [_root_node(g)]
    for _ in range(g):
        nxt: list = []
        for node in level:
            _expand(node, accept, nxt.append, counts, g, keep_leaves=True)
        level = nxt
    out = [core._from_member_mask(mask, F) for mask, F, _, _, _ in level]
    out.sort(key=lambda s: s.min_gens)
    return out


# --- predicate audit ----------------------------------------------------------

def audit_variety_predicate(pred: Callable[[NumericalSemigroup], bool],
                            sample_genus: int = 8, pair_trials: int = 100,
                            seed: int = 2024) -> None:
    """Randomized check of the variety axioms for a membership predicate.

    Samples accepted semigroups up to a small genus, then verifies closure
    under pairwise intersection and under Frobenius-adjoin.  Raises
    VarietyAuditError with a diagnostic on the first failure.
    """
    import random
    from .errors import GcdNotOne
    if not pred(core.NATURALS):
        raise VarietyAuditError("predicate rejects the full set")
    rng = random.Random(seed)
    accepted: list[NumericalSemigroup] = []
    stack = [core.NATURALS]
    while stack and len(accepted) < 400:
        s = stack.pop()
        accepted.append(s)
        if s.genus >= sample_genus:
            continue
        for child in children(s):
            if pred(child):
                stack.append(child)
    # predicates can hide whole subtrees, so also sample wild semigroups
    for _ in range(pair_trials):
        gens = rng.sample(range(2, 24), rng.randrange(2, 5))
        try:
            s = core.from_generators(gens)
        except GcdNotOne:
            continue
        if pred(s):
            accepted.append(s)
    for s in accepted:
        if s.is_natural:
            continue
        parent = core.adjoin_frobenius(s)
        if not pred(parent):
            raise VarietyAuditError(
                f"not closed under Frobenius-adjoin at {s}: {parent} rejected")
    for _ in range(pair_trials):
        a = rng.choice(accepted)
        b = rng.choice(accepted)
        w = core.intersect(a, b)
        if not pred(w):
            raise VarietyAuditError(
                f"not closed under intersection: {a} and {b} give {w}")
