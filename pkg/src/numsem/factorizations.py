"""Non-unique factorization invariants: lengths, delta sets, elasticity,
distances, catenary and tame degrees, omega-primality, periodicity probes.

Everything works on exponent vectors over the minimal generators.  The
semigroup-level catenary degree is the maximum over the Betti elements; the
tame degree maximum is reached on the finite candidate set n_i + w with w
an Apery witness of another generator.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import core, presentations
from .core import NumericalSemigroup
from .errors import ArityMismatch, BadInput, NotAMember, ZeroElement
from .presentations import FactorizationVector, _UnionFind, factorizations


@dataclass(frozen=True)
class LengthData:
    element: int
    lengths: tuple[int, ...]  # sorted ascending
    delta: tuple[int, ...]  # consecutive differences


def length_data(s: NumericalSemigroup, n: int) -> LengthData:
    lens = sorted({sum(z) for z in factorizations(s, n)})
    delta = tuple(b - a for a, b in zip(lens, lens[1:]))
    return LengthData(element=n, lengths=tuple(lens), delta=delta)


def elasticity(s: NumericalSemigroup) -> Fraction:
    """Largest generator over smallest: the supremum of element elasticities,
    attained at their product."""
    return Fraction(s.min_gens[-1], s.min_gens[0])


def elasticity_of(s: NumericalSemigroup, n: int) -> Fraction:
    if n == 0:
        raise ZeroElement("elasticity of 0 is undefined")
    data = length_data(s, n)
    return Fraction(data.lengths[-1], data.lengths[0])


def distance(x: FactorizationVector, y: FactorizationVector) -> int:
    """max(|x - common|, |y - common|) with the componentwise-min common part."""
    if len(x) != len(y):
        raise ArityMismatch(f"arity {len(x)} vs {len(y)}")
    dx = dy = 0
    for a, b in zip(x, y):
        m = a if a < b else b
        dx += a - m
        dy += b - m
    return max(dx, dy)


def _connected_at(zs, threshold: int) -> bool:
    uf = _UnionFind(len(zs))
    for i in range(len(zs)):
        for j in range(i + 1, len(zs)):
            if distance(zs[i], zs[j]) <= threshold:
                uf.union(i, j)
    return uf.component_count() == 1


def catenary_degree(s: NumericalSemigroup, n: int) -> int:
    """Least N such that any two factorizations of n are joined by a chain
    with steps of distance at most N."""
    zs = factorizations(s, n)
    if len(zs) <= 1:
        return 0
    dists = sorted({distance(zs[i], zs[j])
                    for i in range(len(zs)) for j in range(i + 1, len(zs))})
    lo, hi = 0, len(dists) - 1
    while lo < hi:
        mid = (lo + hi) // 2
        if _connected_at(zs, dists[mid]):
            hi = mid
        else:
            lo = mid + 1
    return dists[lo]


def catenary_degree_of_semigroup(s: NumericalSemigroup) -> int:
    betti = presentations.betti_elements(s)
    if not betti:
        return 0
    return max(catenary_degree(s, n) for n in betti)


def tame_degree(s: NumericalSemigroup, n: int) -> int:
    """Least N such that any factorization of n is within N of one using any
    prescribed generator that divides n."""
    if n < 0 or not s.contains(n):
        raise NotAMember(f"{n} is not a member of {s}")
    zs = factorizations(s, n)
    out = 0
    for i, g in enumerate(s.min_gens):
        if not s.contains(n - g):
            continue
        using = [y for y in zs if y[i] > 0]
        for x in zs:
            if x[i] > 0:
                continue
            out = max(out, min(distance(x, y) for y in using))
    return out


def tame_degree_of_semigroup(s: NumericalSemigroup) -> int:
    gens = s.min_gens
    if len(gens) < 2:
        return 0
    apery = {g: core.apery_set(s, g).witnesses for g in gens}
    candidates = set()
    for i, gi in enumerate(gens):
        for j, gj in enumerate(gens):
            if i == j:
                continue
            for w in apery[gj]:
                candidates.add(gi + w)
    return max(tame_degree(s, n) for n in sorted(candidates))


# --- omega-primality --------------------------------------------------------------

def _minimal_divisor_vectors(s: NumericalSemigroup, n: int
                             ) -> list[FactorizationVector]:
    """Minimal exponent vectors z (componentwise) whose value lands in n + S.

    Any z with value past n + F + max generator stays above a smaller vector
    of the set, so the bounded collection is complete.
    """
    gens = s.min_gens
    bound = n + s.frobenius + gens[-1]
    pool: list[FactorizationVector] = []
    for v in range(n, bound + 1):
        if not s.contains(v - n):
            continue
        pool.extend(factorizations(s, v))
    pool.sort(key=sum)
    minimal: list[FactorizationVector] = []
    for z in pool:
        if not any(all(a >= b for a, b in zip(z, m)) for m in minimal):
            minimal.append(z)
    return minimal


def omega_primality(s: NumericalSemigroup, n: int) -> int:
    """Largest total degree among the minimal vectors dividing into n + S."""
    if n == 0:
        raise ZeroElement("omega of 0 is undefined")
    if not s.contains(n):
        raise NotAMember(f"{n} is not a member of {s}")
    return max(sum(z) for z in _minimal_divisor_vectors(s, n))


def omega_of_semigroup(s: NumericalSemigroup) -> int:
    return max(omega_primality(s, g) for g in s.min_gens)


# --- delta sets and periodicity ----------------------------------------------------

def delta_set_up_to(s: NumericalSemigroup, bound: int) -> tuple[int, ...]:
    """Union of the delta sets of all members up to bound (an explicit
    window; no exhaustion of the full delta set is claimed)."""
    if bound < s.frobenius:
        raise BadInput(f"bound {bound} below the Frobenius number {s.frobenius}")
    out: set[int] = set()
    for n in range(1, bound + 1):
        if s.contains(n):
            out.update(length_data(s, n).delta)
    return tuple(sorted(out))


@dataclass(frozen=True)
class ProbeEntry:
    period: int
    checked: int
    agreements: int
    first_disagreements: tuple[int, ...]  # at most five witnesses


@dataclass(frozen=True)
class ProbeReport:
    invariant: str
    window: int
    entries: tuple[ProbeEntry, ...]


_PROBE_INVARIANTS = {
    "delta": lambda s, n: length_data(s, n).delta,
    "catenary": catenary_degree,
    "tame": tame_degree,
}


def periodicity_probe(s: NumericalSemigroup, invariant: str, window: int,
                      period_candidates) -> ProbeReport:
    """Report (not theorem): how often inv(n + p) == inv(n) holds for members
    n up to the window, per candidate period p."""
    if invariant not in _PROBE_INVARIANTS:
        raise BadInput(f"unknown invariant {invariant!r}")
    fn = _PROBE_INVARIANTS[invariant]
    entries = []
    for p in period_candidates:
        if not s.contains(p) or p < 1:
            raise NotAMember(f"period candidate {p} is not a positive member")
        checked = agreements = 0
        disagreements = []
        for n in range(1, window + 1):
            if not s.contains(n):
                continue
            checked += 1
            if fn(s, n) == fn(s, n + p):
                agreements += 1
            elif len(disagreements) < 5:
                disagreements.append(n)
        entries.append(ProbeEntry(period=p, checked=checked,
                                  agreements=agreements,
                                  first_disagreements=tuple(disagreements)))
    return ProbeReport(invariant=invariant, window=window,
                       entries=tuple(entries))
