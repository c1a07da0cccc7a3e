"""Factorization graphs, Betti elements, minimal presentations and gluings.

For a member n the graph G_n has the minimal generators n_i with n - n_i in
S as vertices and the pairs with n - n_i - n_j in S as edges.  Members with
disconnected graph are the Betti elements; picking one factorization per
connected component and chaining them yields a minimal presentation.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import core
from .core import NumericalSemigroup
from .errors import BadLambda, BadMu, NotAMember, NotCoprime

FactorizationVector = tuple[int, ...]


def evaluate(s: NumericalSemigroup, vec: FactorizationVector) -> int:
    return sum(k * g for k, g in zip(vec, s.min_gens))


def factorizations(s: NumericalSemigroup, n: int) -> list[FactorizationVector]:
    """All exponent vectors over the minimal generators evaluating to n,
    in ascending lexicographic order."""
    if n < 0 or not s.contains(n):
        raise NotAMember(f"{n} is not a member of {s}")
    gens = s.min_gens
    e = len(gens)
    out: list[FactorizationVector] = []
    vec = [0] * e

    def rec(idx: int, rem: int) -> None:
        if idx == 0:
            if rem % gens[0] == 0:
                vec[0] = rem // gens[0]
                out.append(tuple(vec))
                vec[0] = 0
            return
        g = gens[idx]
        for k in range(rem // g + 1):
            vec[idx] = k
            rec(idx - 1, rem - k * g)
        vec[idx] = 0

    rec(e - 1, n)
    out.sort()
    return out


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, i: int) -> int:
        p = self.parent
        while p[i] != i:
            p[i] = p[p[i]]
            i = p[i]
        return i

    def union(self, i: int, j: int) -> None:
        ri, rj = self.find(i), self.find(j)
        if ri != rj:
            self.parent[rj] = ri

    def component_count(self) -> int:
        return sum(1 for i in range(len(self.parent)) if self.find(i) == i)


@dataclass(frozen=True)
class BettiGraph:
    element: int
    vertices: tuple[int, ...]  # generator values with n - n_i in S
    edges: tuple[tuple[int, int], ...]  # pairs with n - n_i - n_j in S
    components: tuple[tuple[int, ...], ...]  # partition, sorted by least vertex

    @property
    def connected(self) -> bool:
        return len(self.components) <= 1


def betti_graph(s: NumericalSemigroup, n: int) -> BettiGraph:
    if n < 0 or not s.contains(n):
        raise NotAMember(f"{n} is not a member of {s}")
    gens = s.min_gens
    verts = [g for g in gens if s.contains(n - g)]
    idx = {g: i for i, g in enumerate(verts)}
    uf = _UnionFind(len(verts))
    edges = []
    for i in range(len(verts)):
        for j in range(i + 1, len(verts)):
            if s.contains(n - verts[i] - verts[j]):
                edges.append((verts[i], verts[j]))
                uf.union(i, j)
    groups: dict[int, list[int]] = {}
    for g in verts:
        groups.setdefault(uf.find(idx[g]), []).append(g)
    comps = tuple(sorted((tuple(sorted(c)) for c in groups.values()),
                         key=lambda c: c[0]))
    return BettiGraph(element=n, vertices=tuple(verts), edges=tuple(edges),
                      components=comps)


def _betti_scan_bound(s: NumericalSemigroup) -> int:
    # past F + (two largest generators) every G_n is complete, so connected
    gens = s.min_gens
    return s.frobenius + gens[-1] + gens[-2]


def betti_elements(s: NumericalSemigroup) -> tuple[int, ...]:
    """Members whose factorization graph is disconnected."""
    if s.embedding_dimension < 2:
        return ()
    out = []
    for n in range(1, _betti_scan_bound(s) + 1):
        if s.contains(n) and not betti_graph(s, n).connected:
            out.append(n)
    return tuple(out)


@dataclass(frozen=True)
class Presentation:
    relations: tuple[tuple[FactorizationVector, FactorizationVector], ...]

    @property
    def cardinality(self) -> int:
        return len(self.relations)


def _component_factorizations(s: NumericalSemigroup, n: int,
                              graph: BettiGraph
                              ) -> list[list[FactorizationVector]]:
    """Factorizations of n grouped by the component carrying their support."""
    gens = s.min_gens
    comp_of = {}
    for ci, comp in enumerate(graph.components):
        for g in comp:
            comp_of[g] = ci
    groups: list[list[FactorizationVector]] = [[] for _ in graph.components]
    for z in factorizations(s, n):
        support = {gens[i] for i, k in enumerate(z) if k}
        cs = {comp_of[g] for g in support}
        assert len(cs) == 1, f"factorization support straddles components at {n}"
        groups[cs.pop()].append(z)
    return groups


def minimal_presentation(s: NumericalSemigroup) -> Presentation:
    """One relation chain per Betti element: the lexicographically smallest
    factorization of each component, anchored at the first component."""
    relations = []
    for n in betti_elements(s):
        graph = betti_graph(s, n)
        groups = _component_factorizations(s, n, graph)
        alphas = [min(group) for group in groups]
        relations.extend((alphas[0], alpha) for alpha in alphas[1:])
    return Presentation(relations=tuple(relations))


@dataclass(frozen=True)
class PresentationStats:
    cardinality: int
    is_complete_intersection: bool
    is_unique_minimal: bool


def presentation_stats(s: NumericalSemigroup) -> PresentationStats:
    """Cardinality plus the two structural flags.

    The chain construction leaves no choice exactly when every Betti graph
    splits into precisely two components and each component carries a single
    factorization; that characterizes a unique minimal presentation.
    """
    card = 0
    unique = True
    for n in betti_elements(s):
        graph = betti_graph(s, n)
        groups = _component_factorizations(s, n, graph)
        card += len(groups) - 1
        if len(groups) != 2 or any(len(g) != 1 for g in groups):
            unique = False
    e = s.embedding_dimension
    return PresentationStats(
        cardinality=card,
        is_complete_intersection=card == e - 1,
        is_unique_minimal=unique,
    )


def relations_generate(s: NumericalSemigroup,
                       relations, bound: int | None = None) -> bool:
    """Do the relations generate the kernel congruence?  Checked by closing
    each factorization set Z(n) under one-step rewrites, for members up to
    the Betti scan bound."""
    if bound is None:
        bound = _betti_scan_bound(s) if s.embedding_dimension >= 2 else s.frobenius + 1
    moves = []
    for u, v in relations:
        moves.append((u, v))
        moves.append((v, u))
    for n in range(1, bound + 1):
        if not s.contains(n):
            continue
        zs = factorizations(s, n)
        if len(zs) <= 1:
            continue
        index = {z: i for i, z in enumerate(zs)}
        uf = _UnionFind(len(zs))
        for z in zs:
            for u, v in moves:
                if all(a >= b for a, b in zip(z, u)):
                    w = tuple(a - b + c for a, b, c in zip(z, u, v))
                    uf.union(index[z], index[w])
        if uf.component_count() != 1:
            return False
    return True


def gluing(s1: NumericalSemigroup, s2: NumericalSemigroup,
           lam: int, mu: int) -> NumericalSemigroup:
    """Semigroup generated by mu*(generators of s1) and lam*(generators of
    s2), for lam a non-generator member of s1 and mu a non-generator member
    of s2 with gcd(lam, mu) = 1."""
    import math
    if not s1.contains(lam) or lam in s1.min_gens or lam < 1:
        raise BadLambda(f"{lam} must be a non-generator member of {s1}")
    if not s2.contains(mu) or mu in s2.min_gens or mu < 1:
        raise BadMu(f"{mu} must be a non-generator member of {s2}")
    if math.gcd(lam, mu) != 1:
        raise NotCoprime(f"gcd({lam}, {mu}) != 1")
    gens = [mu * g for g in s1.min_gens] + [lam * g for g in s2.min_gens]
    glued = core.from_generators(gens)
    assert glued.min_gens == tuple(sorted(gens)), \
        f"gluing generators {sorted(gens)} are not minimal for {glued}"
    return glued
