"""Structure theory for embedding dimension three.

Symmetric semigroups here are exactly the ones of the form
<a*m1, a*m2, b*m1 + c*m2> with the Frobenius number given in closed form;
pseudo-symmetric ones are recognized by an integrality test on a square
root expression.  The r_ij system, the c_i minima and the proportionally
modular representation of <n1,n2>/n3 complete the picture.  Every formula
is cross-verified against the membership-scan invariants and fails loudly
on mismatch.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import permutations
from typing import Optional

from . import core, modular, quotients
from .core import NumericalSemigroup
from .errors import (
    BadInput,
    NoSolution,
    NotMinimalTriple,
    NotPairwiseCoprime,
    Overflow,
    WrongDimension,
)


def _require_dim3(s: NumericalSemigroup) -> None:
    if s.embedding_dimension != 3:
        raise WrongDimension(f"{s} has embedding dimension {s.embedding_dimension}")


def _pairwise_coprime(ns) -> bool:
    return all(math.gcd(a, b) == 1
               for i, a in enumerate(ns) for b in ns[i + 1:])


def _pair_monoid_contains(a: int, b: int, v: int) -> bool:
    """Membership of v in the submonoid generated by a and b (any gcd)."""
    if v < 0:
        return False
    if v == 0:
        return True
    d = math.gcd(a, b)
    if v % d:
        return False
    a2, b2, v2 = a // d, b // d, v // d
    if b2 == 1 or a2 == 1:
        return True
    i = (v2 * pow(a2, -1, b2)) % b2
    return v2 >= i * a2


# --- symmetric witness ----------------------------------------------------------

@dataclass(frozen=True)
class Dim3SymmetricWitness:
    a: int
    m1: int
    m2: int
    b: int
    c: int
    predicted_frobenius: int


def symmetric3_witness(s: NumericalSemigroup) -> Optional[Dim3SymmetricWitness]:
    """Witness S = <a*m1, a*m2, b*m1 + c*m2> with a, m1, m2 >= 2, b + c >= 2,
    gcd(m1, m2) = gcd(a, b*m1 + c*m2) = 1; None iff S is not symmetric.

    The predicted Frobenius number a(m1*m2 - m1 - m2) + (a-1)(b*m1 + c*m2)
    is checked against the scanned one.
    """
    _require_dim3(s)
    if core.classify(s) != core.SYMMETRIC:
        return None
    gens = s.min_gens
    for i, j in ((0, 1), (0, 2), (1, 2)):
        k = 3 - i - j
        a = math.gcd(gens[i], gens[j])
        if a < 2:
            continue
        third = gens[k]
        if math.gcd(a, third) != 1:
            continue
        m1, m2 = gens[i] // a, gens[j] // a
        if m1 < 2 or m2 < 2:
            continue
        for b in range(third // m1 + 1):
            rem = third - b * m1
            if rem % m2:
                continue
            c = rem // m2
            if b + c < 2:
                continue
            predicted = a * (m1 * m2 - m1 - m2) + (a - 1) * third
            assert predicted == s.frobenius, \
                f"dim-3 symmetric Frobenius formula gave {predicted} for {s}"
            return Dim3SymmetricWitness(a=a, m1=m1, m2=m2, b=b, c=c,
                                        predicted_frobenius=predicted)
    raise AssertionError(f"{s} is symmetric but no dim-3 witness was found")


# --- pseudo-symmetric test ------------------------------------------------------

@dataclass(frozen=True)
class PseudoSymmetric3Result:
    is_pseudo_symmetric: bool
    delta: Optional[int]
    predicted_frobenius: Optional[int]
    ordering: Optional[tuple[int, int, int]]


def pseudo_symmetric3_test(n1: int, n2: int, n3: int) -> PseudoSymmetric3Result:
    """Integrality test: with D = sqrt((sum)^2 - 4(n1n2+n1n3+n2n3 - n1n2n3)),
    the triple is pseudo-symmetric iff for some ordering the three shifted
    quotients are natural numbers; then F = D - (n1+n2+n3)."""
    triple = (n1, n2, n3)
    s = core.from_generators(triple)
    if s.embedding_dimension != 3 or set(s.min_gens) != set(triple):
        raise NotMinimalTriple(f"{triple} does not minimally generate {s}")
    total = n1 + n2 + n3
    disc = total * total - 4 * (n1 * n2 + n1 * n3 + n2 * n3 - n1 * n2 * n3)
    delta = None
    if disc >= 0:
        r = math.isqrt(disc)
        if r * r == disc:
            delta = r
    if delta is not None:
        for p1, p2, p3 in permutations(triple):
            qs = ((p1 - p2 + p3 + delta, 2 * p1),
                  (p1 + p2 - p3 + delta, 2 * p2),
                  (-p1 + p2 + p3 + delta, 2 * p3))
            if all(num >= 0 and num % den == 0 for num, den in qs):
                predicted = delta - total
                assert predicted == s.frobenius, \
                    f"dim-3 pseudo-symmetric formula gave {predicted} for {s}"
                assert core.classify(s) == core.PSEUDO_SYMMETRIC, \
                    f"formula claims pseudo-symmetric but {s} is {core.classify(s)}"
                return PseudoSymmetric3Result(True, delta, predicted, (p1, p2, p3))
    assert core.classify(s) != core.PSEUDO_SYMMETRIC, \
        f"{s} is pseudo-symmetric but the integrality test failed"
    return PseudoSymmetric3Result(False, delta, None, None)


# --- the r_ij system ------------------------------------------------------------

@dataclass(frozen=True)
class RijSolution:
    r12: int
    r13: int
    r21: int
    r23: int
    r31: int
    r32: int


def _rij_equations(sol: RijSolution) -> tuple[int, int, int]:
    return (
        sol.r12 * sol.r13 + sol.r12 * sol.r23 + sol.r13 * sol.r32,
        sol.r13 * sol.r21 + sol.r21 * sol.r23 + sol.r23 * sol.r31,
        sol.r12 * sol.r31 + sol.r21 * sol.r32 + sol.r31 * sol.r32,
    )


def rij_solve(n1: int, n2: int, n3: int) -> RijSolution:
    """Unique positive solution of the three-equation product system; exists
    exactly when the pairwise coprime triple is a minimal generating set."""
    triple = (n1, n2, n3)
    if any(n < 1 for n in triple):
        raise BadInput("triple entries must be positive")
    if not _pairwise_coprime(triple):
        raise NotPairwiseCoprime(f"{triple} is not pairwise coprime")
    solutions = []
    for r12 in range(1, n1 + 1):
        for r13 in range(1, n1 + 1):
            if r12 * r13 + r12 + r13 > n1:
                break
            for r32 in range(1, n1 + 1):
                rem = n1 - r12 * r13 - r13 * r32
                if rem < r12:
                    break
                if rem % r12:
                    continue
                r23 = rem // r12
                # remaining unknowns solve a 2x2 linear system
                a_, b_ = r13 + r23, r23
                c_, d_ = r32, r12 + r32
                det = a_ * d_ - b_ * c_  # always positive
                pnum = n2 * d_ - b_ * n3
                qnum = a_ * n3 - c_ * n2
                if pnum <= 0 or qnum <= 0 or pnum % det or qnum % det:
                    continue
                sol = RijSolution(r12=r12, r13=r13, r21=pnum // det,
                                  r23=r23, r31=qnum // det, r32=r32)
                if _rij_equations(sol) == triple:
                    solutions.append(sol)
    assert len(solutions) <= 1, f"r_ij system not unique for {triple}: {solutions}"
    if not solutions:
        raise NoSolution(f"no positive solution: {triple} is not minimal")
    return solutions[0]


# --- c_i minima -----------------------------------------------------------------

def c_values(s: NumericalSemigroup) -> tuple[int, int, int]:
    """Least positive x with x*n_i in the monoid of the other two generators."""
    _require_dim3(s)
    n1, n2, n3 = s.min_gens
    out = []
    for ni, (oa, ob) in ((n1, (n2, n3)), (n2, (n1, n3)), (n3, (n1, n2))):
        x = 1
        while not _pair_monoid_contains(oa, ob, x * ni):
            x += 1
        out.append(x)
    return tuple(out)


# --- proportionally modular representation ---------------------------------------

def pm_representation(n1: int, n2: int, n3: int) -> tuple[int, int, int]:
    """Factor/modulus/proportion triple whose inequality solves <n1,n2>/n3,
    built from an inverse u of n2 modulo n1; verified against the quotient."""
    triple = (n1, n2, n3)
    if any(n < 1 for n in triple):
        raise BadInput("entries must be positive")
    if not _pairwise_coprime(triple):
        raise NotPairwiseCoprime(f"{triple} is not pairwise coprime")
    u = pow(n2, -1, n1) if n1 > 1 else 1
    b = n1 * n2
    a = (u * n2 * n3) % b
    if a == 0:
        a = b  # same residues, keeps the factor positive
    got = modular.solve_prop_modular(a, b, n3)
    want = quotients.quotient(core.from_generators([n1, n2]), n3)
    assert got == want, \
        f"modular representation ({a},{b},{n3}) solves {got}, expected {want}"
    return (a, b, n3)


# --- the Fermat reformulation -----------------------------------------------------

_FERMAT_CONDUCTOR_BUDGET = 1 << 21


def fermat_check(a: int, b: int, c: int, n: int) -> bool:
    """True iff <a^n, b^n>/c is NOT minimally generated by {a^n, c^(n-1), b^n}.

    A counterexample would hand an integer solution to x^n + y^n = z^n.
    """
    if min(a, b, c) < 2:
        raise BadInput("a, b, c must all be at least 2")
    if n < 3:
        raise BadInput("exponent must be at least 3")
    if not _pairwise_coprime((a, b, c)):
        raise NotPairwiseCoprime(f"({a}, {b}, {c}) is not pairwise coprime")
    p, q = a ** n, b ** n
    if p * q // c > _FERMAT_CONDUCTOR_BUDGET:
        raise Overflow(
            f"conductor around {p * q // c} exceeds the desk-scale budget")
    inv = pow(p, -1, q)
    bound = (p * q - p - q) // c + 1
    mask = 1
    for x in range(1, bound + 2):
        v = c * x
        if v >= ((v * inv) % q) * p:
            mask |= 1 << x
    quot = core._from_member_mask(mask, bound)
    expected = tuple(sorted((p, c ** (n - 1), q)))
    return quot.min_gens != expected
