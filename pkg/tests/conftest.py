import math

import pytest

from numsem import core

import oracles


@pytest.fixture(scope="session")
def semigroups_by_genus():
    """All numerical semigroups with at most 12 gaps, keyed by genus,
    built from the complement-enumeration oracle."""
    table = oracles.gap_sets_by_genus(12)
    return {g: [core.from_gaps(gaps) for gaps in rows]
            for g, rows in table.items()}


def up_to_genus(table, g_max):
    out = []
    for g in range(g_max + 1):
        out.extend(table[g])
    return out


@pytest.fixture(scope="session")
def e3_frobenius_40():
    """Every embedding-dimension-3 semigroup with Frobenius number <= 40."""
    return e3_semigroups_frobenius_up_to(40)


def e3_semigroups_frobenius_up_to(fmax: int):
    out = []
    for n1 in range(3, fmax + 2):
        top = fmax + n1 + 2
        lim = (1 << (top + 1)) - 1
        for n2 in range(n1 + 1, fmax + n1 + 1):
            if n2 % n1 == 0:
                continue
            m12 = core._monoid_mask((n1, n2), top + 1)
            for n3 in range(n2 + 1, fmax + n1 + 1):
                if (m12 >> n3) & 1:
                    continue  # not minimal
                if math.gcd(math.gcd(n1, n2), n3) != 1:
                    continue
                mask = m12
                changed = True
                while changed:
                    grown = mask | ((mask << n3) & lim)
                    for g in (n1, n2):
                        grown |= (grown << g) & lim
                    changed = grown != mask
                    mask = grown
                window = (lim >> (fmax + 1)) << (fmax + 1)
                if mask & window != window:
                    continue  # some gap beyond fmax
                nonmembers = ~mask & lim
                f = nonmembers.bit_length() - 1
                s = core._from_member_mask(mask, f)
                if s.embedding_dimension == 3 and s.frobenius <= fmax:
                    out.append(s)
    return out
