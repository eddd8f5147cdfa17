"""Shared fixtures-in-spirit: named matrices and independent test oracles.

The naive_* functions deliberately reimplement the definitions with plain
loops over itertools.combinations, independent of the library's bit-mask
machinery, so certificate and membership claims are checked by a second
route.
"""

from fractions import Fraction
from itertools import combinations

import gdecomp as g

HALF = Fraction(1, 2)


def m3():
    return g.SymMatrix([[0, HALF, HALF], [HALF, 0, 0], [HALF, 0, 1]])


def a6():
    return g.SymMatrix(
        [
            [0, HALF, 0, 0, 0, 0],
            [HALF, 0, HALF, 0, 0, 0],
            [0, HALF, 0, HALF, 0, 0],
            [0, 0, HALF, 1, 0, 0],
            [0, 0, 0, 0, 0, 0],
            [0, 0, 0, 0, 0, 1],
        ]
    )


def n_cycle(m):
    """The 1/2-cycle matrix: 1/2 on the two cyclic neighbors, 0 elsewhere."""
    grid = [[Fraction(0)] * m for _ in range(m)]
    for i in range(m):
        j = (i + 1) % m
        grid[i][j] = HALF
        grid[j][i] = HALF
    return g.SymMatrix(grid)


def naive_principal_sum(A, members):
    members = list(members)
    return sum(A.entry(i, j) for i in members for j in members)


def naive_member(A):
    """Membership by direct definition: every nonempty subset obeys its bound."""
    indices = range(1, A.m + 1)
    for size in range(1, A.m + 1):
        for combo in combinations(indices, size):
            if naive_principal_sum(A, combo) > size:
                return False
    return True


def naive_saturated_sets(A):
    out = []
    indices = range(1, A.m + 1)
    for size in range(1, A.m + 1):
        for combo in combinations(indices, size):
            if naive_principal_sum(A, combo) == size:
                out.append(frozenset(combo))
    return out


def members_of(alpha):
    return sorted(alpha.members)
