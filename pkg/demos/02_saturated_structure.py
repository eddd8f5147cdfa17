"""Saturated index sets: the lattice structure behind extremity.

An index set alpha is saturated when its principal sum equals |alpha|.  The
family of saturated sets is closed under union and (nonempty) intersection,
which gives every entry position a unique minimal and maximal saturated
neighborhood when any exists.  Minimal neighborhoods depend on where you
look: an entry can lack one inside a principal submatrix yet gain one in the
full matrix; inside a *saturated* submatrix the two always agree.
"""

from fractions import Fraction

import gdecomp as g

H = Fraction(1, 2)

A6 = g.SymMatrix(
    [
        [0, H, 0, 0, 0, 0],
        [H, 0, H, 0, 0, 0],
        [0, H, 0, H, 0, 0],
        [0, 0, H, 1, 0, 0],
        [0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 1],
    ]
)

print("The order-6 example and its saturated family:")
for row in A6.entries:
    print("   ", " ".join(g.format_rational(v) for v in row))
family = g.saturated_sets(A6)
print("  saturated sets:", " ".join(str(a) for a in family))
print()

print("Neighborhoods of the entry (2,3) = 1/2:")
print("  minimal:", g.min_sat_neighborhood(A6, 2, 3))
print("  maximal:", g.max_sat_neighborhood(A6, 2, 3))
print()

print("The same entry inside the non-saturated submatrix on {1,2,3}:")
sub = g.principal_submatrix(A6, [1, 2, 3])
print("  minimal:", g.min_sat_neighborhood(sub, 2, 3), "(no saturated set covers it)")
print()

print("Inside the saturated submatrix on {2,3,4} it reappears, relabeled:")
sat_sub = g.principal_submatrix(A6, [2, 3, 4])
print("  minimal in the submatrix:", g.min_sat_neighborhood(sat_sub, 1, 2))
print()

print("F-matrices: saturated grid matrices whose only saturated set is full.")


def n_cycle(m):
    grid = [[Fraction(0)] * m for _ in range(m)]
    for i in range(m):
        grid[i][(i + 1) % m] = H
        grid[(i + 1) % m][i] = H
    return g.SymMatrix(grid)


for m in (3, 4, 5, 6):
    print("  1/2-cycle of order %d: is_F_matrix = %s" % (m, g.is_F_matrix(n_cycle(m))))
print("  swap matrix [[0,1],[1,0]]:", g.is_F_matrix(g.SymMatrix([[0, 1], [1, 0]])))
print("  identity of order 3:", g.is_F_matrix(g.SymMatrix.identity(3)))
