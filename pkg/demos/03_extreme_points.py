"""Extreme points: the neighborhood criterion, splitting, and enumeration.

A member is extreme iff every fractional entry has a minimal saturated
neighborhood and no two fractional entries share one.  Non-extreme members
split explicitly into a midpoint of two members, and repeating the split
along its feasible segment decomposes any member into extreme points with
exact rational weights.
"""

from fractions import Fraction

import gdecomp as g

H = Fraction(1, 2)


def show(A, indent="   "):
    for row in A.entries:
        print(indent, " ".join(g.format_rational(v) for v in row))


M3 = g.SymMatrix([[0, H, H], [H, 0, 0], [H, 0, 1]])
print("An extreme matrix whose 2x2 corner is itself not extreme:")
show(M3)
report = g.is_extreme_criterion(M3, "Um")
for pos, nbhd in report.neighborhood_map.items():
    print("  fractional entry %s has minimal neighborhood %s" % (pos, nbhd))
print("  criterion: extreme =", report.extreme)
print("  rank oracle agrees:", g.is_extreme_nullspace(M3, "Um"))
print()

corner = g.principal_submatrix(M3, [1, 2])
print("The corner [[0,1/2],[1/2,0]] has no saturated set at all:")
report = g.is_extreme_criterion(corner, "Um")
print("  failure:", report.failure)
plus, minus, eps = g.split_nonextreme(corner, report=report)
print("  split with step %s:" % g.format_rational(eps))
show(plus)
print("    +")
show(minus)
print()

print("Peeling the corner to its extreme points:")
combo = g.krein_milman_decompose(corner, "Um")
for weight, vertex in combo.terms:
    print("  weight %s on" % g.format_rational(weight))
    show(vertex)
print("  reconstruction exact:", combo.reconstruct() == corner)
print()

print("All extreme points of the order-2 polytopes (exhaustive grid scan):")
for ambient, label in (("Um", "lower"), ("UM", "saturated")):
    vertices = g.enumerate_extreme(2, ambient)
    print("  %s polytope: %d vertices" % (label, len(vertices)))
print()

print("Conjecture scan: entry-level characterization vs the criterion.")
for m in (2, 3):
    scan = g.conjecture_scan(m)
    print(
        "  order %d: %d candidates, %d members, counterexamples: %d / %d"
        % (
            m,
            scan.grid_count,
            scan.member_count,
            len(scan.conjecture1_counterexamples),
            len(scan.conjecture2_counterexamples),
        )
    )
