"""Membership in the subset-sum polytopes, with certificates either way.

A symmetric nonnegative matrix A of order m belongs to the lower polytope
when every index set alpha satisfies  sum_{i,j in alpha} a_ij <= |alpha|,
and to the saturated polytope when additionally the total entry sum is m.
Two independent deciders are available; this script runs both and shows the
violating-subset certificate produced on failure.
"""

from fractions import Fraction

import gdecomp as g

H = Fraction(1, 2)


def show(title, A):
    print(title)
    for row in A.entries:
        print("   ", " ".join(g.format_rational(v) for v in row))


def verdict_line(name, verdict):
    print(
        "  %-12s member=%s  total=%s  slack=%s  certificate=%s"
        % (
            name,
            verdict.member,
            g.format_rational(verdict.total_sum),
            g.format_rational(verdict.slack) if verdict.slack is not None else "-",
            verdict.certificate if verdict.certificate is not None else "-",
        )
    )


M3 = g.SymMatrix([[0, H, H], [H, 0, 0], [H, 0, 1]])
show("A member with zero slack (the subset {3} is exactly saturated):", M3)
verdict_line("brute force", g.check_Um_bruteforce(M3))
verdict_line("min-cut", g.check_Um_mincut(M3))
print()

ONES = g.SymMatrix([[1, 1], [1, 1]])
show("A violator: the pair {1,2} carries mass 4 > 2:", ONES)
verdict_line("brute force", g.check_Um_bruteforce(ONES))
verdict_line("min-cut", g.check_Um_mincut(ONES))
cert = g.check_Um_bruteforce(ONES).certificate
print(
    "  certificate check: principal_sum%s = %s > %d"
    % (cert, g.format_rational(g.principal_sum(ONES, cert)), len(cert))
)
print()

HALF_PAIR = g.SymMatrix([[0, H], [H, 0]])
show("In the lower polytope but not saturated (total 1, order 2):", HALF_PAIR)
verdict_line("lower", g.check_Um_bruteforce(HALF_PAIR))
upper = g.check_Um_upper(HALF_PAIR)
verdict_line("saturated", upper)
print("  reason:", upper.reason)
print()

print("Exhaustive cross-check of the two deciders over all 3x3 grid matrices:")
agree = 0
for A in g.grid_matrices(3):
    assert g.check_Um_bruteforce(A).member == g.check_Um_mincut(A).member
    agree += 1
print("  %d matrices, deciders agree on every one" % agree)
