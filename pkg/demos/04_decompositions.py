"""Solving (X + X^t)/2 = A in stochastic and substochastic matrices.

Solvability is equivalent to polytope membership: saturated membership for
stochastic X, plain membership for substochastic X.  The flow solver handles
every member and certifies every failure; the inductive constructor rebuilds
the solution of an extreme saturated matrix from a saturated submatrix of
order m-1, one boundary row at a time.
"""

from fractions import Fraction

import gdecomp as g

H = Fraction(1, 2)


def show(rows, indent="   "):
    for row in rows:
        print(indent, " ".join(g.format_rational(v) for v in row))


M3 = g.SymMatrix([[0, H, H], [H, 0, 0], [H, 0, 1]])
print("Flow solver on a saturated member:")
show(M3.entries)
result = g.g_decompose(M3, "stochastic")
print("  status:", result.status, "-> X =")
show(result.X)
print("  verifier:", g.verify_decomposition(M3, result.X, "stochastic"))
print()

print("The inductive construction gives another valid X:")
result = g.g_decompose_extreme_inductive(M3)
show(result.X)
print("  verifier:", g.verify_decomposition(M3, result.X, "stochastic"))
print()

HALF_PAIR = g.SymMatrix([[0, H], [H, 0]])
print("Substochastic mode accepts non-saturated members:")
show(HALF_PAIR.entries)
result = g.g_decompose(HALF_PAIR, "substochastic")
show(result.X)
print("  row sums stay <= 1; stochastic mode instead reports:",
      g.g_decompose(HALF_PAIR, "stochastic").reason)
print()

ONES = g.SymMatrix([[1, 1], [1, 1]])
print("Failures carry certificates:")
show(ONES.entries)
result = g.g_decompose(ONES, "substochastic")
print("  status: %s, violating subset %s" % (result.status, result.certificate))
print()

print("Any member embeds into a saturated member one order up:")
ext = g.extend_to_saturated(HALF_PAIR)
show(ext.entries)
print("  saturated:", g.check_Um_upper(ext).member)
print("  leading block unchanged:", g.principal_submatrix(ext, [1, 2]) == HALF_PAIR)
print()

print("Canonical form of a non-saturated extreme matrix:")
D = g.SymMatrix([[0, 0, 0], [0, 1, 0], [0, 0, 0]])
form = g.canonical_form(D)
print(
    "  permutation %r moves the saturated core (order %d) up front"
    % (form.permutation.image, form.saturated_order)
)
show(form.core.entries)
