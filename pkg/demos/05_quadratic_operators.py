"""Quadratic stochastic operators, majorization, and quadratic-form bounds.

An operator V on the simplex is given by symmetric coefficient layers:
(Vx)_k = (A^(k) x, x).  If Vx is majorized by x for every simplex point,
then every layer must lie in the saturated polytope; the converse search is
done by deterministic exact sampling.  The same polytope controls the bounds
x_[m] <= (Ax, x) <= x_[1] for the quadratic form of a single matrix.
"""

from fractions import Fraction

import gdecomp as g

H = Fraction(1, 2)

IDENTITY = g.QuadraticOperator(
    [
        [[1, H], [H, 0]],
        [[0, H], [H, 1]],
    ]
)
def fmt(vec):
    return "(" + ", ".join(g.format_rational(v) for v in vec) + ")"


print("A quadratic operator acting as the identity on the 1-simplex:")
x = g.SimplexVector([Fraction(3, 10), Fraction(7, 10)])
print("  V%s = %s" % (fmt(x), fmt(g.qo_apply(IDENTITY, x))))
print("  stochastic:", g.qo_is_stochastic(IDENTITY))
print("  all layers saturated members:", g.qo_gds_necessary(IDENTITY))
print(
    "  majorization counterexample in 500 trials:",
    g.qo_gds_sample(IDENTITY, trials=500, seed=0),
)
print()

LEAKY = g.QuadraticOperator(
    [
        [[1, H], [H, 1]],
        [[0, H], [H, 0]],
    ]
)
print("A stochastic operator whose first layer has total sum 3 (too heavy):")
print("  stochastic:", g.qo_is_stochastic(LEAKY))
print("  all layers saturated members:", g.qo_gds_necessary(LEAKY))
witness = g.qo_gds_sample(LEAKY, trials=500, seed=0)
print("  sampled majorization counterexample:", fmt(witness))
print("  its image:", fmt(g.qo_apply(LEAKY, witness)))
print()

print("Averaging operator: every input maps to the uniform distribution,")
print("which is majorized by everything, so no counterexample can exist:")
AVG = g.averaging_operator(3)
print(
    "  counterexample in 500 trials:",
    g.qo_gds_sample(AVG, trials=500, seed=0),
)
print()

print("Quadratic-form bounds x_[m] <= (Ax,x) <= x_[1]:")
M3 = g.SymMatrix([[0, H, H], [H, 0, 0], [H, 0, 1]])
result = g.qf_bounds_certificate(M3, trials=1000, seed=0)
print("  saturated member: confirmed on %d samples = %s" % (result.trials, result.confirmed))

ONES = g.SymMatrix([[1, 1], [1, 1]])
result = g.qf_bounds_certificate(ONES)
x = result.counterexample
value = g.quadratic_form(ONES.entries, x.coordinates)
print(
    "  violator: uniform point %s gives (Ax,x) = %s > %s = largest coordinate"
    % (fmt(x), g.format_rational(value), g.format_rational(max(x.coordinates)))
)
