#!/usr/bin/env python3
# Dual curves, their equations and their singularities, worked on small examples.
from fractions import Fraction

from dualscope.branches import build_inventory, node_data
from dualscope.ratcurves import ParamCurve, dual_data, dualize, implicitize

# a nodal cubic (t : t^3 : t^2 - 1); coefficient rows are low-to-high in t
C = ParamCurve.from_coeffs([[0, 1], [0, 0, 0, 1], [-1, 0, 1]])
print("C      =", C)
print("F_C    =", implicitize(C).to_str())

nd = node_data(C)
for pair in nd.pairs:
    print("node   ", pair.label(), "over", [str(c) for c in pair.center])

# the dual is a quartic with three cusps
D = dualize(C)
inv = build_inventory(D)
print("C*     =", D)
print("F_C*   =", implicitize(D).to_str(("y0", "y1", "y2")))
print("d, d*, kappa, delta =", inv.d, inv.d_star, inv.kappa, inv.delta)

# dualizing twice gives C back
assert implicitize(dualize(D)) == implicitize(C)

# a curve whose tangent minors share a factor: the content records the dropped cusp
Q = ParamCurve.from_coeffs([[1], [0, 0, 1], [0, 0, 0, 1, 1]])
dd = dual_data(Q)
print("(1 : t^2 : t^4 + t^3)* =", dd.curve, " content", dd.content)

# points of C lie on the tangent lines dual to them
for t in range(-2, 3):
    x = C.point(Fraction(t))
    line = D.point(Fraction(t))
    assert sum(a * b for a, b in zip(x, line)) == 0
