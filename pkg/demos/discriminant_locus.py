#!/usr/bin/env python3
# The map x -> rho(x) sends a point of the plane to the binary form cutting its
# dual line out of C*.  The form acquires a multiple root exactly over C and
# over the artifact lines (duals of the cusps of C*).
from fractions import Fraction

from dualscope.branches import _line_basis, artifacts
from dualscope.exactforms import discriminant, multiplicity_pattern
from dualscope.ratcurves import ParamCurve, dualize
from dualscope.zariski import build_frame, normalize_cusp, projection_center, rho

C = ParamCurve.from_coeffs([[0, 1], [0, 0, 0, 1], [-1, 0, 1]])  # nodal cubic
nu = dualize(C)  # its dual, a tricuspidal quartic
frame = build_frame(nu)
print("B_C =")
for row in frame.rows():
    print("   ", [str(c) for c in row])
print("center of projection has dimension", projection_center(frame).dim)

x = C.point(Fraction(2))
f = rho(frame, x)
print("on C:      ", [str(a) for a in f.a], "pattern", multiplicity_pattern(f))

for ln in artifacts(C):
    A, B = _line_basis(ln.line)
    y = [a + 3 * b for a, b in zip(A, B)]
    print("artifact:  ", ln.place.label(), "disc =", discriminant(rho(frame, y)))

z = [Fraction(1), Fraction(2), Fraction(7)]
print("elsewhere: disc =", discriminant(rho(frame, z)))

# moving a cusp of C* to t = oo empties the t^(n-1) column of B
for place in artifacts(C)[0:1]:
    norm = normalize_cusp(nu, place.place)
    print("after cusp normalization, column 1 =", [str(r[1]) for r in norm.b_matrix()])
