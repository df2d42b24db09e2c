"""PGL(2) normal forms, cross-ratio coordinates and the chart on H0.

Points of P^1 are Fractions or INF.  Moebius maps are 2x2 matrices acting
by z -> (a z + b)/(c z + d), computed on homogeneous pairs so that oo
needs no special casing.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exactforms import INF, p1, p1_value


def _mat(m):
    (a, b), (c, d) = m
    return (Fraction(a), Fraction(b)), (Fraction(c), Fraction(d))


def mobius_apply(m, points: Sequence) -> tuple:
    """Apply z -> (a z + b)/(c z + d) to every entry."""
    (a, b), (c, d) = _mat(m)
    if a * d - b * c == 0:
        raise ValueError("singular matrix")
    out = []
    for z in points:
        s, t = p1(z)
        out.append(p1_value((a * s + b * t, c * s + d * t)))
    return tuple(out)


def _bracket(x, y):
    return x[0] * y[1] - x[1] * y[0]


def to_standard(z1, z2, z3) -> tuple:
    """The Moebius matrix sending (z1, z2, z3) to (0, 1, oo)."""
    w1, w2, w3 = p1(z1), p1(z2), p1(z3)
    c1 = _bracket(w2, w3)
    c2 = _bracket(w2, w1)
    if c1 == 0 or c2 == 0 or _bracket(w1, w3) == 0:
        raise ValueError("the first three points must be pairwise distinct")
    # z -> [z, z1][z2, z3] / ([z, z3][z2, z1]) with [x, y] = x0 y1 - x1 y0
    return ((c1 * w1[1], -c1 * w1[0]), (c2 * w3[1], -c2 * w3[0]))


def pgl2_normal_form(points: Sequence) -> tuple:
    """(0, 1, oo, u_4, ..., u_n): the orbit representative with the first three points fixed."""
    if len(points) < 3:
        raise ValueError("need at least three points")
    m = to_standard(*points[:3])
    return mobius_apply(m, points)


def cross_ratio_coords(points: Sequence) -> tuple:
    """(u_4, ..., u_n), the images of z_4.. under the map fixing z_1, z_2, z_3 to 0, 1, oo."""
    _check_distinct(points)
    return pgl2_normal_form(points)[3:]


def _check_distinct(points):
    seen = set()
    for z in points:
        key = z if z is INF else Fraction(z)
        if key in seen:
            raise ValueError("points must be pairwise distinct")
        seen.add(key)


def cross_ratio(z1, z2, z3, z4):
    """The single coordinate u_4 for four points."""
    return cross_ratio_coords((z1, z2, z3, z4))[0]


# the hyperplane sum x_i = 0 -------------------------------------------------

@dataclass(frozen=True)
class H0Point:
    z: tuple  # affine coordinates z_i = y_i / y_(n-1), i = 1..n-2
    y: tuple  # y_i = x_1 - x_(i+1), i = 1..n-1

    @property
    def off_diagonals(self) -> bool:
        """x avoids every diagonal x_i = x_j."""
        if any(v == 0 or v == 1 for v in self.z):
            return False
        return len(set(self.z)) == len(self.z)


def h0_coords(x: Sequence) -> H0Point:
    """Chart on the projectivized hyperplane sum x_i = 0 away from x_1 = x_n."""
    x = [Fraction(v) for v in x]
    if len(x) < 3:
        raise ValueError("need n >= 3")
    if sum(x) != 0:
        raise ValueError("point is not on the hyperplane sum x_i = 0")
    if x[0] == x[-1]:
        raise ValueError("x_1 = x_n: outside the chart")
    y = tuple(x[0] - v for v in x[1:])
    z = tuple(v / y[-1] for v in y[:-1])
    return H0Point(z, y)


def h0_diagonal_hyperplanes(n: int) -> list:
    """Traces of the diagonals x_i = x_j on H0 as linear forms in (y_1, ..., y_(n-1)).

    x_1 = x_(i+1) is y_i = 0; x_(i+1) = x_(j+1) is y_i = y_j.
    """
    m = n - 1
    out = []
    for i in range(m):
        out.append(tuple(Fraction(int(k == i)) for k in range(m)))
    for i in range(m):
        for j in range(i + 1, m):
            out.append(tuple(Fraction(1 if k == i else -1 if k == j else 0) for k in range(m)))
    return out
