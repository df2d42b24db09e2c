"""Exact projective linear algebra in P^2 and P^n.

Points are stored as coordinate tuples and compared up to scalars.  Linear
subspaces keep a reduced row echelon basis, so two spans are equal exactly
when their bases match.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterable, Sequence

from .exactforms import BinaryForm, Poly, multiplicity_pattern, p1
from .exactforms.linalg import nullspace, rank, rref


def _norm(coords: Sequence) -> tuple:
    out = tuple(Fraction(c) if isinstance(c, int) else c for c in coords)
    if not any(out):
        raise ValueError("the zero vector is not a projective point")
    return out


class ProjPoint:
    __slots__ = ("x",)

    def __init__(self, coords: Iterable):
        self.x = _norm(list(coords))

    @property
    def dim(self) -> int:
        return len(self.x) - 1

    def normalized(self) -> tuple:
        """Scale so the first nonzero coordinate is 1."""
        for c in self.x:
            if c:
                inv = 1 / c if not isinstance(c, Fraction) else Fraction(1) / c
                return tuple(a * inv for a in self.x)
        raise AssertionError

    def __eq__(self, other):
        if not isinstance(other, ProjPoint) or len(self.x) != len(other.x):
            return False
        return self.normalized() == other.normalized()

    def __hash__(self):
        return hash(self.normalized())

    def __repr__(self):
        return "(" + " : ".join(str(c) for c in self.x) + ")"

    def __iter__(self):
        return iter(self.x)

    def __getitem__(self, i):
        return self.x[i]


def pairing(a: Sequence, b: Sequence):
    acc = Fraction(0)
    for x, y in zip(a, b):
        acc = acc + x * y
    return acc


class LinSubspace:
    """Projective subspace of P^n given by a canonical basis of rows."""

    __slots__ = ("ambient", "basis")

    def __init__(self, ambient: int, rows: Iterable[Sequence]):
        rows = [list(r) for r in rows]
        for r in rows:
            if len(r) != ambient + 1:
                raise ValueError("row length does not match the ambient space")
        red, _ = rref(rows) if rows else ([], [])
        self.ambient = ambient
        self.basis = tuple(tuple(r) for r in red)

    @property
    def dim(self) -> int:
        """Projective dimension (-1 for the empty subspace)."""
        return len(self.basis) - 1

    def contains(self, p) -> bool:
        v = list(p.x if isinstance(p, ProjPoint) else p)
        return rank(list(self.basis) + [v]) == len(self.basis)

    def contains_subspace(self, other: "LinSubspace") -> bool:
        return rank(list(self.basis) + list(other.basis)) == len(self.basis)

    def annihilator(self) -> "LinSubspace":
        """The dual subspace {y : <y, x> = 0 for all x in self}."""
        if not self.basis:
            return LinSubspace(self.ambient, [[Fraction(int(i == j)) for j in range(self.ambient + 1)] for i in range(self.ambient + 1)])
        return LinSubspace(self.ambient, nullspace([list(r) for r in self.basis]))

    def equations(self) -> list:
        return [list(r) for r in self.annihilator().basis]

    def points(self) -> list:
        return [ProjPoint(r) for r in self.basis]

    def __eq__(self, other):
        return isinstance(other, LinSubspace) and self.ambient == other.ambient and self.basis == other.basis

    def __hash__(self):
        return hash((self.ambient, self.basis))

    def __repr__(self):
        return f"LinSubspace(P^{self.ambient}, dim={self.dim}, basis={[list(map(str, r)) for r in self.basis]})"


def span(points: Iterable) -> LinSubspace:
    pts = [list(p.x if isinstance(p, ProjPoint) else p) for p in points]
    if not pts:
        raise ValueError("span of the empty set")
    return LinSubspace(len(pts[0]) - 1, pts)


def join(a: LinSubspace, b: LinSubspace) -> LinSubspace:
    if a.ambient != b.ambient:
        raise ValueError("ambient dimensions differ")
    return LinSubspace(a.ambient, list(a.basis) + list(b.basis))


def meet(a: LinSubspace, b: LinSubspace) -> LinSubspace:
    if a.ambient != b.ambient:
        raise ValueError("ambient dimensions differ")
    eqs = a.equations() + b.equations()
    if not eqs:
        return LinSubspace(a.ambient, a.basis)
    return LinSubspace(a.ambient, nullspace(eqs))


def contains(a: LinSubspace, p) -> bool:
    return a.contains(p)


def hyperplane(coeffs: Sequence) -> LinSubspace:
    return LinSubspace(len(coeffs) - 1, nullspace([list(coeffs)]))


def dual(p) -> ProjPoint:
    """Point of P^2 <-> line of P^2*: (a:b:c) is the line a x0 + b x1 + c x2 = 0.

    Lines and points share the coordinate representation, so the map is the
    identity on coordinates and trivially involutive; incidence is the pairing.
    """
    return ProjPoint(p.x if isinstance(p, ProjPoint) else p)


def incident(point, line) -> bool:
    return not pairing(list(point), list(line))


def line_through(p, q) -> ProjPoint:
    from .exactforms.linalg import cross

    return ProjPoint(cross(list(p), list(q)))


def intersection_point(l1, l2) -> ProjPoint:
    from .exactforms.linalg import cross

    return ProjPoint(cross(list(l1), list(l2)))


# rational normal curve -----------------------------------------------------

def rnc_point(z, n: int) -> ProjPoint:
    """(z0^n : z0^(n-1) z1 : ... : z1^n); pairing it with a form evaluates the form at z."""
    z0, z1 = p1(z)
    return ProjPoint([z0 ** (n - k) * z1**k for k in range(n + 1)])


def rnc_dual_point(z, n: int) -> ProjPoint:
    """Coefficients of (z1 u - z0 v)^n, the form with an n-fold root at z."""
    z0, z1 = p1(z)
    return ProjPoint([(-1) ** k * comb(n, k) * z0**k * z1 ** (n - k) for k in range(n + 1)])


def _rnc_jets(z, k: int, n: int) -> list:
    """Taylor rows 0..k of the monomial parametrization along a transverse direction."""
    z0, z1 = p1(z)
    w0, w1 = (Fraction(0), Fraction(1)) if z0 else (Fraction(1), Fraction(0))
    # coordinate i is (z0 + e w0)^(n-i) (z1 + e w1)^i, a polynomial in e
    rows = [[] for _ in range(k + 1)]
    for i in range(n + 1):
        p = Poly([z0, w0]) ** (n - i) * Poly([z1, w1]) ** i
        for j in range(k + 1):
            rows[j].append(p.coeff(j))
    return rows


def osculating_subspace(z, k: int, n: int) -> LinSubspace:
    """T^k_z of the rational normal curve in P^{n*}."""
    if not 0 <= k <= n - 1:
        raise ValueError("need 0 <= k <= n-1")
    return LinSubspace(n, _rnc_jets(z, k, n))


def h_subspace(z, k: int, n: int) -> LinSubspace:
    """H_z^(n-1-k) = (T^k_z)^perp: forms with a root of multiplicity >= k+1 at z."""
    return osculating_subspace(z, k, n).annihilator()


def h_embedding(z, c: Sequence) -> list:
    """Explicit parametrization of H_z^(n-2) for z0 != 0, c = (c_0..c_{n-2})."""
    z0, z1 = p1(z)
    if not z0:
        raise ValueError("explicit embedding needs z0 != 0")
    n = len(c) + 1
    a0 = sum((c[k - 2] * (k - 1) * z0 ** (n - k) * z1**k for k in range(2, n + 1)), Fraction(0))
    a1 = -sum((c[k - 2] * k * z0 ** (n - k + 1) * z1 ** (k - 1) for k in range(2, n + 1)), Fraction(0))
    return [a0, a1] + [ci * z0**n for ci in c]


# torus action and orbits --------------------------------------------------

def g_action(lam, f: BinaryForm) -> BinaryForm:
    """(a_0 : lam a_1 : ... : lam^n a_n); moves every root z to lam z."""
    if not lam:
        raise ValueError("lambda must be nonzero")
    return BinaryForm([a * lam**j for j, a in enumerate(f.a)])


def orbit_dim(f: BinaryForm) -> int:
    """Dimension of the PGL(2)-orbit of f in P^n, read off the root profile."""
    if f.n < 2:
        raise ValueError("orbit dimension needs degree >= 2")
    pattern = multiplicity_pattern(f)
    if len(pattern) == 1:
        return 1
    if len(pattern) == 2:
        return 2
    return 3


def coordinate_point(k: int, n: int) -> ProjPoint:
    return ProjPoint([int(i == k) for i in range(n + 1)])


def coordinate_subspace(indices: Sequence[int], n: int) -> LinSubspace:
    return LinSubspace(n, [[int(i == k) for i in range(n + 1)] for k in indices])
