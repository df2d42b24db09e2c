"""Parametrized rational plane curves: reduction, duals, implicit equations.

A curve is a triple (g0 : g1 : g2) of polynomials in t.  Its parametric
degree n is the largest degree among them; homogenizing with t = z0/z1 the
coefficient b^(i)_j of z0^(n-j) z1^j is the coefficient of t^(n-j) in g_i.
The point t = oo is (z0 : z1) = (1 : 0) and maps to the t^n coefficients.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .exactforms import Poly, as_rat, poly_gcd_many, rat_str
from .exactforms.forms import resultant_formal
from .exactforms.poly import interpolate
from .exactforms.linalg import rank


class DegenerateCurve(ValueError):
    """The image is a point or a line."""


class ImproperParametrization(ValueError):
    def __init__(self, covering_degree: int):
        super().__init__(f"parametrization is not birational: covering degree {covering_degree}")
        self.covering_degree = covering_degree


class InconsistentInventory(ValueError):
    pass


def _poly(x) -> Poly:
    if isinstance(x, Poly):
        return x
    return Poly([as_rat(c) if isinstance(c, (int, str)) else c for c in x])


class ParamCurve:
    """Reduced parametrization t -> (g0(t) : g1(t) : g2(t))."""

    __slots__ = ("g", "n")

    def __init__(self, g0, g1, g2, check: bool = True):
        g = tuple(_poly(p) for p in (g0, g1, g2))
        if all(p.is_zero() for p in g):
            raise DegenerateCurve("all three coordinates vanish")
        self.g = g
        self.n = max(p.deg() for p in g)
        if check and poly_gcd_many(g).deg() > 0:
            raise ValueError("parametrization is not reduced; use reduce()")

    @staticmethod
    def from_coeffs(rows: Sequence[Sequence]) -> "ParamCurve":
        return ParamCurve(*[Poly([as_rat(c) for c in r]) for r in rows])

    def __iter__(self):
        return iter(self.g)

    def __getitem__(self, i) -> Poly:
        return self.g[i]

    def __eq__(self, other):
        return isinstance(other, ParamCurve) and self.g == other.g

    def __hash__(self):
        return hash(self.g)

    def __repr__(self):
        return "(" + " : ".join(p.to_str() for p in self.g) + ")"

    def coeff_rows(self) -> list:
        """Low-to-high coefficient lists padded to length n+1."""
        return [[p.coeff(k) for k in range(self.n + 1)] for p in self.g]

    def b_matrix(self) -> list:
        """3 x (n+1) matrix with b[i][j] = coefficient of t^(n-j) in g_i."""
        return [[p.coeff(self.n - j) for j in range(self.n + 1)] for p in self.g]

    def is_rational(self) -> bool:
        return all(p.is_rational() for p in self.g)

    def point(self, t) -> list:
        """Image of a finite parameter or of INF."""
        from .exactforms import INF

        if t is INF:
            return [p.coeff(self.n) for p in self.g]
        return [p(t) for p in self.g]

    def at_infinity_chart(self) -> "ParamCurve":
        """Reparametrize by s = 1/t: g_i -> s^n g_i(1/s), so s = 0 is t = oo."""
        return ParamCurve(*[p.reverse(self.n) for p in self.g], check=False)

    def derivative(self) -> list:
        return [p.deriv() for p in self.g]

    def substitute(self, num: Poly, den: Poly) -> "ParamCurve":
        """Reparametrize t -> num(s)/den(s) (linear fractional), clearing denominators."""
        n = self.n
        out = []
        for p in self.g:
            acc = Poly()
            for k, a in enumerate(p.c):
                if a:
                    acc = acc + num**k * den ** (n - k) * Poly([a])
            out.append(acc)
        return reduce(out)[0]

    def transform(self, m: Sequence[Sequence]) -> "ParamCurve":
        """Apply a 3x3 matrix to the coordinates."""
        out = []
        for row in m:
            acc = Poly()
            for c, p in zip(row, self.g):
                if c:
                    acc = acc + p.scale(c)
            out.append(acc)
        return ParamCurve(*out, check=False)

    def is_degenerate(self) -> bool:
        return rank(self.coeff_rows()) < 3

    def to_json(self) -> list:
        return [[rat_str(c) for c in p.c] if p.c else ["0"] for p in self.g]


def reduce(raw: Iterable) -> tuple:
    """Remove the common factor of a triple; returns (ParamCurve, monic content)."""
    g = [_poly(p) for p in raw]
    if len(g) != 3:
        raise ValueError("a plane curve needs three coordinates")
    if all(p.is_zero() for p in g):
        raise DegenerateCurve("all three coordinates vanish")
    content = poly_gcd_many(g)
    if content.deg() > 0:
        g = [p.exact_div(content) if p else p for p in g]
    return ParamCurve(*g, check=False), content


@dataclass(frozen=True)
class DualData:
    curve: ParamCurve
    content: Poly  # finite part of the common factor of the minors
    infinity_order: int  # order of the common factor at t = oo
    raw: tuple  # the unreduced minor triple


def minors(C: ParamCurve) -> tuple:
    """(M12, -M02, M01) with M_ij = g_i g_j' - g_j g_i', i.e. nu x nu'."""
    g = C.g
    d = [p.deriv() for p in g]
    m01 = g[0] * d[1] - g[1] * d[0]
    m02 = g[0] * d[2] - g[2] * d[0]
    m12 = g[1] * d[2] - g[2] * d[1]
    return (m12, -m02, m01)


def dual_data(C: ParamCurve) -> DualData:
    if C.n < 2 or C.is_degenerate():
        raise DegenerateCurve("dual of a line or point is undefined")
    raw = minors(C)
    D, content = reduce(raw)
    top = max(p.deg() for p in raw)
    return DualData(D, content, 2 * C.n - 2 - top, raw)


def dualize(C: ParamCurve) -> ParamCurve:
    """Dual curve via the Jacobian minors, common factor removed."""
    return dual_data(C).curve


def check_incidence(C: ParamCurve, D: ParamCurve) -> bool:
    """<D, nu> and <D, nu'> vanish identically."""
    s0 = Poly()
    s1 = Poly()
    for a, b in zip(D.g, C.g):
        s0 = s0 + a * b
        s1 = s1 + a * b.deriv()
    return s0.is_zero() and s1.is_zero()


# properness ---------------------------------------------------------------

_SAMPLES = [Fraction(x) for x in (2, -3, 5, Fraction(1, 2), 7, Fraction(-5, 3), 11, Fraction(13, 4))]


def fibre_size(C: ParamCurve, t0) -> int:
    """Number of parameters (with multiplicity, oo included) mapping to nu(t0)."""
    p = C.point(t0)
    hs = []
    for i in range(3):
        for j in range(i + 1, 3):
            hs.append(C.g[j].scale(p[i]) - C.g[i].scale(p[j]))
    hs = [h for h in hs]
    g = poly_gcd_many(hs)
    top = max((h.deg() for h in hs if h), default=-1)
    inf = C.n - top if top >= 0 else C.n
    return g.deg() + inf


def validate_proper(C: ParamCurve) -> int:
    """Covering degree of t -> nu(t) onto the image (1 means birational)."""
    if C.is_degenerate():
        raise DegenerateCurve("image is a line or a point")
    best = None
    for t0 in _SAMPLES:
        if not any(C.point(t0)):
            continue
        k = fibre_size(C, t0)
        best = k if best is None else min(best, k)
        if best == 1:
            break
    return best


# implicit equations -------------------------------------------------------

class ImplicitCurve:
    """Homogeneous polynomial in x0, x1, x2 with integer primitive coefficients."""

    __slots__ = ("terms", "degree")

    def __init__(self, terms: dict):
        terms = {tuple(k): Fraction(v) for k, v in terms.items() if v}
        if not terms:
            raise ValueError("zero polynomial")
        degs = {sum(k) for k in terms}
        if len(degs) != 1:
            raise ValueError("polynomial is not homogeneous")
        self.degree = degs.pop()
        self.terms = _primitive(terms)

    def __call__(self, x):
        acc = Fraction(0)
        for (a, b, c), v in self.terms.items():
            acc = acc + v * x[0] ** a * x[1] ** b * x[2] ** c
        return acc

    def __eq__(self, other):
        return isinstance(other, ImplicitCurve) and self.terms == other.terms

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items())))

    def equal_up_to_scalar(self, other: "ImplicitCurve") -> bool:
        return self == other

    def vanishes_on(self, C: ParamCurve) -> bool:
        acc = Poly()
        for (a, b, c), v in self.terms.items():
            acc = acc + C.g[0] ** a * C.g[1] ** b * C.g[2] ** c * Poly([v])
        return acc.is_zero()

    def gradient(self, x) -> list:
        out = []
        for i in range(3):
            acc = Fraction(0)
            for e, v in self.terms.items():
                if e[i]:
                    f = list(e)
                    f[i] -= 1
                    acc = acc + v * e[i] * x[0] ** f[0] * x[1] ** f[1] * x[2] ** f[2]
            out.append(acc)
        return out

    def to_str(self, names=("x0", "x1", "x2")) -> str:
        parts = []
        for e in sorted(self.terms, reverse=True):
            v = self.terms[e]
            mono = "*".join(
                (n if k == 1 else f"{n}^{k}") for n, k in zip(names, e) if k
            )
            mag = abs(v)
            s = rat_str(mag)
            body = mono if mag == 1 and mono else (f"{s}*{mono}" if mono else s)
            parts.append(("-" if v < 0 else "+", body))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def to_json(self) -> list:
        return [[list(e), rat_str(self.terms[e])] for e in sorted(self.terms, reverse=True)]

    def __repr__(self):
        return f"ImplicitCurve({self.to_str()})"


def _primitive(terms: dict) -> dict:
    from math import gcd, lcm

    den = 1
    for v in terms.values():
        den = lcm(den, v.denominator)
    ints = {k: int(v * den) for k, v in terms.items()}
    g = 0
    for v in ints.values():
        g = gcd(g, v)
    lead = max(ints)
    if ints[lead] < 0:
        g = -g
    return {k: Fraction(v // g) for k, v in ints.items()}


def implicitize(C: ParamCurve) -> ImplicitCurve:
    """Implicit equation of the image: Res_t(x0 g2 - x2 g0, x1 g2 - x2 g1) / x2^d.

    The resultant is evaluated at x2 = 1 on an integer grid in (x0, x1) and
    interpolated; after removing the x2 power it has total degree n.
    """
    if not C.is_rational():
        raise TypeError("implicitization needs rational coefficients")
    k = validate_proper(C)
    if k != 1:
        raise ImproperParametrization(k)
    order = _pivot_order(C)
    g0, g1, g2 = (C.g[i] for i in order)
    n = C.n

    def value(a, b):
        return resultant_formal(g2.scale(a) - g0, g2.scale(b) - g1, n, n)

    raw = ternary_interpolate(value, n, order=order)
    F = ImplicitCurve(raw)
    if F.degree != n:
        raise ImproperParametrization(Fraction(n, F.degree))
    return F


def _pivot_order(C: ParamCurve) -> tuple:
    for piv in (2, 0, 1):
        if C.g[piv].deg() == C.n:
            rest = [i for i in range(3) if i != piv]
            return (rest[0], rest[1], piv)
    return (0, 1, 2)


def implicit_by_kernel(C: ParamCurve, d: int) -> ImplicitCurve:
    """Degree-d form vanishing on the curve, found as a kernel vector.

    Independent of the resultant route; unique up to scalar when d is the
    degree of the image.
    """
    from .exactforms.linalg import nullspace

    monos = [(a, b, d - a - b) for a in range(d, -1, -1) for b in range(d - a, -1, -1)]
    pw = [[Poly([1])] for _ in range(3)]
    for i in range(3):
        for _ in range(d):
            pw[i].append(pw[i][-1] * C.g[i])
    cols = [pw[0][a] * pw[1][b] * pw[2][c] for a, b, c in monos]
    height = d * C.n + 1
    rows = [[col.coeff(k) for col in cols] for k in range(height)]
    ker = nullspace(rows)
    if len(ker) != 1:
        raise ImproperParametrization(len(ker)) if not ker else ValueError(
            f"degree {d} kernel has dimension {len(ker)}"
        )
    return ImplicitCurve({m: v for m, v in zip(monos, ker[0]) if v})


# ternary forms as {exponent triple: coefficient} ----------------------------

def ternary_interpolate(value, k: int, order=(0, 1, 2), degree: int | None = None) -> dict:
    """Recover a form of degree <= k from its values at (a, b, 1), a, b = 0..k.

    ``value(a, b)`` is the dehomogenized form.  The result is homogenized to
    ``degree`` (default: its own total degree, which strips powers of the
    last variable).  ``order`` says which coordinates a, b and 1 stand for.
    """
    pts = [Fraction(i) for i in range(k + 1)]
    rows = [interpolate(pts, [value(a, b) for b in pts]) for a in pts]
    flat = {}
    for j in range(k + 1):
        col = interpolate(pts, [r.coeff(j) for r in rows])
        for i, v in enumerate(col.c):
            if v:
                flat[(i, j)] = v
    if not flat:
        return {}
    top = max(i + j for i, j in flat) if degree is None else degree
    out = {}
    for (i, j), v in flat.items():
        e = [0, 0, 0]
        e[order[0]], e[order[1]], e[order[2]] = i, j, top - i - j
        out[tuple(e)] = v
    return out


def ternary_mul(a: dict, b: dict) -> dict:
    out = {}
    for ea, va in a.items():
        for eb, vb in b.items():
            e = (ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2])
            out[e] = out.get(e, 0) + va * vb
    return {e: v for e, v in out.items() if v}


def ternary_diff(a: dict, i: int) -> dict:
    out = {}
    for e, v in a.items():
        if e[i]:
            f = list(e)
            f[i] -= 1
            out[tuple(f)] = v * e[i]
    return out


def ternary_substitute(a: dict, polys: Sequence[Poly]) -> Poly:
    """a(p0, p1, p2) for polynomials with coefficients in any field."""
    if not a:
        return Poly()
    top = max(max(e) for e in a)
    pw = []
    for p in polys:
        row = [Poly([1])]
        for _ in range(top):
            row.append(row[-1] * p)
        pw.append(row)
    acc = Poly()
    for e, v in a.items():
        acc = acc + pw[0][e[0]] * pw[1][e[1]] * pw[2][e[2]] * Poly([v])
    return acc


# class formula and Pluecker relations --------------------------------------

def class_degree(d: int, g: int, mults: Iterable[int]) -> int:
    """d* = 2(g + d - 1) - sum (m_A - 1) over singular branches."""
    mults = list(mults)
    if any(m < 2 for m in mults):
        raise ValueError("only singular branches (m >= 2) belong in the sum")
    val = 2 * (g + d - 1) - sum(m - 1 for m in mults)
    if val < 0:
        raise InconsistentInventory(f"class formula gives {val} < 0")
    return val


@dataclass(frozen=True)
class PlueckerData:
    d: int
    d_star: int
    g: int
    delta: int
    kappa: int
    b: int
    f: int


@dataclass(frozen=True)
class Relation:
    name: str
    lhs: int
    rhs: int

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


def pluecker_audit(p: PlueckerData) -> list:
    """Evaluate the four Pluecker relations; a failure means the curve is not Pluecker."""
    two_g = 2 * p.g
    return [
        Relation("genus-from-degree", two_g, (p.d - 1) * (p.d - 2) - 2 * p.delta - 2 * p.kappa),
        Relation("genus-from-class", two_g, (p.d_star - 1) * (p.d_star - 2) - 2 * p.b - 2 * p.f),
        Relation("class", p.d_star, p.d * (p.d - 1) - 2 * p.delta - 3 * p.kappa),
        Relation("degree", p.d, p.d_star * (p.d_star - 1) - 2 * p.b - 3 * p.f),
    ]
