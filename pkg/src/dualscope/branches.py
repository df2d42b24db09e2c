"""Branches, singular points, flexes, nodes and artifacts of a rational curve.

A place of the normalization P^1 is either t = oo or a root of an
irreducible rational polynomial.  Conjugate roots carry identical local
invariants, so every computation is done once per irreducible factor, in
exact arithmetic over Q[t]/(p).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .exactforms import (
    INF,
    AlgNum,
    BinaryForm,
    NFElem,
    NumberField,
    Poly,
    RootProfile,
    factor_rational,
    multiplicity,
    poly_gcd,
    poly_gcd_many,
    rat_str,
    remove_factor,
    squarefree_part,
    squarefree_support,
)
from .exactforms.forms import resultant_formal
from .exactforms.linalg import cross, nullspace
from .exactforms.poly import interpolate
from .ratcurves import (
    DegenerateCurve,
    ImproperParametrization,
    ParamCurve,
    dual_data,
    fibre_size,
    implicitize,
    ternary_diff,
    ternary_interpolate,
    ternary_mul,
    ternary_substitute,
)


# places -------------------------------------------------------------------

@dataclass(frozen=True)
class Place:
    """t = oo (poly None) or the roots of an irreducible primitive polynomial."""

    poly: Poly | None

    @property
    def degree(self) -> int:
        return 1 if self.poly is None else self.poly.deg()

    @property
    def is_infinite(self) -> bool:
        return self.poly is None

    def representative(self):
        """Fraction, INF, or the AlgNum with index 0."""
        if self.poly is None:
            return INF
        if self.poly.deg() == 1:
            return -self.poly.coeff(0) / self.poly.coeff(1)
        return AlgNum(self.poly, 0)

    def label(self) -> str:
        r = self.representative()
        if r is INF:
            return "oo"
        if isinstance(r, Fraction):
            return rat_str(r)
        return "root of " + self.poly.to_str()

    def sort_key(self):
        if self.poly is None:
            return (2, 0, ())
        if self.poly.deg() == 1:
            return (0, self.representative(), ())
        return (1, self.poly.deg(), tuple((c.numerator, c.denominator) for c in self.poly.c))


def place_of(t0) -> Place:
    if t0 is INF:
        return Place(None)
    if isinstance(t0, AlgNum):
        return Place(t0.minpoly)
    if isinstance(t0, Place):
        return t0
    t0 = Fraction(t0)
    return Place(Poly([-t0, 1]).primitive())


def places_of(p: Poly, infinity_order: int = 0) -> list:
    """Irreducible factors of p (rational coefficients) with multiplicities, oo last."""
    out = []
    if p.deg() > 0:
        _, facs = factor_rational(p)
        out = [(Place(f), k) for f, k in facs]
    if infinity_order:
        out.append((Place(None), infinity_order))
    out.sort(key=lambda e: e[0].sort_key())
    return out


def local_data(C: ParamCurve, place: Place):
    """(chart curve, parameter value) with the place at a finite parameter.

    For oo the chart is s = 1/t and the value 0; for a root of an
    irreducible factor of degree >= 2 the value lives in Q[t]/(p).
    """
    if place.is_infinite:
        return C.at_infinity_chart(), Fraction(0)
    if place.degree == 1:
        return C, place.representative()
    K = NumberField(place.poly, "a")
    return C, K.gen()


def _profile(p: Poly, infinity_order: int) -> RootProfile:
    if p.deg() <= 0 and not infinity_order:
        return RootProfile([])
    return squarefree_support(BinaryForm.from_affine(p, p.deg() + infinity_order))


def _order_at(p: Poly, place: Place, formal_degree: int | None = None) -> int:
    """Order of vanishing of p at the place (oo uses the formal degree)."""
    if place.is_infinite:
        if not p:
            raise ValueError("order of the zero polynomial")
        return formal_degree - p.deg()
    return multiplicity(p, place.poly)


def _is_zero(x) -> bool:
    return not x


# branches -----------------------------------------------------------------

@dataclass(frozen=True)
class Branch:
    place: Place
    center: tuple  # coordinates over Q or over Q[t]/(p)
    multiplicity: int
    tangent: tuple  # line coordinates (a : b : c) meaning a x0 + b x1 + c x2 = 0
    contact: int
    flex_order: int | None = None  # smooth branches only
    simple_cusp: bool | None = None  # singular branches only

    @property
    def parameter(self):
        return self.place.representative()

    @property
    def conjugates(self) -> int:
        return self.place.degree

    @property
    def is_singular(self) -> bool:
        return self.multiplicity >= 2

    def to_json(self) -> dict:
        out = {
            "parameter": self.place.label(),
            "conjugates": self.conjugates,
            "center": [_coord_str(c) for c in self.center],
            "multiplicity": self.multiplicity,
            "tangent": [_coord_str(c) for c in self.tangent],
            "contact": self.contact,
        }
        if self.flex_order is not None:
            out["flex_order"] = self.flex_order
        if self.simple_cusp is not None:
            out["simple_cusp"] = self.simple_cusp
        return out


def _coord_str(c) -> str:
    if isinstance(c, NFElem):
        return c.p.to_str(c.field.name) if c.p else "0"
    return rat_str(Fraction(c))


def _normalize(v: Sequence) -> tuple:
    for c in v:
        if c:
            inv = 1 / c if not isinstance(c, Fraction) else Fraction(1) / c
            return tuple(x * inv for x in v)
    raise ValueError("zero vector")


def _valuation_at(p: Poly, a) -> int:
    """Order of vanishing of p at the value a (any field); p != 0."""
    for k, c in enumerate(p.taylor(a)):
        if c:
            return k
    raise ValueError("zero polynomial has no valuation")


def _lift_poly(p: Poly, a) -> Poly:
    """Coerce rational coefficients into the field of a."""
    if isinstance(a, NFElem):
        return Poly([a.field(c) for c in p.c])
    return p


def branch_at(C: ParamCurve, t0) -> Branch:
    """Local invariants of the branch at t0 (Fraction, AlgNum, INF or Place)."""
    place = place_of(t0)
    chart, a = local_data(C, place)
    center = chart.point(a)
    if not any(center):
        raise DegenerateCurve("parametrization has a base point")
    # multiplicity: least order of the affine chart coordinates minus their values
    k = next(i for i, c in enumerate(center) if c)
    m = None
    for i in range(3):
        if i == k:
            continue
        h = chart.g[i].scale(center[k]) - chart.g[k].scale(center[i]) if not isinstance(a, NFElem) else (
            _lift_poly(chart.g[i], a) * Poly([center[k]]) - _lift_poly(chart.g[k], a) * Poly([center[i]])
        )
        if h:
            v = _valuation_at(h, a)
            m = v if m is None else min(m, v)
    if m is None:
        raise DegenerateCurve("curve is constant")
    dd = dual_data(C)
    dchart, _ = local_data(dd.curve, place)
    tangent = tuple(dchart.point(a))
    h = Poly()
    for T, g in zip(tangent, chart.g):
        if T:
            h = h + _lift_poly(g, a) * Poly([T])
    contact = _valuation_at(h, a)
    if m == 1:
        return Branch(place, _normalize(center), 1, _normalize(tangent), contact, flex_order=contact - 2)
    dd2 = dual_data(dd.curve)
    order = dd2.infinity_order if place.is_infinite else multiplicity(dd2.content, place.poly) if dd2.content.deg() > 0 else 0
    return Branch(place, _normalize(center), m, _normalize(tangent), contact, simple_cusp=(order == 0))


def singular_params(C: ParamCurve) -> RootProfile:
    """Roots of the common factor of the Jacobian minors; multiplicity m_A - 1."""
    dd = dual_data(C)
    return _profile(dd.content, dd.infinity_order)


def singular_places(C: ParamCurve) -> list:
    dd = dual_data(C)
    return places_of(dd.content, dd.infinity_order)


def is_simple_cusp(C: ParamCurve, t0) -> bool:
    b = branch_at(C, t0)
    if not b.is_singular:
        raise ValueError("branch is smooth; simple-cusp test applies to singular branches")
    return b.simple_cusp


def wronskian(C: ParamCurve) -> Poly:
    rows = [list(C.g), [p.deriv() for p in C.g], [p.deriv(2) for p in C.g]]
    return _det3(rows)


def _det3(m) -> Poly:
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


def _flex_data(C: ParamCurve):
    W = wronskian(C)
    if not W:
        raise DegenerateCurve("Wronskian vanishes identically: the image is a line")
    dd = dual_data(C)
    inf = 3 * C.n - 6 - W.deg()
    if dd.content.deg() > 0:
        W = remove_factor(W, dd.content)
    if dd.infinity_order:
        inf = 0
    return W, inf


def flex_params(C: ParamCurve) -> RootProfile:
    """Parameters of flexes on smooth branches; multiplicity = flex order."""
    W, inf = _flex_data(C)
    return _profile(W, inf)


def flex_places(C: ParamCurve) -> list:
    W, inf = _flex_data(C)
    return places_of(W, inf)


# nodes --------------------------------------------------------------------

_MOBIUS = [
    ((Fraction(1), Fraction(2)), (Fraction(1), Fraction(-3))),
    ((Fraction(2), Fraction(-1)), (Fraction(3), Fraction(5))),
    ((Fraction(-3), Fraction(7)), (Fraction(2), Fraction(1))),
    ((Fraction(5), Fraction(1)), (Fraction(-1), Fraction(4))),
    ((Fraction(1), Fraction(-7)), (Fraction(4), Fraction(3))),
]
_PROJ = [
    [[2, 1, -1], [1, -3, 2], [1, 1, 1]],
    [[1, 5, 2], [-2, 1, 3], [3, -1, 1]],
    [[7, -2, 1], [1, 4, -3], [2, 3, 5]],
    [[-1, 2, 6], [5, 1, -2], [1, -4, 3]],
    [[3, 3, -5], [2, -7, 1], [4, 1, 2]],
]


def mobius_poly(p: Poly, m) -> Poly:
    """Polynomial whose roots are the images of the roots of p under z -> (a z + b)/(c z + d)."""
    (a, b), (c, d) = m
    # roots z of p map to w; z = (d w - b)/(-c w + a)
    num = Poly([-b, d])
    den = Poly([a, -c])
    k = p.deg()
    acc = Poly()
    for j, coef in enumerate(p.c):
        if coef:
            acc = acc + num**j * den ** (k - j) * Poly([coef])
    return acc


def mobius_value(m, z):
    (a, b), (c, d) = m
    if z is INF:
        return INF if c == 0 else a / c if isinstance(a, Fraction) else a * (1 / c)
    den = c * z + d
    if not den:
        return INF
    return (a * z + b) / den


def _reparam(C: ParamCurve, m) -> ParamCurve:
    """Curve s -> nu(m(s))."""
    (a, b), (c, d) = m
    return C.substitute(Poly([b, a]), Poly([d, c]))


def _h_at(C: ParamCurve, i: int, j: int, s0) -> Poly:
    """h_ij(s0, t) = (g_i(s0) g_j(t) - g_j(s0) g_i(t)) / (s0 - t) as a polynomial in t."""
    gi, gj = C.g[i], C.g[j]
    if isinstance(s0, NFElem):
        gi, gj = _lift_poly(gi, s0), _lift_poly(gj, s0)
    num = gj * Poly([gi(s0)]) - gi * Poly([gj(s0)])
    q = num.exact_div(Poly([s0, -1]) if not isinstance(s0, NFElem) else Poly([s0, s0.field(-1)]))
    return q


def _pair_resultant(C: ParamCurve, i: int, j: int, k: int) -> Poly:
    """Res_t(h_ij(s, t), h_ik(s, t)) as a polynomial in s, by evaluation and interpolation."""
    n = C.n
    bound = 2 * (n - 1) * (n - 1)
    xs, ys = [], []
    s0 = Fraction(-(bound // 2))
    while len(xs) < bound + 1:
        xs.append(s0)
        ys.append(resultant_formal(_h_at(C, i, j, s0), _h_at(C, i, k, s0), n - 1, n - 1))
        s0 += 1
    return interpolate(xs, ys)


def partners(C: ParamCurve, place: Place) -> Poly:
    """Monic polynomial (over the place's field) whose roots are the other
    finite parameters with the same image point.  Not defined at oo."""
    chart, a = local_data(C, place)
    if place.is_infinite:
        raise ValueError("partners at oo: reparametrize first")
    hs = [_h_at(C, i, j, a) for i, j in ((0, 1), (0, 2), (1, 2))]
    g = poly_gcd_many([h for h in hs if h])
    lin = Poly([-a, 1]) if not isinstance(a, NFElem) else Poly([-a, a.field(1)])
    while g.deg() > 0 and lin.divides(g):
        g = g.exact_div(lin)
    return g


@dataclass(frozen=True)
class NodePair:
    """A conjugate family of unordered parameter pairs with equal image.

    Large families are kept symbolic: ``second`` and ``center`` are None and
    only ``ends`` (the number of parameters in the family) is known.
    """

    first: Place  # family of the first parameter
    second: object  # partner of the representative root (Fraction, INF, NFElem or None)
    pairs: int  # number of unordered pairs in the family (0 when symbolic)
    center: tuple | None
    transversal: bool
    ends: int = 0

    @property
    def symbolic(self) -> bool:
        return self.second is None

    def label(self) -> str:
        s = self.second
        if s is None:
            t = "?"
        elif s is INF:
            t = "oo"
        elif isinstance(s, NFElem):
            t = s.p.to_str(s.field.name)
        else:
            t = rat_str(s)
        return "{" + self.first.label() + ", " + t + "}"

    def rational_pair(self):
        """(a, b) when both parameters are rational or oo, else None."""
        if self.second is None or self.first.degree != 1 or isinstance(self.second, NFElem):
            return None
        return (self.first.representative(), self.second)

    def to_json(self) -> dict:
        if self.symbolic:
            return {"pair": self.label(), "parameters": self.ends, "transversal": self.transversal}
        return {
            "pair": self.label(),
            "pairs": self.pairs,
            "center": [_coord_str(c) for c in self.center],
            "transversal": self.transversal,
        }


@dataclass(frozen=True)
class NodeData:
    pairs: tuple  # NodePair families
    delta: int  # number of unordered pairs of parameters with equal image
    ordinary: bool  # every multiple point is an ordinary node
    cusp_crossings: int  # singular branches whose center also lies on another branch

    def pair_set(self) -> set:
        out = set()
        for p in self.pairs:
            r = p.rational_pair()
            if r is not None:
                out.add(frozenset(r))
        return out


def _choose_frame(C: ParamCurve):
    for m in _MOBIUS:
        inf_t = mobius_value(m, INF)
        if fibre_size(C, inf_t) != 1:
            continue
        Cs = _reparam(C, m)
        if Cs.n != C.n:
            continue
        for P in _PROJ:
            Cp = Cs.transform([[Fraction(x) for x in r] for r in P])
            if poly_gcd(Cp.g[0], Cp.g[1]).deg() > 0:
                continue
            yield m, Cp
    raise RuntimeError("no generic frame found for node elimination")


def node_data(C: ParamCurve) -> NodeData:
    """Pairs of distinct parameters with the same image, found by elimination."""
    if C.n < 2:
        return NodeData((), 0, True, 0)
    for m, Cp in _choose_frame(C):
        Ra = _pair_resultant(Cp, 0, 1, 2)
        Rb = _pair_resultant(Cp, 1, 0, 2)
        if not Ra or not Rb:
            raise ImproperParametrization(0)
        G = poly_gcd(Ra, Rb)
        if poly_gcd(G, Cp.g[0] * Cp.g[1]).deg() > 0:
            continue
        ddp = dual_data(Cp)
        if ddp.content.deg() > 0:
            G = remove_factor(G, ddp.content)
        return _collect_pairs(C, Cp, m, G, ddp.content)
    raise RuntimeError("node elimination failed in every frame")


# families above this degree are not split into explicit pairs; the gcd over
# a big number field dominates the running time
EXPLICIT_PARTNER_DEGREE = 4


def _collect_pairs(C, Cp, m, G, content) -> NodeData:
    minv = ((m[1][1], -m[0][1]), (-m[1][0], m[0][0]))
    D = dual_data(C).curve
    families = []
    ends = 0
    ordinary = True
    facs = places_of(G) if G.deg() > 0 else []
    # A parameter with two partners, or a tangential pair, makes the point a
    # multiple intersection of h_01 = h_02 = 0 and so a repeated root of G.
    # When G is squarefree every root has one partner and every pair is a
    # transversal crossing, so big families can stay symbolic.
    sqf = all(e == 1 for _, e in facs)
    used = set()
    for place, e in facs:
        if place.poly in used:
            continue
        if sqf and place.degree > EXPLICIT_PARTNER_DEGREE:
            used.add(place.poly)
            ends += place.degree
            fam = Place(mobius_poly(place.poly, m).primitive())
            families.append(NodePair(fam, None, 0, None, True, place.degree))
            continue
        chart, a = local_data(Cp, place)
        pg = partners(Cp, place)
        r = pg.deg()
        if r == 0:
            continue
        if r > 1:
            ordinary = False
            ends += place.degree * r
            used.add(place.poly)
            continue
        beta = -pg.coeff(0)
        other = None
        for q, _ in facs:
            if not q.poly(beta):
                other = q
                break
        if other is None:
            raise RuntimeError("partner parameter is not a root of the node polynomial")
        used.add(place.poly)
        used.add(other.poly)
        pairs = place.degree // 2 if other.poly == place.poly else place.degree
        ends += 2 * pairs
        fam, first_t, second_t = _back(place, a, beta, m, minv)
        center = _normalize(C.point(first_t) if first_t is not INF else C.point(INF))
        t1 = _tangent_at(D, first_t)
        t2 = _tangent_at(D, second_t, field_of=first_t)
        transversal = any(cross(list(t1), list(t2)))
        if not transversal:
            ordinary = False
        families.append(NodePair(fam, second_t, pairs, center, transversal, 2 * pairs))
    crossings = 0
    if content.deg() > 0:
        for place, _ in places_of(content):
            if _meets_other_branch(Cp, place):
                crossings += place.degree
                ordinary = False
    families.sort(key=lambda f: f.first.sort_key())
    return NodeData(tuple(families), ends // 2, ordinary, crossings)


def _meets_other_branch(Cp: ParamCurve, place: Place) -> bool:
    """Does another parameter map to the image of this family?

    For a conjugate family with minimal polynomial p, the rational norms
    N_ij(t) = Res_s(p(s), h_ij(s, t)) all vanish at any partner.  Their gcd,
    stripped of p itself, is a cheap necessary condition; the exact test over
    the number field runs only when that gcd is nontrivial.
    """
    if place.degree <= EXPLICIT_PARTNER_DEGREE:
        return partners(Cp, place).deg() > 0
    p = place.poly
    k, n = p.deg(), Cp.n
    bound = k * (n - 1)
    norms = []
    for i, j in ((0, 1), (0, 2), (1, 2)):
        xs, ys = [], []
        t0 = Fraction(-(bound // 2))
        while len(xs) < bound + 1:
            xs.append(t0)
            ys.append(resultant_formal(p, _h_at(Cp, i, j, t0), k, n - 1))
            t0 += 1
        norms.append(interpolate(xs, ys))
    g = poly_gcd_many([f for f in norms if f])
    if g.deg() > 0:
        g = remove_factor(g, p)
    if g.deg() <= 0:
        return False
    return partners(Cp, place).deg() > 0


def _tangent_at(D: ParamCurve, t, field_of=None):
    if t is INF:
        return tuple(D.point(INF))
    return tuple(D.point(t))


def _back(place: Place, a, beta, m, minv):
    """Map a pair (a, beta) in the frame parameter back to the original parameter."""
    if place.degree == 1:
        t1 = mobius_value(m, a)
        t2 = mobius_value(m, beta if not isinstance(beta, NFElem) else beta.to_rat())
        if t1 is not INF and t2 is not INF and t2 < t1 or t1 is INF:
            t1, t2 = t2, t1
        return place_of(t1), t1, t2
    q = mobius_poly(place.poly, m).primitive()
    K = NumberField(q, "a")
    tau = K.gen()
    s_of_tau = mobius_value(minv, tau)
    # beta is a polynomial in the old generator; evaluate it at s(tau)
    b_s = beta.p(s_of_tau) if isinstance(beta, NFElem) else K(beta)
    if not isinstance(b_s, NFElem):
        b_s = K(b_s)
    t2 = mobius_value(m, b_s)
    return Place(q), tau, t2


# artifacts and the inventory ----------------------------------------------

@dataclass(frozen=True)
class ArtifactLine:
    """Dual line of a cusp of C*, one per conjugate family."""

    place: Place
    line: tuple  # coordinates over Q or over Q[t]/(p)

    @property
    def conjugates(self) -> int:
        return self.place.degree

    def to_json(self) -> dict:
        return {
            "parameter": self.place.label(),
            "conjugates": self.conjugates,
            "line": [_coord_str(c) for c in self.line],
        }


def artifacts(C: ParamCurve) -> list:
    """L_C: the dual lines of the cusps of the dual curve."""
    D = dual_data(C).curve
    if D.n < 2:
        return []
    out = []
    for place, _ in singular_places(D):
        chart, a = local_data(D, place)
        out.append(ArtifactLine(place, _normalize(chart.point(a))))
    return out


def dual_immersed(C: ParamCurve) -> bool:
    """C* immersed: no flexes and every cusp simple."""
    if flex_places(C):
        return False
    return all(branch_at(C, p).simple_cusp for p, _ in singular_places(C))


@dataclass(frozen=True)
class SingularPoint:
    center: tuple | None  # None for a group of nodes kept symbolic
    branches: tuple  # Branch objects through the point (singular ones) or parameter labels
    m_p: int
    r_p: int
    is_node: bool
    conjugates: int = 1

    def to_json(self) -> dict:
        return {
            "center": None if self.center is None else [_coord_str(c) for c in self.center],
            "conjugates": self.conjugates,
            "m_p": self.m_p,
            "r_p": self.r_p,
            "is_node": self.is_node,
            "branches": list(self.branches),
        }


@dataclass(frozen=True)
class Inventory:
    d: int
    g: int
    d_star: int
    branches: tuple  # singular branches
    flexes: tuple  # smooth branches with contact >= 3
    singular_points: tuple
    delta: int
    kappa: int
    immersed: bool
    nodal: bool
    nodes: NodeData | None = None

    @property
    def singular_multiplicities(self) -> list:
        out = []
        for b in self.branches:
            out.extend([b.multiplicity] * b.conjugates)
        return out

    @property
    def flex_count(self) -> int:
        return sum(b.conjugates for b in self.flexes)

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "g": self.g,
            "d_star": self.d_star,
            "delta": self.delta,
            "kappa": self.kappa,
            "immersed": self.immersed,
            "nodal": self.nodal,
            "singular_branches": [b.to_json() for b in self.branches],
            "flexes": [b.to_json() for b in self.flexes],
            "singular_points": [p.to_json() for p in self.singular_points],
        }


def build_inventory(C: ParamCurve, with_nodes: bool = True) -> Inventory:
    dd = dual_data(C)
    sing = tuple(branch_at(C, p) for p, _ in places_of(dd.content, dd.infinity_order))
    flexes = tuple(branch_at(C, p) for p, _ in flex_places(C))
    nodes = node_data(C) if with_nodes else None
    points = []
    for b in sing:
        extra = 0
        if nodes is not None and not b.place.is_infinite and nodes.cusp_crossings:
            extra = partners(C, b.place).deg()
        points.append(
            SingularPoint(b.center, (b.place.label(),), b.multiplicity + extra, 1 + extra, False, b.conjugates)
        )
    if nodes is not None:
        sym = [f for f in nodes.pairs if f.symbolic]
        for f in nodes.pairs:
            if not f.symbolic:
                points.append(SingularPoint(f.center, (f.label(),), 2, 2, f.transversal, f.pairs))
        if sym:
            # nodes whose pairing was not made explicit, reported as one group
            points.append(
                SingularPoint(None, tuple(f.label() for f in sym), 2, 2, True, sum(f.ends for f in sym) // 2)
            )
    immersed = not sing
    nodal = immersed and (nodes is not None and nodes.ordinary)
    kappa = sum(b.conjugates for b in sing)
    delta = nodes.delta if nodes is not None else 0
    return Inventory(
        d=C.n,
        g=0,
        d_star=dd.curve.n,
        branches=sing,
        flexes=flexes,
        singular_points=tuple(points),
        delta=delta,
        kappa=kappa,
        immersed=immersed,
        nodal=nodal,
        nodes=nodes,
    )


# punctures and hyperbolicity of the regular locus --------------------------

def line_family_form(line: ArtifactLine) -> dict:
    """Product of the conjugate lines of a family, as a rational ternary form."""
    if not any(isinstance(c, NFElem) for c in line.line):
        return {e: Fraction(c) for e, c in zip(((1, 0, 0), (0, 1, 0), (0, 0, 1)), line.line) if c}
    k = line.place.degree
    p = line.place.poly
    K = next(c.field for c in line.line if isinstance(c, NFElem))
    reps = [c.p if isinstance(c, NFElem) else Poly([c]) for c in line.line]

    def value(a, b):
        rep = reps[0].scale(a) + reps[1].scale(b) + reps[2]
        return resultant_formal(p, rep, k, k - 1)

    return ternary_interpolate(value, k, degree=k)


def _count_roots(polys: list, formal: int) -> int:
    """Distinct common roots (oo included) of polynomials of formal degree ``formal``."""
    live = [p for p in polys if p]
    if not live:
        raise ValueError("all gradient components vanish on the component")
    g = poly_gcd_many(live)
    count = g.deg() and squarefree_part(g).deg()
    if all(p.deg() < formal for p in live):
        count += 1
    return count


@dataclass(frozen=True)
class PunctureCount:
    curve: int  # punctures on the normalization of C
    lines: tuple  # (ArtifactLine, punctures) per family

    @property
    def hyperbolic(self) -> bool:
        return self.curve >= 3 and all(k >= 3 for _, k in self.lines)


def regular_punctures(C: ParamCurve, lines: Sequence[ArtifactLine] = ()) -> PunctureCount:
    """Points removed from each component of C u lines when passing to the regular locus.

    Singular points of the union are where the gradient of its equation
    vanishes; on a component these are the common zeros of the three
    partials restricted to it.
    """
    phi = dict(implicitize(C).terms)
    for ln in lines:
        phi = ternary_mul(phi, line_family_form(ln))
    deg = sum(next(iter(phi)))
    grads = [ternary_diff(phi, i) for i in range(3)]
    on_curve = [ternary_substitute(gr, C.g) for gr in grads]
    c_count = _count_roots(on_curve, (deg - 1) * C.n)
    out = []
    for ln in lines:
        A, B = _line_basis(ln.line)
        u = [Poly([a, b]) for a, b in zip(A, B)]
        vals = [ternary_substitute(gr, u) for gr in grads]
        out.append((ln, _count_roots(vals, deg - 1)))
    return PunctureCount(c_count, tuple(out))


def _line_basis(line: Sequence):
    basis = nullspace([list(line)])
    return basis[0], basis[1]


def line_meetings(F: dict, line: ArtifactLine) -> int:
    """Distinct points where one line of a family meets the curve F = 0."""
    A, B = _line_basis(line.line)
    f = ternary_substitute(F, [Poly([a, b]) for a, b in zip(A, B)])
    if not f:
        raise ValueError("the line is a component of the curve")
    count = f.deg() and squarefree_part(f).deg()
    if f.deg() < sum(next(iter(F))):
        count += 1
    return count


@dataclass(frozen=True)
class RegularCheck:
    hyperbolic: bool
    curve: int  # punctures on C, a lower bound when exact is False
    lines: tuple  # punctures per line family, same convention
    exact: bool

    def to_json(self) -> dict:
        rel = "=" if self.exact else ">="
        return {
            "hyperbolic": self.hyperbolic,
            "curve_punctures": f"{rel} {self.curve}",
            "line_punctures": [f"{rel} {k}" for k in self.lines],
        }


def regular_hyperbolic(C: ParamCurve, lines: Sequence[ArtifactLine] = (), inventory: Inventory | None = None) -> RegularCheck:
    """Is every component of reg(C u lines) a hyperbolic Riemann surface?

    All components are rational, so this asks for at least three punctures
    on each.  Cheap lower bounds are tried first: the singular parameters of
    C, and the distinct points where a line meets C.  The exact count of
    regular_punctures is the fallback when a bound stays below three.
    """
    inv = inventory if inventory is not None else build_inventory(C)
    ends = 2 * inv.delta
    bound = max(inv.kappa, ends) if inv.nodes and inv.nodes.cusp_crossings else inv.kappa + ends
    F = implicitize(C).terms if lines else None
    line_bounds = [line_meetings(F, ln) for ln in lines]
    if bound >= 3 and all(k >= 3 for k in line_bounds):
        return RegularCheck(True, bound, tuple(line_bounds), False)
    pc = regular_punctures(C, lines)
    return RegularCheck(pc.hyperbolic, pc.curve, tuple(k for _, k in pc.lines), True)
