"""The Zariski embedding of P^2 into the space of binary forms.

With C* parametrized by nu = (g0 : g1 : g2), a point x of P^2 goes to the
binary form sum_i x_i g_i(t), whose roots are the parameters where the dual
line of x meets C*.  The image is the plane P^2_C spanned by the rows of
B_C.  Monomial and quasi-monomial structure of C* is read off from the
forms in that plane supported on two points of P^1.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb, gcd

from sympy.polys.domains import QQ

from .branches import Branch, Place, branch_at, flex_places, mobius_value, place_of, singular_places
from .exactforms import INF, BinaryForm, NFElem, NumberField, Poly, factor_rational, poly_gcd_many, rat_str
from .exactforms.elim import poly_ring, ring_univariate, roots_in_extension
from .exactforms.linalg import cross, inverse, nullspace, rank, solve
from .projspace import LinSubspace, ProjPoint, meet, osculating_subspace
from .ratcurves import (
    DegenerateCurve,
    ImproperParametrization,
    ParamCurve,
    dualize,
    validate_proper,
)


class SolverLimit(ValueError):
    """The monomiality search was skipped because n exceeds the configured cap."""


def max_degree() -> int:
    try:
        return int(os.environ.get("DUALSCOPE_MAX_DEGREE", "10"))
    except ValueError:
        return 10


# frame --------------------------------------------------------------------

@dataclass(frozen=True)
class ZariskiFrame:
    dual: ParamCurve  # nu, a proper parametrization of C*
    n: int
    B: tuple  # 3 x (n+1), B[i][j] = coefficient of t^(n-j) in g_i
    plane: LinSubspace

    @property
    def primal(self) -> ParamCurve:
        return dualize(self.dual)

    def rows(self) -> list:
        return [list(r) for r in self.B]


def build_frame(dual: ParamCurve) -> ZariskiFrame:
    if dual.n < 2:
        raise DegenerateCurve("the dual curve must have degree >= 2")
    B = dual.b_matrix()
    if rank(B) < 3:
        raise DegenerateCurve("B_C has rank < 3: the image is a line")
    k = validate_proper(dual)
    if k != 1:
        raise ImproperParametrization(k)
    return ZariskiFrame(dual, dual.n, tuple(tuple(r) for r in B), LinSubspace(dual.n, B))


def rho(frame: ZariskiFrame, x) -> BinaryForm:
    """The binary form sum_i x_i g_i, coefficients a_j = sum_i x_i b_ij."""
    x = list(x)
    coeffs = []
    for j in range(frame.n + 1):
        acc = Fraction(0)
        for i in range(3):
            if x[i] and frame.B[i][j]:
                acc = acc + x[i] * frame.B[i][j]
        coeffs.append(acc)
    return BinaryForm(coeffs, frame.n)


def preimage(frame: ZariskiFrame, form) -> list | None:
    """The x with rho(x) = form, or None when form is not in the plane."""
    a = list(form.a if isinstance(form, BinaryForm) else form)
    cols = [[frame.B[i][j] for i in range(3)] for j in range(frame.n + 1)]
    return solve(cols, a)


@dataclass(frozen=True)
class ProjectionCenter:
    """N_C = ker of B_C in P^n*, the center of the projection onto P^2*."""

    frame: ZariskiFrame
    subspace: LinSubspace

    @property
    def dim(self) -> int:
        return self.subspace.dim

    def basis(self) -> list:
        return [list(r) for r in self.subspace.basis]

    def project(self, y) -> ProjPoint:
        """Image of y in P^2* under the linear projection with this center."""
        y = list(y)
        out = [sum((b * c for b, c in zip(row, y)), Fraction(0)) for row in self.frame.B]
        return ProjPoint(out)

    def tangent_point(self, q):
        """The point where N_C meets the tangent line of the rational normal curve at q, if any."""
        m = meet(self.subspace, osculating_subspace(q, 1, self.frame.n))
        if m.dim != 0:
            return None
        return ProjPoint(m.basis[0])


def projection_center(frame: ZariskiFrame) -> ProjectionCenter:
    return ProjectionCenter(frame, LinSubspace(frame.n, nullspace(frame.rows())))


# cusp normalization -------------------------------------------------------

@dataclass(frozen=True)
class CuspNormalization:
    """C* reparametrized and recoordinatized so that the cusp sits at t = oo
    with center (0:0:1) and the t^(n-1) column of B_C vanishes."""

    curve: ParamCurve
    place: Place
    mobius: tuple  # old t = (a s + b) / (c s + d)
    matrix: tuple  # new coordinates = matrix * old coordinates
    shift: object  # final substitution s -> s + shift

    def b_matrix(self) -> list:
        return self.curve.b_matrix()


def _cusp_places(dual: ParamCurve) -> list:
    return [p for p, _ in singular_places(dual)]


def normalize_cusp(dual: ParamCurve, t0) -> CuspNormalization:
    place = place_of(t0)
    if place not in _cusp_places(dual):
        raise ValueError("the parameter is not a cusp of the curve")
    if place.is_infinite:
        C = dual
        one = Fraction(1)
        m = ((one, Fraction(0)), (Fraction(0), one))
    else:
        if place.degree == 1:
            a = place.representative()
            one = Fraction(1)
            zero = Fraction(0)
        else:
            K = NumberField(place.poly, "a")
            a = K.gen()
            one, zero = K.one(), K.zero()
        # t = a + 1/s = (a s + 1)/s sends s = oo to the cusp
        m = ((a, one), (one, zero))
        C = _substitute(dual, Poly([one, a]), Poly([zero, one]))
    c = C.point(INF)
    M = _to_e2(c)
    if M is not None:
        C = C.transform(M)
    n = C.n
    lead = C.g[2].coeff(n)
    sub = C.g[2].coeff(n - 1)
    shift = Fraction(0)
    if sub:
        shift = -sub / (lead * n) if not isinstance(lead, Fraction) or not isinstance(sub, Fraction) else -sub / (n * lead)
        one = Fraction(1) if isinstance(shift, Fraction) else shift.field.one()
        C = _substitute(C, Poly([shift, one]), Poly([one]))
    for g in C.g[:2]:
        if g.deg() > n - 2:
            raise AssertionError("normalization failed: the cusp is not at oo with multiplicity >= 2")
    if C.g[2].coeff(n - 1):
        raise AssertionError("Tschirnhausen shift failed")
    Mt = tuple(tuple(r) for r in M) if M is not None else None
    return CuspNormalization(C, place, m, Mt, shift)


def _substitute(C: ParamCurve, num: Poly, den: Poly) -> ParamCurve:
    """t -> num/den, denominators cleared, no content removal (works over number fields)."""
    n = C.n
    out = []
    for p in C.g:
        acc = Poly()
        for k, a in enumerate(p.c):
            if a:
                acc = acc + num**k * den ** (n - k) * Poly([a])
        out.append(acc)
    return ParamCurve(*out, check=False)


def _to_e2(c):
    """A 3x3 matrix M with M c proportional to (0, 0, 1), or None if already so."""
    if not c[0] and not c[1]:
        return None
    one = Fraction(1)
    zero = Fraction(0)
    for i, j in ((0, 1), (0, 2), (1, 2)):
        cols = [[one if r == i else zero for r in range(3)], [one if r == j else zero for r in range(3)], list(c)]
        P = [[cols[k][r] for k in range(3)] for r in range(3)]
        if rank(P) == 3:
            return inverse(P)
    raise AssertionError("unreachable")


# meeting the tangent developable ------------------------------------------

@dataclass(frozen=True)
class SMeeting:
    """Does P^2_C meet the tangent developable S of the rational normal curve?"""

    meets: bool
    witness: Branch | None
    reason: str

    def to_json(self) -> dict:
        out = {"meets": self.meets, "reason": self.reason}
        if self.witness is not None:
            out["witness"] = self.witness.to_json()
        return out


def meets_S(frame: ZariskiFrame) -> SMeeting:
    """True iff some branch of C* has tangential contact >= n - 1."""
    C, n = frame.dual, frame.n
    cands = [branch_at(C, p) for p, _ in singular_places(C)]
    cands += [branch_at(C, p) for p, _ in flex_places(C)]
    cands.sort(key=lambda b: (-b.contact, b.place.sort_key()))
    for b in cands:
        if b.contact >= n - 1:
            kind = "cusp" if b.is_singular else "flex"
            return SMeeting(True, b, f"{kind} at {b.place.label()} has contact {b.contact} >= n-1 = {n - 1}")
    if n <= 3:
        b = branch_at(C, Fraction(0)) if any(C.point(Fraction(0))) else branch_at(C, INF)
        return SMeeting(True, b, f"every branch has contact >= 2 = n-1 when n = {n}")
    top = cands[0].contact if cands else 2
    return SMeeting(False, None, f"largest contact {top} < n-1 = {n - 1}")


# bivariate systems ---------------------------------------------------------

_COMBOS = [(1, 2, 3, 5, 7, 11, 13, 17), (1, -1, 2, -3, 5, -7, 4, 9), (3, 1, -2, 1, 4, -5, 2, 1), (2, 5, 1, -1, 3, 2, -4, 7)]


def _combo(eqs, coeffs):
    acc = eqs[0].ring.zero
    k = len(coeffs)
    for i, e in enumerate(eqs):
        acc += coeffs[i % k] * (i // k + 1) * e
    return acc


def _roots_of(p: Poly) -> list:
    """Roots of a rational polynomial: Fractions, and a generator per irreducible factor of degree >= 2."""
    if p.deg() <= 0:
        return []
    _, facs = factor_rational(p)
    out = []
    for f, _k in facs:
        if f.deg() == 1:
            out.append(-f.coeff(0) / f.coeff(1))
        else:
            out.append(NumberField(f, "a").gen())
    return out


def _roots_over(h: Poly, like) -> list:
    """Roots of h in the field of ``like`` (rational when like is a Fraction)."""
    h = _trim(h)
    if h.deg() <= 0:
        return []
    if not isinstance(like, NFElem):
        return _roots_of(Poly([Fraction(c) for c in h.c]))
    K = like.field
    if all(not isinstance(c, NFElem) or c.is_rational() for c in h.c):
        rat = Poly([c.to_rat() if isinstance(c, NFElem) else Fraction(c) for c in h.c])
        return [r for r in _roots_of(rat) if isinstance(r, Fraction)] + _ext_roots(K, h)
    return _ext_roots(K, h)


def _ext_roots(K, h: Poly) -> list:
    if h.deg() == 1:
        return [K(-h.coeff(0) / h.coeff(1))]
    coeffs = [c.p if isinstance(c, NFElem) else Poly([c]) for c in h.c]
    found = roots_in_extension(K.minpoly, coeffs)
    out = []
    for r in found:
        e = K(r)
        if e.is_rational():
            continue  # rational roots are reported by the caller
        out.append(e)
    return out


def _trim(p: Poly) -> Poly:
    c = list(p.c)
    while c and not c[-1]:
        c.pop()
    return Poly(c)


def _at_second(f, value) -> Poly:
    """Ring element in (y, x) evaluated at x = value, as a Poly in y."""
    coeffs: dict = {}
    pw = {}
    for (ey, ex), c in f.terms():
        q = Fraction(int(c.numerator), int(c.denominator))
        if ex not in pw:
            pw[ex] = value**ex if ex else Fraction(1)
        coeffs[ey] = coeffs.get(ey, Fraction(0)) + pw[ex] * q
    if not coeffs:
        return Poly()
    out = [Fraction(0)] * (max(coeffs) + 1)
    for k, v in coeffs.items():
        out[k] = v
    return _trim(Poly(out))


def _depends(f, idx: int) -> bool:
    return any(m[idx] for m in f.monoms())


@dataclass
class _Solutions:
    points: list = field(default_factory=list)  # (x value, y value)
    fixed_x: list = field(default_factory=list)  # x values with every y a solution
    fixed_y: list = field(default_factory=list)
    curves: list = field(default_factory=list)  # irreducible components not of the above kinds
    everything: bool = False


def _solve2(eqs, R) -> _Solutions:
    """Common zeros in C^2 of ring elements over Q in R = Q[y, x]."""
    out = _Solutions()
    eqs = [e for e in eqs if e]
    if not eqs:
        out.everything = True
        return out
    G = eqs[0]
    for e in eqs[1:]:
        G = G.gcd(e)
        if G.is_ground:
            break
    if not G.is_ground:
        _, facs = G.factor_list()
        for f, _k in facs:
            dy, dx = _depends(f, 0), _depends(f, 1)
            if dx and not dy:
                out.fixed_x.extend(_roots_of(ring_univariate(f, 1)))
            elif dy and not dx:
                out.fixed_y.extend(_roots_of(ring_univariate(f, 0)))
            else:
                out.curves.append(str(f.as_expr()))
        eqs = [e.exquo(G) for e in eqs]
    if any(e.is_ground for e in eqs):
        return out
    if len(eqs) == 1:
        # a single curve left over after removing the common part cannot happen:
        # its gcd with itself would have been G
        raise AssertionError("unreachable")
    Rx = None
    for i in range(len(_COMBOS) - 2):
        L1 = _combo(eqs, _COMBOS[i])
        L2 = _combo(eqs, _COMBOS[i + 1])
        L3 = _combo(eqs, _COMBOS[i + 2])
        r1 = L1.resultant(L2)
        r2 = L1.resultant(L3)
        r = r1.gcd(r2) if r1 and r2 else (r1 or r2)
        if r:
            Rx = ring_univariate(r, r.ring.ngens - 1) if not r.is_ground else Poly([1])
            break
    if Rx is None:
        raise RuntimeError("elimination degenerated for every combination")
    for x0 in _roots_of(Rx):
        hs = [_at_second(e, x0) for e in eqs]
        hs = [h for h in hs if h]
        if not hs:
            out.fixed_x.append(x0)
            continue
        h = poly_gcd_many(hs)
        for y0 in _roots_over(h, x0):
            out.points.append((x0, y0))
    return out


def _univariate_roots(eqs, R) -> tuple:
    """Roots of ring elements in (y, x) that do not involve x; (roots, all_zero)."""
    polys = [ring_univariate(e, 0) for e in eqs if e]
    if not polys:
        return [], True
    return _roots_of(poly_gcd_many(polys)), False


# two-point supported forms ------------------------------------------------

def _phi(k: int, n: int, a, b) -> list:
    """Coefficients a_j of (u - a v)^k (u - b v)^(n-k); a point at oo contributes a power of v."""
    out = []
    for j in range(n + 1):
        acc = 0
        if b is INF:
            i = j - (n - k)
            if i >= 0:
                acc = comb(k, i) * (-a) ** i
        elif a is INF:
            if j >= k:
                acc = comb(n - k, j - k) * (-b) ** (j - k)
        else:
            for i in range(max(0, j - (n - k)), min(k, j) + 1):
                acc = acc + comb(k, i) * (-a) ** i * comb(n - k, j - i) * (-b) ** (j - i)
        out.append(acc)
    return out


def _phi_ring(k: int, n: int, A, Bv, a_inf: bool) -> list:
    return _phi(k, n, INF if a_inf else A, Bv)


def _contained(N: list, coeffs: list) -> bool:
    for y in N:
        acc = Fraction(0)
        for c, v in zip(coeffs, y):
            if v and c:
                acc = acc + c * v
        if acc:
            return False
    return True


def _exponents(frame: ZariskiFrame, N: list, a, b) -> tuple:
    n = frame.n
    return tuple(k for k in range(n + 1) if _contained(N, _phi(k, n, a, b)))


@dataclass(frozen=True)
class Support:
    """A pair {a, b} of P^1 with the exponents k such that (t-a)^k (t-b)^(n-k) lies in P^2_C."""

    a: object
    b: object
    exponents: tuple

    def label(self) -> str:
        return "{" + _val_str(self.a) + ", " + _val_str(self.b) + "}"

    @property
    def is_rational(self) -> bool:
        return not isinstance(self.a, NFElem) and not isinstance(self.b, NFElem)

    def to_json(self) -> dict:
        return {"support": [_val_str(self.a), _val_str(self.b)], "exponents": list(self.exponents)}


def _val_str(v) -> str:
    if v is INF:
        return "oo"
    if isinstance(v, NFElem):
        if v.is_rational():
            return rat_str(v.to_rat())
        return v.p.to_str(v.field.name) + " mod " + v.field.minpoly.to_str(v.field.name)
    return rat_str(Fraction(v))


@dataclass(frozen=True)
class MonomialityClass:
    tag: str  # "Monomial" | "QuasiMonomialOnly" | "None"
    supports: tuple  # Support records with at least two exponents
    families: tuple  # structural descriptions of positive-dimensional solution sets
    exceptional: bool | None = None  # None when C* has no cusp (the dichotomy is undefined)
    line: tuple | None = None  # distinguished line (preimage of the coordinate axis)
    pattern: str | None = None  # literal normal form when the exponents match one
    pencil: dict | None = None  # Monomial: linear forms and exponents
    cusp_checks: tuple = ()  # per-cusp torus analysis (QuasiMonomialOnly)

    @property
    def unique_axis(self) -> bool:
        return len(self.supports) == 1 and not self.families

    def to_json(self) -> dict:
        out = {
            "tag": self.tag,
            "supports": [s.to_json() for s in self.supports],
            "families": list(self.families),
        }
        if self.exceptional is not None:
            out["exceptional"] = self.exceptional
        if self.line is not None:
            out["line"] = [_val_str(c) for c in self.line]
        if self.pattern is not None:
            out["pattern"] = self.pattern
        if self.pencil is not None:
            out["pencil"] = self.pencil
        if self.cusp_checks:
            out["cusp_checks"] = list(self.cusp_checks)
        return out


def _support_key(a, b):
    def one(v):
        if v is INF:
            return ("oo",)
        if isinstance(v, NFElem):
            if v.is_rational():
                return ("q", v.to_rat())
            return ("k", v.field.minpoly.c, v.p.c)
        return ("q", Fraction(v))

    ka, kb = one(a), one(b)
    return tuple(sorted((ka, kb), key=repr))


def _orient(a, b, exps, n):
    """Put the exponents as multiplicities at the first point, preferring a finite first point."""
    if a is INF and b is not INF:
        return b, a, tuple(sorted(n - k for k in exps))
    return a, b, exps


def _supports(frame: ZariskiFrame) -> tuple:
    n = frame.n
    if n > max_degree():
        raise SolverLimit(f"n = {n} exceeds DUALSCOPE_MAX_DEGREE = {max_degree()}")
    N = projection_center(frame).basis()
    R, Bv, A = poly_ring("b,a")
    found: dict = {}
    families: list = []

    def record(a, b):
        if a is not INF and b is not INF and a == b:
            return
        exps = _exponents(frame, N, a, b)
        if len(exps) < 2:
            return
        a2, b2, e2 = _orient(a, b, exps, n)
        key = _support_key(a2, b2)
        if key not in found:
            found[key] = Support(a2, b2, e2)

    def extend_family(a0, label):
        """Every b works for two exponents; look for b adding a third."""
        hit = False
        for k in range(n + 1):
            if a0 is INF:
                eqs = [sum((c * y for c, y in zip(_phi(k, n, INF, Bv), yv)), R.zero) for yv in N]
                roots, allz = _univariate_roots(eqs, R)
            else:
                eqs = [_at_second(sum((c * y for c, y in zip(_phi(k, n, A, Bv), yv)), R.zero), a0) for yv in N]
                eqs = [e for e in eqs if e]
                allz = not eqs
                roots = [] if allz else _roots_over(poly_gcd_many(eqs), a0)
            if allz:
                continue
            for b0 in roots:
                before = len(found)
                record(a0, b0)
                hit = hit or len(found) > before
        families.append(f"a = {_val_str(a0)}, b free ({label})")

    for k1, k2 in combinations(range(n + 1), 2):
        # both points finite
        eqs = []
        for k in (k1, k2):
            coeffs = _phi(k, n, A, Bv)
            for yv in N:
                eqs.append(sum((c * y for c, y in zip(coeffs, yv) if y), R.zero))
        sol = _solve2(eqs, R)
        for a0, b0 in sol.points:
            record(a0, b0)
        for a0 in sol.fixed_x:
            extend_family(a0, f"exponents {k1}, {k2}")
        for b0 in sol.fixed_y:
            extend_family(b0, f"exponents {n - k2}, {n - k1}")
        for c in sol.curves:
            families.append(f"curve {c} (exponents {k1}, {k2})")
        if sol.everything:
            families.append(f"all pairs (exponents {k1}, {k2})")
        # first point at oo
        eqs = []
        for k in (k1, k2):
            coeffs = _phi(k, n, INF, Bv)
            for yv in N:
                eqs.append(sum((c * y for c, y in zip(coeffs, yv) if y), R.zero))
        roots, allz = _univariate_roots(eqs, R)
        if allz:
            extend_family(INF, f"exponents {k1}, {k2}")
        for b0 in roots:
            record(INF, b0)
    supports = sorted(found.values(), key=lambda s: (not s.is_rational, -len(s.exponents), s.label()))
    return tuple(supports), tuple(dict.fromkeys(families))


def _axis_line(frame: ZariskiFrame, s: Support, k1: int, k2: int):
    X1 = preimage(frame, _phi(k1, frame.n, s.a, s.b))
    X2 = preimage(frame, _phi(k2, frame.n, s.a, s.b))
    if X1 is None or X2 is None:
        raise AssertionError("supported form is not in the plane")
    return _normal(cross(X1, X2)), X1, X2


def _normal(v) -> tuple:
    for c in v:
        if c:
            inv = 1 / c if not isinstance(c, Fraction) else Fraction(1) / c
            return tuple(x * inv for x in v)
    raise ValueError("zero vector")


def _same_point(u, v) -> bool:
    fu = {x.field for x in u if isinstance(x, NFElem) and not x.is_rational()}
    fv = {x.field for x in v if isinstance(x, NFElem) and not x.is_rational()}
    if fu and fv and fu != fv:
        return False
    return not any(cross(list(u), list(v)))


def _pattern(exps: tuple, n: int) -> str | None:
    for e in (set(exps), {n - k for k in exps}):
        if e == {0, n}:
            return "(1 : t^n : g)"
        if e == {1, n}:
            return "(t : t^n : g)"
    return None


def _pencil(frame: ZariskiFrame, s: Support) -> dict:
    ks = s.exponents[:3]
    X = [preimage(frame, _phi(k, frame.n, s.a, s.b)) for k in ks]
    P = [[X[c][r] for c in range(3)] for r in range(3)]
    forms = inverse(P)  # row i gives the coordinate y_i of x in the basis X
    p = [ks[1] - ks[2], ks[2] - ks[0], ks[0] - ks[1]]
    g = gcd(gcd(abs(p[0]), abs(p[1])), abs(p[2]))
    p = [x // g for x in p]
    if next(x for x in p if x) < 0:
        p = [-x for x in p]
    return {
        "forms": [[_val_str(c) for c in row] for row in forms],
        "exponents": p,
        "support_exponents": list(ks),
        "equation": _pencil_str(forms, p),
    }


def _pencil_str(forms, p) -> str:
    def lin(row):
        parts = []
        for c, name in zip(row, ("x0", "x1", "x2")):
            if c:
                parts.append(f"({_val_str(c)})*{name}" if c != 1 else name)
        return "(" + " + ".join(parts) + ")"

    pos = " * ".join(f"{lin(forms[i])}^{p[i]}" for i in range(3) if p[i] > 0)
    neg = " * ".join(f"{lin(forms[i])}^{-p[i]}" for i in range(3) if p[i] < 0)
    return f"alpha*{pos} - beta*{neg}"


def monomiality_class(frame: ZariskiFrame) -> MonomialityClass:
    supports, families = _supports(frame)
    monos = [s for s in supports if len(s.exponents) >= 3]
    if monos:
        s = monos[0]
        return MonomialityClass("Monomial", supports, families, pencil=_pencil(frame, s))
    if not supports and not families:
        return MonomialityClass("None", (), ())
    if not supports:
        return MonomialityClass("QuasiMonomialOnly", (), families)
    checks = _cusp_checks(frame)
    bad = [c for c in checks if c["status"] == "exceptional"]
    exceptional = None
    line = pattern = None
    if checks:
        # X is almost C-hyperbolic as soon as one cusp normalization avoids the
        # exceptional case; only when every cusp lands there is a line left over
        exceptional = len(bad) == len(checks)
    if exceptional:
        line = bad[0]["line"]
        pattern = bad[0]["pattern"]
    return MonomialityClass(
        "QuasiMonomialOnly", supports, families, exceptional=exceptional, line=line, pattern=pattern,
        cusp_checks=tuple(_check_json(c) for c in checks),
    )


def _cusp_checks(frame: ZariskiFrame) -> list:
    """For each cusp family of C*, the torus fixing the cusp and its Tschirnhausen point.

    Status is "no orbit" when P^2_C holds no two forms supported on that
    pair, "artifact line" when the preimage of the coordinate axis is the
    dual line of a cusp, and "exceptional" otherwise.
    """
    N = projection_center(frame).basis()
    cusps = [(p, branch_at(frame.dual, p).center) for p in _cusp_places(frame.dual)]
    out = []
    for place, _ in cusps:
        norm = normalize_cusp(frame.dual, place)
        m = norm.mobius
        tq = INF if place.is_infinite else m[0][0]
        zs = mobius_value(m, norm.shift)
        exps = _exponents(frame, N, tq, zs)
        rec = {"cusp": place.label(), "fixed_point": zs, "exponents": exps, "line": None, "pattern": None}
        if len(exps) < 2:
            rec["status"] = "no orbit"
        elif len(exps) >= 3:
            rec["status"] = "monomial"
        else:
            s = Support(tq, zs, exps)
            line, _, _ = _axis_line(frame, s, exps[0], exps[1])
            rec["line"] = line
            rec["pattern"] = _pattern(exps, frame.n)
            on_artifact = any(_same_point(line, c) for _, c in cusps)
            rec["status"] = "artifact line" if on_artifact else "exceptional"
        out.append(rec)
    return out


def _check_json(c: dict) -> dict:
    out = {
        "cusp": c["cusp"],
        "fixed_point": _val_str(c["fixed_point"]),
        "exponents": list(c["exponents"]),
        "status": c["status"],
    }
    if c["line"] is not None:
        out["line"] = [_val_str(x) for x in c["line"]]
    if c["pattern"] is not None:
        out["pattern"] = c["pattern"]
    return out


# deep strata oracle --------------------------------------------------------

def _bareiss(m):
    """Determinant of a square matrix of sympy ring elements, fraction free."""
    m = [list(r) for r in m]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if not m[k][k]:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0 * m[0][0]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                m[i][j] = num if prev == 1 else num.exquo(prev)
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def _formal_subres(a: list, b: list, j: int):
    """j-th principal subresultant of coefficient lists (high-to-low) with formal degrees."""
    m, n = len(a) - 1, len(b) - 1
    cols = m + n - j
    rows = []
    zero = a[0] * 0
    for i in range(n - j):
        rows.append([zero] * i + a + [zero] * (cols - m - 1 - i))
    for i in range(m - j):
        rows.append([zero] * i + b + [zero] * (cols - n - 1 - i))
    k = m + n - 2 * j
    return _bareiss([r[:k] for r in rows])


def _moved(a: list, c: int) -> list:
    """Coefficients of f(u + c v, v)."""
    n = len(a) - 1
    out = []
    for i in range(n + 1):
        acc = a[0] * 0
        for j in range(i + 1):
            acc = acc + a[j] * (comb(n - j, i - j) * c ** (i - j))
        out.append(acc)
    return out


def _two_root_equations(frame: ZariskiFrame, xs) -> list:
    """Polynomials in x vanishing exactly where rho(x) has at most two distinct roots.

    Principal subresultants of f_u and f_v with formal degrees vanish
    spuriously when both partials have a root at oo, so the conditions are
    taken for f and three Moebius moves of it; for n <= 6 a form off the
    locus cannot have double roots at all four moved points.
    """
    n = frame.n
    a = [sum((xs[i] * frame.B[i][j] for i in range(3) if frame.B[i][j]), xs[0] * 0) for j in range(n + 1)]
    eqs = []
    for b in (a, list(reversed(a)), _moved(a, 1), _moved(a, -1)):
        fu = [(n - j) * b[j] for j in range(n)]
        fv = [(j + 1) * b[j + 1] for j in range(n)]
        eqs.extend(_formal_subres(fu, fv, j) for j in range(n - 2))
    return eqs


def _root_set(form: BinaryForm):
    """Distinct roots of a form as hashable keys; None if some root lies outside the coefficient field."""
    p = _trim(form.to_affine())
    keys = set()
    if form.infinity_multiplicity() > 0:
        keys.add(("oo",))
    if p.deg() > 0:
        g = poly_gcd_many([p, p.deriv()])
        sq = p.exact_div(g)
        like = next((c for c in sq.c if isinstance(c, NFElem)), Fraction(0))
        roots = _roots_over(sq, like)
        if len(roots) != sq.deg():
            return None
        for r in roots:
            if isinstance(r, NFElem):
                keys.add(("q", r.to_rat()) if r.is_rational() else ("k", r.field.minpoly.c, r.p.c))
            else:
                keys.add(("q", Fraction(r)))
    return frozenset(keys)


def two_root_forms(frame: ZariskiFrame) -> dict | None:
    """Independent cross-check of the monomiality tag via subresultants.

    Finds the finitely many x with rho(x) having at most two distinct roots
    (the vanishing of the principal subresultants of f_u and f_v), groups
    them by root set and counts forms per two-point support.  Returns None
    when the locus is positive dimensional or a root set is not explicit.
    """
    R, Y, X = poly_ring("y,x")
    pts = []
    # chart x2 = 1: x = (X, Y, 1)
    sol = _solve2(_two_root_equations(frame, [X, Y, R.one]), R)
    if sol.fixed_x or sol.fixed_y or sol.curves or sol.everything:
        return None
    for x0, y0 in sol.points:
        pts.append([x0, y0, Fraction(1)])
    # chart x2 = 0, x1 = 1: x = (X, 1, 0)
    polys = [ring_univariate(e, 1) for e in _two_root_equations(frame, [X, R.one, R.zero]) if e]
    if not polys:
        return None
    for x0 in _roots_of(poly_gcd_many(polys)):
        pts.append([x0, Fraction(1), Fraction(0)])
    # the point (1 : 0 : 0)
    e1 = [Fraction(1), Fraction(0), Fraction(0)]
    rs = _root_set(rho(frame, e1))
    if rs is not None and len(rs) <= 2:
        pts.append(e1)
    sets = []
    for x in pts:
        rs = _root_set(rho(frame, x))
        if rs is None:
            return None
        sets.append(rs)
    candidates = {u for u in sets if len(u) == 2}
    singles = [u for u in sets if len(u) == 1]
    for u, v in combinations(singles, 2):
        if u != v:
            candidates.add(u | v)
    best = max((sum(1 for w in sets if w <= u) for u in candidates), default=0)
    tag = "Monomial" if best >= 3 else "QuasiMonomialOnly" if best == 2 else "None"
    return {"tag": tag, "points": len(pts), "largest_group": best}
