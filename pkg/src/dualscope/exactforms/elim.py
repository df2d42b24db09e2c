"""Bridge to sympy's dense polynomial kernels.

Used for the heavy lifting that is plain infrastructure: factorization over
Q, gcds of large polynomials, complex root isolation, and multivariate
resultants.  Everything here converts to and from :class:`Poly`.
"""
from __future__ import annotations

from fractions import Fraction

from sympy.polys.domains import QQ, ZZ
from sympy.polys.euclidtools import dup_gcd
from sympy.polys.factortools import dup_factor_list
from sympy.polys.rings import ring
from sympy.polys.rootisolation import (
    dup_count_complex_roots,
    dup_count_real_roots,
    dup_isolate_all_roots_sqf,
)

from .poly import Poly


def _q(x) -> Fraction:
    return Fraction(int(x.numerator), int(x.denominator))


def to_dup(p: Poly, dom=QQ):
    """High-to-low list over QQ (or ZZ when p is integral and dom is ZZ)."""
    if dom is ZZ:
        return [ZZ(int(a)) for a in reversed(p.c)]
    return [QQ(a.numerator, a.denominator) for a in reversed(p.c)]


def from_dup(f) -> Poly:
    return Poly([_q(a) for a in reversed(f)])


def fast_gcd(p: Poly, q: Poly) -> Poly:
    if not p.c and not q.c:
        return Poly()
    return from_dup(dup_gcd(to_dup(p), to_dup(q), QQ)).monic()


def factor_rational(p: Poly):
    """Irreducible factorization over Q.

    Returns (constant, [(factor, multiplicity)]) with integer primitive
    factors of positive leading coefficient, sorted by (degree, coefficients).
    """
    if not p.c:
        raise ValueError("cannot factor the zero polynomial")
    c, facs = dup_factor_list(to_dup(p), QQ)
    out = []
    const = _q(c)
    for f, k in facs:
        fp = from_dup(f)
        prim = fp.primitive()
        const *= (fp.lc() / prim.lc()) ** k
        out.append((prim, k))
    out.sort(key=lambda e: (e[0].deg(), [(a.numerator, a.denominator) for a in e[0].c]))
    return const, out


def isolate_roots(p: Poly, eps: Fraction | None = None):
    """Isolating boxes for the roots of a squarefree rational polynomial.

    Real roots come first (ascending) as boxes with zero height, then the
    non-real ones in sympy's order.  A box is ((re_lo, im_lo), (re_hi, im_hi)).
    """
    f = to_dup(p.primitive(), ZZ)
    kw = {}
    if eps is not None:
        kw["eps"] = QQ(eps.numerator, eps.denominator)
    real, cplx = dup_isolate_all_roots_sqf(f, ZZ, **kw)
    boxes = []
    for item in real:
        a, b = item[0] if isinstance(item[0], tuple) else item
        boxes.append(((_q(a), Fraction(0)), (_q(b), Fraction(0))))
    for (ax, ay), (bx, by) in cplx:
        boxes.append(((_q(ax), _q(ay)), (_q(bx), _q(by))))
    return boxes


def count_roots_in_box(p: Poly, box) -> int:
    (ax, ay), (bx, by) = box
    f = to_dup(p.primitive(), ZZ)
    if ay == 0 and by == 0:
        return int(dup_count_real_roots(f, ZZ, QQ(ax.numerator, ax.denominator), QQ(bx.numerator, bx.denominator)))
    inf = (QQ(ax.numerator, ax.denominator), QQ(ay.numerator, ay.denominator))
    sup = (QQ(bx.numerator, bx.denominator), QQ(by.numerator, by.denominator))
    return int(dup_count_complex_roots(f, ZZ, inf, sup))


# multivariate elimination -------------------------------------------------

def poly_ring(names: str):
    """A sympy sparse polynomial ring over QQ; returns (R, generators...)."""
    return ring(names, QQ)


def lift_univariate(p: Poly, gen):
    """Embed a rational Poly into a sympy ring as a polynomial in ``gen``."""
    acc = gen.ring.zero
    for k, a in enumerate(p.c):
        if a:
            acc += QQ(a.numerator, a.denominator) * gen**k
    return acc


def ring_to_dict(f) -> dict:
    """Sparse ring element -> {exponent tuple: Fraction}."""
    return {tuple(m): _q(c) for m, c in f.terms()}


def ring_univariate(f, index: int = 0) -> Poly:
    """Convert a ring element depending on one generator into a Poly."""
    d = {}
    for m, c in f.terms():
        if any(e for i, e in enumerate(m) if i != index):
            raise ValueError("element is not univariate in the requested generator")
        d[m[index]] = _q(c)
    if not d:
        return Poly()
    out = [Fraction(0)] * (max(d) + 1)
    for k, v in d.items():
        out[k] = v
    return Poly(out)


def resultant_first(f, g):
    """Resultant with respect to the ring's first generator."""
    return f.resultant(g)


# roots over a simple extension --------------------------------------------

def roots_in_extension(minpoly: Poly, coeffs) -> list:
    """Roots lying in Q[a]/(minpoly) of sum_k coeffs[k](a) y^k.

    ``coeffs`` are low-to-high Polys in the generator a; each root comes
    back as a reduced Poly in a.  Factorization over the extension is done
    by sympy, which is slow for large fields, so callers keep this rare.
    """
    from sympy import CRootOf, Symbol
    from sympy.polys.factortools import dup_ext_factor

    x = Symbol("x")
    expr = sum(QQ.to_sympy(QQ(c.numerator, c.denominator)) * x**k for k, c in enumerate(minpoly.c))
    K = QQ.algebraic_field(CRootOf(expr, 0))
    mod = K.mod.to_list() if hasattr(K.mod, "to_list") else list(K.mod.rep)

    def anp(p: Poly):
        rep = [QQ(a.numerator, a.denominator) for a in reversed(p.c)]
        return K.dtype(rep, mod, QQ)

    f = [anp(c) for c in reversed(list(coeffs))]
    while f and not f[0]:
        f.pop(0)
    if len(f) < 2:
        return []
    _, facs = dup_ext_factor(f, K)
    out = []
    for g, _k in facs:
        if len(g) == 2:
            r = -g[1] / g[0]
            rep = r.to_list() if hasattr(r, "to_list") else list(r.rep)
            out.append(Poly([_q(a) for a in reversed(rep)]))
    return out
