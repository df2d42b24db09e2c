"""Dense univariate polynomials with exact coefficients.

Coefficients are stored low-to-high.  They are usually ``Fraction``s but any
exact field element with the usual operators works (number field elements
from :mod:`numfield` are used this way).
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence


def as_rat(x) -> Fraction:
    """Parse an int, Fraction or a string like ``"3/4"`` into a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        s = x.strip()
        if not s:
            raise ValueError("empty rational string")
        return Fraction(s)
    raise TypeError(f"not an exact rational: {x!r}")


def rat_str(x: Fraction) -> str:
    """Canonical string form, ``"p"`` or ``"p/q"``."""
    x = as_rat(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def _coerce(c):
    if isinstance(c, (int, str)) and not isinstance(c, bool):
        return as_rat(c)
    return c


class Poly:
    """Immutable polynomial in one variable; the zero polynomial is empty."""

    __slots__ = ("c",)

    def __init__(self, coeffs: Iterable = ()):
        c = [_coerce(x) for x in coeffs]
        while c and not c[-1]:
            c.pop()
        self.c = tuple(c)

    # construction helpers
    @staticmethod
    def monomial(k: int, coeff=1) -> "Poly":
        return Poly([0] * k + [coeff])

    @staticmethod
    def const(a) -> "Poly":
        return Poly([a])

    @staticmethod
    def from_roots(roots: Sequence) -> "Poly":
        p = Poly([1])
        for r in roots:
            p = p * Poly([-r, 1])
        return p

    X: "Poly"

    # basic properties
    def deg(self) -> int:
        return len(self.c) - 1

    def is_zero(self) -> bool:
        return not self.c

    def lc(self):
        return self.c[-1] if self.c else Fraction(0)

    def coeff(self, k: int):
        return self.c[k] if 0 <= k < len(self.c) else Fraction(0)

    def __bool__(self):
        return bool(self.c)

    def __len__(self):
        return len(self.c)

    def __iter__(self):
        return iter(self.c)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.c == other.c
        if isinstance(other, (int, Fraction)):
            return self.c == Poly([other]).c
        return NotImplemented

    def __hash__(self):
        return hash(self.c)

    def __repr__(self):
        if not self.c:
            return "Poly(0)"
        terms = []
        for k, a in enumerate(self.c):
            if not a:
                continue
            if k == 0:
                terms.append(f"{a}")
            elif k == 1:
                terms.append(f"({a})*t")
            else:
                terms.append(f"({a})*t^{k}")
        return "Poly(" + " + ".join(terms) + ")"

    # arithmetic
    def __neg__(self):
        return Poly([-a for a in self.c])

    def __add__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return other
        a, b = self.c, other.c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, x in enumerate(b):
            out[i] = out[i] + x
        return Poly(out)

    __radd__ = __add__

    def __sub__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return _lift(other) - self

    def __mul__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return other
        a, b = self.c, other.c
        if not a or not b:
            return Poly()
        if len(b) == 1:
            s = b[0]
            return Poly([x * s for x in a])
        if len(a) == 1:
            s = a[0]
            return Poly([s * x for x in b])
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                out[i + j] = out[i + j] + x * y
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out, base = Poly([1]), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def scale(self, s):
        return Poly([x * s for x in self.c])

    def divmod(self, other: "Poly"):
        """Euclidean division over the coefficient field."""
        if not other.c:
            raise ZeroDivisionError("division by the zero polynomial")
        r = list(self.c)
        db = other.deg()
        inv = 1 / other.lc() if not isinstance(other.lc(), Fraction) else Fraction(1) / other.lc()
        if len(r) <= db:
            return Poly(), self
        q = [0] * (len(r) - db)
        for k in range(len(r) - 1, db - 1, -1):
            a = r[k]
            if not a:
                continue
            f = a * inv
            q[k - db] = f
            for j, b in enumerate(other.c):
                r[k - db + j] = r[k - db + j] - f * b
        return Poly(q), Poly(r[:db])

    def __floordiv__(self, other):
        return self.divmod(_lift(other))[0]

    def __mod__(self, other):
        return self.divmod(_lift(other))[1]

    def exact_div(self, other: "Poly") -> "Poly":
        q, r = self.divmod(other)
        if r.c:
            raise ArithmeticError("inexact polynomial division")
        return q

    def divides(self, other: "Poly") -> bool:
        """True if self divides other."""
        if not self.c:
            return not other.c
        return not other.divmod(self)[1].c

    # calculus and substitution
    def __call__(self, x):
        acc = 0
        for a in reversed(self.c):
            acc = acc * x + a
        if isinstance(acc, int):
            acc = Fraction(acc)
        return acc

    def deriv(self, k: int = 1) -> "Poly":
        p = self
        for _ in range(k):
            p = Poly([i * a for i, a in enumerate(p.c)][1:])
        return p

    def taylor(self, a) -> list:
        """Coefficients of p(a + h) as a list indexed by powers of h."""
        # repeated synthetic division
        c = list(self.c)
        out = []
        while c:
            acc = []
            r = 0
            for x in reversed(c):
                r = r * a + x
                acc.append(r)
            out.append(acc[-1] if not isinstance(acc[-1], int) else Fraction(acc[-1]))
            c = list(reversed(acc[:-1]))
        return out

    def shift(self, a) -> "Poly":
        """p(t + a)."""
        return Poly(self.taylor(a))

    def compose(self, q: "Poly") -> "Poly":
        acc = Poly()
        for a in reversed(self.c):
            acc = acc * q + Poly([a])
        return acc

    def reverse(self, n: int | None = None) -> "Poly":
        """t^n p(1/t); n defaults to deg p."""
        if n is None:
            n = self.deg()
        if self.deg() > n:
            raise ValueError("formal degree smaller than degree")
        c = list(self.c) + [0] * (n + 1 - len(self.c))
        return Poly(reversed(c))

    def monic(self) -> "Poly":
        if not self.c:
            return self
        lc = self.lc()
        if lc == 1:
            return self
        inv = 1 / lc if not isinstance(lc, Fraction) else Fraction(1) / lc
        return Poly([a * inv for a in self.c])

    def valuation(self) -> int:
        """Order of vanishing at t = 0 (infinite for zero is reported as -1)."""
        for k, a in enumerate(self.c):
            if a:
                return k
        return -1

    def is_rational(self) -> bool:
        return all(isinstance(a, Fraction) for a in self.c)

    def primitive(self) -> "Poly":
        """Integer primitive part with positive leading coefficient (rational input)."""
        if not self.c:
            return self
        from math import gcd, lcm

        den = 1
        for a in self.c:
            den = lcm(den, a.denominator)
        ints = [int(a * den) for a in self.c]
        g = 0
        for x in ints:
            g = gcd(g, x)
        if ints[-1] < 0:
            g = -g
        return Poly([Fraction(x // g) for x in ints])

    def to_str(self, var: str = "t") -> str:
        if not self.c:
            return "0"
        parts = []
        for k in range(len(self.c) - 1, -1, -1):
            a = self.c[k]
            if not a:
                continue
            mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
            if isinstance(a, Fraction):
                neg = a < 0
                mag = -a if neg else a
                s = rat_str(mag)
                if mono and mag == 1:
                    body = mono
                elif mono:
                    body = f"{s}*{mono}" if mag.denominator == 1 else f"({s})*{mono}"
                else:
                    body = s
                parts.append(("-" if neg else "+", body))
            else:
                parts.append(("+", f"({a})*{mono}" if mono else f"({a})"))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


def _lift(x):
    if isinstance(x, Poly):
        return x
    if isinstance(x, (int, Fraction, str)):
        return Poly([x])
    if hasattr(x, "field"):  # number field element
        return Poly([x])
    return NotImplemented


Poly.X = Poly([0, 1])
T = Poly.X


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """Monic gcd; gcd(0, 0) = 0."""
    a, b = p, q
    if a.is_rational() and b.is_rational() and max(a.deg(), b.deg()) > 24:
        from .elim import fast_gcd

        return fast_gcd(a, b)
    while b.c:
        a, b = b, a.divmod(b)[1]
    return a.monic()


def poly_gcd_many(polys: Iterable[Poly]) -> Poly:
    g = Poly()
    for p in polys:
        g = poly_gcd(g, p)
        if g.deg() == 0:
            break
    return g


def poly_lcm(p: Poly, q: Poly) -> Poly:
    if not p.c or not q.c:
        return Poly()
    return (p * q).exact_div(poly_gcd(p, q)).monic()


def xgcd(p: Poly, q: Poly):
    """Return (g, s, t) with s*p + t*q = g monic."""
    r0, r1 = p, q
    s0, s1 = Poly([1]), Poly()
    t0, t1 = Poly(), Poly([1])
    while r1.c:
        qq, r = r0.divmod(r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - qq * s1
        t0, t1 = t1, t0 - qq * t1
    if not r0.c:
        return r0, s0, t0
    inv = 1 / r0.lc() if not isinstance(r0.lc(), Fraction) else Fraction(1) / r0.lc()
    return r0.scale(inv), s0.scale(inv), t0.scale(inv)


def multiplicity(p: Poly, f: Poly) -> int:
    """Largest k with f^k dividing p (p nonzero, deg f >= 1)."""
    if not p.c:
        raise ValueError("multiplicity in the zero polynomial")
    k = 0
    while True:
        q, r = p.divmod(f)
        if r.c:
            return k
        p, k = q, k + 1


def remove_factor(p: Poly, f: Poly) -> Poly:
    """Divide out every power of the common part of p and f."""
    while True:
        g = poly_gcd(p, f)
        if g.deg() <= 0:
            return p
        p = p.exact_div(g)


def squarefree_part(p: Poly) -> Poly:
    if p.deg() <= 0:
        return p.monic()
    return p.exact_div(poly_gcd(p, p.deriv())).monic()


def squarefree_decomposition(p: Poly) -> list:
    """Yun's algorithm: list of (factor, multiplicity), factors monic, pairwise coprime."""
    out = []
    if p.deg() <= 0:
        return out
    a = p.monic()
    b = a.deriv()
    c = poly_gcd(a, b)
    w = a.exact_div(c)
    y = b.exact_div(c)
    z = y - w.deriv()
    i = 1
    while w.deg() > 0:
        g = poly_gcd(w, z)
        if g.deg() > 0:
            out.append((g, i))
        w = w.exact_div(g)
        y = z.exact_div(g)
        z = y - w.deriv()
        i += 1
    return out


def interpolate(xs: Sequence, ys: Sequence) -> Poly:
    """Newton interpolation through (xs[i], ys[i]); xs pairwise distinct."""
    xs = [as_rat(x) if isinstance(x, int) else x for x in xs]
    coef = list(ys)
    n = len(xs)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    p = Poly([coef[-1]])
    for i in range(n - 2, -1, -1):
        p = p * Poly([-xs[i], 1]) + Poly([coef[i]])
    return p
