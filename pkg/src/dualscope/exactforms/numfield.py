"""Arithmetic in simple algebraic extensions Q[a]/(m(a)).

Elements are reduced polynomials in the generator.  The modulus is assumed
irreducible; inversion fails loudly otherwise.
"""
from __future__ import annotations

from fractions import Fraction

from sympy.polys.domains import QQ
from sympy.polys.euclidtools import dup_invert
from sympy.polys.polyerrors import NotInvertible

from .elim import from_dup, to_dup
from .poly import Poly


class NumberField:
    def __init__(self, minpoly: Poly, name: str = "a"):
        if minpoly.deg() < 1:
            raise ValueError("minimal polynomial must have positive degree")
        self.minpoly = minpoly.monic()
        self.name = name
        self.degree = minpoly.deg()

    def __eq__(self, other):
        return isinstance(other, NumberField) and self.minpoly == other.minpoly

    def __hash__(self):
        return hash(("NF", self.minpoly))

    def __repr__(self):
        return f"NumberField({self.minpoly.to_str(self.name)})"

    def __call__(self, x) -> "NFElem":
        if isinstance(x, NFElem):
            if x.field != self:
                raise ValueError("element of another field")
            return x
        if isinstance(x, Poly):
            return NFElem(self, x % self.minpoly)
        return NFElem(self, Poly([x]))

    def gen(self) -> "NFElem":
        return NFElem(self, Poly([0, 1]) % self.minpoly)

    def zero(self):
        return NFElem(self, Poly())

    def one(self):
        return NFElem(self, Poly([1]))


class NFElem:
    __slots__ = ("field", "p")

    def __init__(self, field: NumberField, p: Poly):
        self.field = field
        self.p = p

    def _other(self, x):
        if isinstance(x, NFElem):
            if x.field is not self.field and x.field != self.field:
                raise ValueError("mixing elements of different number fields")
            return x.p
        if isinstance(x, (int, Fraction)):
            return Poly([x])
        return None

    def __add__(self, x):
        o = self._other(x)
        if o is None:
            return NotImplemented
        return NFElem(self.field, self.p + o)

    __radd__ = __add__

    def __sub__(self, x):
        o = self._other(x)
        if o is None:
            return NotImplemented
        return NFElem(self.field, self.p - o)

    def __rsub__(self, x):
        o = self._other(x)
        if o is None:
            return NotImplemented
        return NFElem(self.field, o - self.p)

    def __neg__(self):
        return NFElem(self.field, -self.p)

    def __mul__(self, x):
        o = self._other(x)
        if o is None:
            return NotImplemented
        if o.deg() <= 0:
            return NFElem(self.field, self.p.scale(o.coeff(0)))
        return NFElem(self.field, (self.p * o) % self.field.minpoly)

    __rmul__ = __mul__

    def inverse(self) -> "NFElem":
        if not self.p:
            raise ZeroDivisionError("inverse of zero in a number field")
        if self.p.deg() == 0:
            return NFElem(self.field, Poly([Fraction(1) / self.p.coeff(0)]))
        try:
            inv = dup_invert(to_dup(self.p), to_dup(self.field.minpoly), QQ)
        except NotInvertible:
            raise ArithmeticError("modulus is reducible; element not invertible") from None
        return NFElem(self.field, from_dup(inv))

    def __truediv__(self, x):
        o = self._other(x)
        if o is None:
            return NotImplemented
        return self * NFElem(self.field, o).inverse()

    def __rtruediv__(self, x):
        o = self._other(x)
        if o is None:
            return NotImplemented
        return NFElem(self.field, o) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out, base = self.field.one(), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __bool__(self):
        return bool(self.p)

    def __eq__(self, x):
        o = self._other(x)
        if o is None:
            return NotImplemented
        return self.p == o

    def __hash__(self):
        if self.p.deg() <= 0:
            return hash(self.p.coeff(0))
        return hash((self.field, self.p))

    def is_rational(self) -> bool:
        return self.p.deg() <= 0

    def to_rat(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("element is not rational")
        return self.p.coeff(0)

    def __repr__(self):
        return "[" + self.p.to_str(self.field.name) + "]"


def lift_rational(x):
    """Return x as a Fraction when it is a rational number field element."""
    if isinstance(x, NFElem) and x.is_rational():
        return x.to_rat()
    return x
