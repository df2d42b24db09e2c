"""Binary forms, resultants, discriminants and the Vieta map.

Convention: a binary form of degree n is stored as a_0..a_n and means
sum a_j u^(n-j) v^j.  Its roots are points (u:v) of P^1, read in the chart
z = u/v, so the affine equation is a_0 z^n + ... + a_n = 0.  The point
(1:0) is infinity; it is a root of multiplicity k exactly when
a_0 = ... = a_(k-1) = 0 and a_k != 0.  In particular u^n, i.e. (1:0:...:0),
has the single root z = 0 with multiplicity n.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterable, Sequence

from .linalg import det
from .poly import Poly, as_rat, poly_gcd, squarefree_decomposition


class _Infinity:
    """The point (1:0) of P^1."""

    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self):
        return "oo"

    def __reduce__(self):
        return (_Infinity, ())


INF = _Infinity()


def p1(x) -> tuple:
    """Homogeneous pair (u, v) for a finite value, INF, or a pair."""
    if x is INF:
        return (Fraction(1), Fraction(0))
    if isinstance(x, tuple):
        u, v = x
        if not u and not v:
            raise ValueError("(0:0) is not a point of P^1")
        return (u if not isinstance(u, int) else Fraction(u), v if not isinstance(v, int) else Fraction(v))
    if isinstance(x, (int, str)):
        x = as_rat(x)
    return (x, Fraction(1))


def p1_value(pt):
    """Inverse of :func:`p1`: finite value u/v or INF."""
    u, v = pt
    if not v:
        return INF
    return u / v


def _conv(a: Sequence, b: Sequence) -> list:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return out


class BinaryForm:
    __slots__ = ("n", "a")

    def __init__(self, coeffs: Iterable, n: int | None = None):
        a = tuple(as_rat(x) if isinstance(x, (int, str)) else x for x in coeffs)
        if n is not None and len(a) != n + 1:
            raise ValueError(f"degree {n} form needs {n + 1} coefficients, got {len(a)}")
        if not a:
            raise ValueError("a binary form needs at least one coefficient")
        self.a = a
        self.n = len(a) - 1

    @staticmethod
    def from_affine(p: Poly, n: int) -> "BinaryForm":
        """Homogenize p(z) to degree n: a_j = coefficient of z^(n-j)."""
        if p.deg() > n:
            raise ValueError("polynomial degree exceeds the form degree")
        return BinaryForm([p.coeff(n - j) for j in range(n + 1)])

    def to_affine(self) -> Poly:
        """f(z, 1) as a polynomial in z."""
        return Poly(reversed(self.a))

    def is_zero(self) -> bool:
        return not any(self.a)

    def __eq__(self, other):
        return isinstance(other, BinaryForm) and self.a == other.a

    def __hash__(self):
        return hash(self.a)

    def __repr__(self):
        return "BinaryForm(" + ", ".join(str(x) for x in self.a) + ")"

    def proportional(self, other: "BinaryForm") -> bool:
        """Equality as points of P^n."""
        if self.n != other.n:
            return False
        for i in range(self.n + 1):
            for j in range(i + 1, self.n + 1):
                if self.a[i] * other.a[j] != self.a[j] * other.a[i]:
                    return False
        return not self.is_zero() and not other.is_zero()

    def __call__(self, u, v):
        acc = Fraction(0)
        for j, x in enumerate(self.a):
            acc = acc + x * u ** (self.n - j) * v**j
        return acc

    def infinity_multiplicity(self) -> int:
        k = 0
        while k <= self.n and not self.a[k]:
            k += 1
        return k

    def d_u(self) -> "BinaryForm":
        return BinaryForm([(self.n - j) * self.a[j] for j in range(self.n)])

    def d_v(self) -> "BinaryForm":
        return BinaryForm([j * self.a[j] for j in range(1, self.n + 1)])

    def act(self, m) -> "BinaryForm":
        """f(alpha u + beta v, gamma u + delta v) for m = ((alpha, beta), (gamma, delta))."""
        (al, be), (ga, de) = m
        lin1 = [al, be]
        lin2 = [ga, de]
        pw1 = [[Fraction(1)]]
        pw2 = [[Fraction(1)]]
        for _ in range(self.n):
            pw1.append(_conv(pw1[-1], lin1))
            pw2.append(_conv(pw2[-1], lin2))
        out = [Fraction(0)] * (self.n + 1)
        for j, x in enumerate(self.a):
            if not x:
                continue
            term = _conv(pw1[self.n - j], pw2[j])
            for i, y in enumerate(term):
                out[i] = out[i] + x * y
        return BinaryForm(out)

    def times(self, other: "BinaryForm") -> "BinaryForm":
        return BinaryForm(_conv(self.a, other.a))


# resultants ---------------------------------------------------------------

def sylvester(a: Sequence, b: Sequence) -> list:
    """Sylvester matrix of two coefficient lists given high-to-low.

    Rows of a come first, so det = lc(a)^deg(b) * prod b(roots of a).
    """
    m, n = len(a) - 1, len(b) - 1
    size = m + n
    rows = []
    for i in range(n):
        rows.append([Fraction(0)] * i + list(a) + [Fraction(0)] * (size - m - 1 - i))
    for i in range(m):
        rows.append([Fraction(0)] * i + list(b) + [Fraction(0)] * (size - n - 1 - i))
    return rows


def resultant(p: Poly, q: Poly):
    """Classical resultant det Syl(p, q) = lc(p)^deg q * prod q(roots of p).

    Res(t-1, t-2) = -1 under this convention.  One zero input gives 0.
    """
    if not p.c and not q.c:
        raise ValueError("resultant of two zero polynomials")
    if not p.c or not q.c:
        return Fraction(0)
    sign = 1
    acc = Fraction(1)
    a, b = p, q
    while True:
        m, n = a.deg(), b.deg()
        if n == 0:
            r = acc * b.lc() ** m
            return r if sign > 0 else -r
        if m == 0:
            r = acc * a.lc() ** n
            return r if sign > 0 else -r
        r = a % b
        if not r.c:
            return Fraction(0)
        k = r.deg()
        if (m * n) % 2:
            sign = -sign
        acc = acc * b.lc() ** (m - k)
        a, b = b, r


def resultant_formal(p: Poly, q: Poly, m: int, n: int):
    """Resultant of p, q viewed with formal degrees m >= deg p, n >= deg q."""
    if p.deg() == m and q.deg() == n:
        return resultant(p, q)
    a = [p.coeff(m - j) for j in range(m + 1)]
    b = [q.coeff(n - j) for j in range(n + 1)]
    return det(sylvester(a, b))


def form_resultant(f: BinaryForm, g: BinaryForm):
    """Resultant of binary forms with their formal degrees (vanishes iff a common root in P^1)."""
    if f.n == 0 and g.n == 0:
        return Fraction(1)
    if f.n and g.n and f.a[0] and g.a[0]:
        # full formal degrees: same Sylvester matrix, but Euclid needs far fewer inversions
        return resultant(f.to_affine(), g.to_affine())
    return det(sylvester(f.a, g.a))


def subresultants(p: Poly, q: Poly) -> list:
    """Principal subresultant coefficients sres_0, ..., sres_{deg q}.

    The last entry is lc(q)^(deg p - deg q) and is included so that
    deg gcd(p, q) equals the number of leading zero entries.
    """
    m, n = p.deg(), q.deg()
    if m < n:
        raise ValueError("subresultants need deg p >= deg q")
    if n < 0:
        raise ValueError("subresultants of a zero polynomial")
    a = list(reversed(p.c))
    b = list(reversed(q.c))
    out = []
    for j in range(n + 1):
        cols = m + n - j
        rows = []
        for i in range(n - j):
            rows.append([Fraction(0)] * i + a + [Fraction(0)] * (cols - m - 1 - i))
        for i in range(m - j):
            rows.append([Fraction(0)] * i + b + [Fraction(0)] * (cols - n - 1 - i))
        k = m + n - 2 * j
        out.append(det([r[:k] for r in rows]))
    return out


def discriminant(f: BinaryForm):
    """Discriminant of a binary form of degree n >= 2.

    Computed as (-1)^(n(n-1)/2) Res(f_u, f_v) / n^(n-2); homogeneous of
    degree 2n-2 in the coefficients and equal to lc^(2n-2) prod (z_i - z_j)^2
    for forms with a_0 != 0.
    """
    n = f.n
    if n < 2:
        raise ValueError("discriminant needs degree >= 2")
    r = form_resultant(f.d_u(), f.d_v())
    r = r / Fraction(n) ** (n - 2)
    if (n * (n - 1) // 2) % 2:
        r = -r
    return r


# Vieta map ------------------------------------------------------------------

def vieta(points: Sequence) -> BinaryForm:
    """Binary form whose roots are the given points of P^1 (with repetition).

    Each point (u_i : v_i) contributes the linear factor v_i u - u_i v, so
    finite points give a_j = (-1)^j sigma_j with a_0 = 1.
    """
    if not points:
        raise ValueError("vieta needs at least one point")
    acc = [Fraction(1)]
    for x in points:
        u, v = p1(x)
        acc = _conv(acc, [v, -u])
    return BinaryForm(acc)


# root profiles -------------------------------------------------------------

class AlgNum:
    """A root of an irreducible rational polynomial, fixed by an isolating box."""

    __slots__ = ("minpoly", "index", "_box")

    def __init__(self, minpoly: Poly, index: int, box=None):
        self.minpoly = minpoly.primitive()
        self.index = index
        self._box = box

    @property
    def box(self):
        if self._box is None:
            from .elim import isolate_roots

            self._box = isolate_roots(self.minpoly)[self.index]
        return self._box

    @property
    def degree(self) -> int:
        return self.minpoly.deg()

    def is_real(self) -> bool:
        (_, ay), (_, by) = self.box
        return ay == 0 and by == 0

    def refine(self, factor: int = 2**10) -> "AlgNum":
        """Shrink the box by at least ``factor`` while keeping its unique root."""
        from .elim import isolate_roots

        (ax, ay), (bx, by) = self.box
        width = max(bx - ax, by - ay)
        target = width / factor if width else Fraction(1, factor)
        eps = target
        real = self.is_real()
        for _ in range(60):
            cand = []
            for box in isolate_roots(self.minpoly, eps=eps):
                # closed boxes: a real root can sit on the edge of a non-real root's box
                if (box[0][1] == 0 and box[1][1] == 0) != real:
                    continue
                nb = _intersect(box, self.box)
                if nb is not None:
                    cand.append(nb)
            if len(cand) == 1:
                (cx, cy), (dx, dy) = cand[0]
                if max(dx - cx, dy - cy) <= target:
                    return AlgNum(self.minpoly, self.index, cand[0])
            eps = eps / 2
        raise ArithmeticError("box refinement did not converge")

    def approx(self) -> complex:
        (ax, ay), (bx, by) = self.refine(2**20).box
        return complex(float((ax + bx) / 2), float((ay + by) / 2))

    def __eq__(self, other):
        return isinstance(other, AlgNum) and self.minpoly == other.minpoly and self.index == other.index

    def __hash__(self):
        return hash((self.minpoly, self.index))

    def __repr__(self):
        return f"AlgNum({self.minpoly.to_str('t')}, #{self.index})"

    def sort_key(self):
        return (self.minpoly.deg(), tuple(self.minpoly.c), self.index)


def _intersect(b1, b2):
    (ax, ay), (bx, by) = b1
    (cx, cy), (dx, dy) = b2
    lo = (max(ax, cx), max(ay, cy))
    hi = (min(bx, dx), min(by, dy))
    if lo[0] > hi[0] or lo[1] > hi[1]:
        return None
    return (lo, hi)


def _root_key(r):
    if r is INF:
        return (2, 0)
    if isinstance(r, AlgNum):
        return (1, r.sort_key())
    return (0, r)


class RootProfile:
    """Multiset of roots in P^1 with multiplicities."""

    __slots__ = ("entries",)

    def __init__(self, entries: Iterable):
        merged = {}
        for r, m in entries:
            if m <= 0:
                raise ValueError("multiplicities must be positive")
            if isinstance(r, (int, str)):
                r = as_rat(r)
            merged[r] = merged.get(r, 0) + m
        self.entries = tuple(sorted(merged.items(), key=lambda e: _root_key(e[0])))

    @property
    def degree(self) -> int:
        return sum(m for _, m in self.entries)

    def roots(self) -> list:
        return [r for r, _ in self.entries]

    def multiplicities(self) -> list:
        return sorted((m for _, m in self.entries), reverse=True)

    def as_dict(self) -> dict:
        return dict(self.entries)

    def __eq__(self, other):
        return isinstance(other, RootProfile) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return "RootProfile({" + ", ".join(f"{r}: {m}" for r, m in self.entries) + "})"


def squarefree_support(f: BinaryForm) -> RootProfile:
    """Full root multiset of a nonzero rational binary form, infinity included."""
    if f.is_zero():
        raise ValueError("the zero form has no root profile")
    from .elim import factor_rational

    k = f.infinity_multiplicity()
    entries = []
    if k:
        entries.append((INF, k))
    aff = Poly(reversed(f.a[k:]))
    if aff.deg() > 0:
        _, facs = factor_rational(aff)
        for g, mult in facs:
            if g.deg() == 1:
                entries.append((-g.coeff(0) / g.coeff(1), mult))
            else:
                for i in range(g.deg()):
                    entries.append((AlgNum(g, i), mult))
    return RootProfile(entries)


def multiplicity_pattern(f: BinaryForm) -> list:
    """Sorted multiplicities of the distinct roots (works over any exact field)."""
    if f.is_zero():
        raise ValueError("the zero form has no roots")
    k = f.infinity_multiplicity()
    out = [k] if k else []
    aff = Poly(reversed(f.a[k:]))
    for g, i in squarefree_decomposition(aff):
        out.extend([i] * g.deg())
    return sorted(out, reverse=True)


def distinct_roots(f: BinaryForm) -> int:
    return len(multiplicity_pattern(f))


def binomial_form(k: int, n: int) -> BinaryForm:
    """e_k as a form: the monomial u^(n-k) v^k."""
    return BinaryForm([Fraction(int(j == k)) for j in range(n + 1)])


def rnc_dual_coeffs(z, n: int) -> list:
    z0, z1 = p1(z)
    return [(-1) ** k * comb(n, k) * z0**k * z1 ** (n - k) for k in range(n + 1)]
