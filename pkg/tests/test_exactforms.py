import itertools
import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from dualscope.exactforms import (
    INF,
    AlgNum,
    BinaryForm,
    Poly,
    count_roots_in_box,
    discriminant,
    form_resultant,
    poly_gcd,
    poly_gcd_many,
    resultant,
    squarefree_support,
    subresultants,
    sylvester,
    vieta,
)
from dualscope.exactforms.linalg import det

t = sympy.Symbol("t")
ints = st.integers(-9, 9)


def polys(max_deg=6):
    return st.lists(ints, min_size=1, max_size=max_deg + 1).map(Poly)


def to_sympy(p: Poly):
    return sum(sympy.Rational(c.numerator, c.denominator) * t**k for k, c in enumerate(p.c))


# gcd ----------------------------------------------------------------------

def test_gcd_examples():
    assert poly_gcd(Poly([0, 0, 1]), Poly([0, 0, 0, 1])) == Poly([0, 0, 1])
    assert poly_gcd(Poly([-1, 0, 1]), Poly([-1, 1])) == Poly([-1, 1])


def test_gcd_of_the_quartic_dual_is_trivial():
    g = poly_gcd_many([Poly([0, 0, -1, 0, 0, 2]), Poly([1, 0, 0, 4]), Poly([0, 2])])
    assert g.deg() == 0


@given(polys(), polys())
def test_gcd_matches_sympy(p, q):
    if p.is_zero() and q.is_zero():
        return
    g = poly_gcd(p, q)
    ref = sympy.gcd(to_sympy(p), to_sympy(q))
    assert g.deg() == sympy.degree(ref, t) if ref != 0 else g.is_zero()


# resultants ---------------------------------------------------------------

def test_resultant_sign_convention():
    p, q = Poly([-1, 1]), Poly([-2, 1])
    assert resultant(p, q) == -1
    assert det(sylvester([1, -1], [1, -2])) == -1


def test_resultant_of_common_root_vanishes():
    assert resultant(Poly([0, 0, 1]), Poly([0, 0, 0, 1])) == 0


@given(polys(5), polys(5))
def test_resultant_matches_sylvester_determinant(p, q):
    if p.deg() < 1 or q.deg() < 1:
        return
    r = resultant(p, q)
    assert r == det(sylvester(list(reversed(p.c)), list(reversed(q.c))))
    # sympy agrees up to sign (it returns +1 for Res(t + 1, t^3))
    assert abs(r) == abs(sympy.resultant(to_sympy(p), to_sympy(q), t))


@given(polys(4), polys(4), polys(4))
def test_resultant_multiplicative(p, q, r):
    if p.is_zero() or q.is_zero() or r.is_zero():
        return
    assert resultant(p * q, r) == resultant(p, r) * resultant(q, r)


def test_form_resultant_detects_common_root_at_infinity():
    f = BinaryForm([0, 1, 1])  # v(u + v)
    g = BinaryForm([0, 1, -1])  # v(u - v)
    assert form_resultant(f, g) == 0
    assert form_resultant(BinaryForm([1, 0, -1]), BinaryForm([1, 0, -4])) != 0


@given(st.lists(ints, min_size=2, max_size=7), st.lists(ints, min_size=2, max_size=7))
def test_form_resultant_matches_the_sylvester_determinant(a, b):
    # leading zeros exercise the determinant route, full degrees the Euclid route
    f, g = BinaryForm(a), BinaryForm(b)
    assert form_resultant(f, g) == det(sylvester(f.a, g.a))


# discriminant -------------------------------------------------------------

def test_discriminant_examples():
    assert discriminant(BinaryForm([0, 1, -1, 0])) != 0  # u v (u - v)
    for n in range(2, 7):
        assert discriminant(BinaryForm([1] + [0] * n)) == 0


def test_discriminant_matches_sympy_on_monic_forms():
    rng = random.Random(3)
    for _ in range(40):
        n = rng.randint(2, 6)
        a = [1] + [rng.randint(-4, 4) for _ in range(n)]
        f = BinaryForm(a)
        ref = sympy.discriminant(sum(c * t ** (n - j) for j, c in enumerate(a)), t)
        assert discriminant(f) == ref


def test_discriminant_zero_iff_repeated_root():
    for n in range(2, 4):
        for a in itertools.product(range(-3, 4), repeat=n + 1):
            f = BinaryForm(a)
            if f.is_zero():
                continue
            repeated = max(squarefree_support(f).multiplicities()) >= 2
            assert (discriminant(f) == 0) == repeated, a


def test_discriminant_zero_iff_repeated_root_degree_five_sample():
    rng = random.Random(5)
    for _ in range(300):
        n = rng.randint(4, 5)
        a = [rng.randint(-3, 3) for _ in range(n + 1)]
        if rng.random() < 0.3:
            a[0] = a[1] = 0
        f = BinaryForm(a)
        if f.is_zero():
            continue
        repeated = max(squarefree_support(f).multiplicities()) >= 2
        assert (discriminant(f) == 0) == repeated, a


# subresultants ------------------------------------------------------------

def test_subresultant_examples():
    s = subresultants(Poly([-1, 0, 1]), Poly([0, 2]))
    assert s[0] != 0
    s = subresultants(Poly([0, 0, 1]), Poly([0, 2]))
    assert s[0] == 0 and s[1] != 0


def test_subresultants_see_a_square_factor():
    s2 = Poly([-2, 0, 1])  # t^2 - 2, squarefree
    h = Poly([1, 1, 0, 1])
    p = s2 * s2 * h
    sres = subresultants(p, p.deriv())
    assert sres[0] == 0 and sres[1] == 0 and sres[2] != 0


def test_subresultant_gcd_agreement():
    rng = random.Random(11)
    for _ in range(200):
        common = Poly([rng.randint(-9, 9) for _ in range(rng.randint(1, 3))])
        p = Poly([rng.randint(-9, 9) for _ in range(rng.randint(1, 6))])
        q = Poly([rng.randint(-9, 9) for _ in range(rng.randint(1, 6))])
        if rng.random() < 0.6 and not common.is_zero():
            p, q = p * common, q * common
        if p.is_zero() or q.is_zero():
            continue
        if p.deg() < q.deg():
            p, q = q, p
        if q.deg() < 1:
            continue
        sres = subresultants(p, q)
        lead = 0
        while sres[lead] == 0:
            lead += 1
        assert poly_gcd(p, q).deg() == lead


# root profiles and vieta --------------------------------------------------

def test_profile_examples():
    f = BinaryForm.from_affine(Poly([0, 0, -1, 1]), 3)  # t^2 (t - 1)
    assert squarefree_support(f).as_dict() == {Fraction(0): 2, Fraction(1): 1}
    un = BinaryForm([1, 0, 0, 0])
    assert squarefree_support(un).as_dict() == {Fraction(0): 3}
    g = BinaryForm([1, -6, 11, -6])
    assert squarefree_support(g).as_dict() == {Fraction(1): 1, Fraction(2): 1, Fraction(3): 1}


def test_vieta_examples():
    u1, v1, u2, v2 = map(Fraction, (2, 3, -5, 7))
    f = vieta([(u1, v1), (u2, v2)])
    assert f.proportional(BinaryForm([v1 * v2, -(u1 * v2 + u2 * v1), u1 * u2]))
    assert vieta([0, 0, 0, 0]) == BinaryForm([1, 0, 0, 0, 0])
    assert vieta([1, 2, 3]) == BinaryForm([1, -6, 11, -6])


def test_vieta_infinity_is_leading_zero():
    f = vieta([INF, INF, 1])
    assert f.infinity_multiplicity() == 2
    assert squarefree_support(f).as_dict() == {INF: 2, Fraction(1): 1}


point = st.one_of(st.just(INF), st.fractions(min_value=-5, max_value=5, max_denominator=6))


@given(st.lists(point, min_size=1, max_size=8))
def test_vieta_round_trip(pts):
    f = vieta(pts)
    expected = {}
    for p in pts:
        expected[p] = expected.get(p, 0) + 1
    assert squarefree_support(f).as_dict() == expected


def test_vieta_matches_sympy_expansion():
    z = sympy.Symbol("z")
    for roots in itertools.product(range(-2, 3), repeat=3):
        f = vieta(list(roots))
        ref = sympy.Poly(sympy.prod(z - r for r in roots), z).all_coeffs()
        assert list(f.a) == ref


# algebraic numbers --------------------------------------------------------

@pytest.mark.parametrize("coeffs", [[-2, 0, 1], [-1, -1, 0, 1], [1, 0, 1], [2, 0, 0, 0, 1], [-3, 1, 0, 0, 0, 1]])
def test_algnum_refinement_keeps_unique_root(coeffs):
    p = Poly(coeffs)
    for i in range(p.deg()):
        a = AlgNum(p, i)
        b = a.refine(2**10)
        (ax, ay), (bx, by) = a.box
        (cx, cy), (dx, dy) = b.box
        assert ax <= cx and bx >= dx and ay <= cy and by >= dy
        assert count_roots_in_box(p, b.box) == 1
        w_old = max(bx - ax, by - ay)
        w_new = max(dx - cx, dy - cy)
        assert w_new <= w_old / 2**10 or w_old == 0


def test_algnum_approximation_is_a_root():
    a = AlgNum(Poly([-2, 0, 1]), 1)
    assert abs(a.approx() - 2**0.5) < 1e-9
