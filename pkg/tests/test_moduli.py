import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dualscope.exactforms import INF, squarefree_support, vieta
from dualscope.moduli import (
    cross_ratio,
    cross_ratio_coords,
    h0_coords,
    h0_diagonal_hyperplanes,
    mobius_apply,
    pgl2_normal_form,
    to_standard,
)

F = Fraction
entry = st.integers(-7, 7)
matrices = st.tuples(st.tuples(entry, entry), st.tuples(entry, entry)).filter(
    lambda m: m[0][0] * m[1][1] - m[0][1] * m[1][0] != 0
)
points = st.one_of(st.just(INF), st.fractions(min_value=-9, max_value=9, max_denominator=7))
tuples = st.lists(points, min_size=4, max_size=7, unique=True)


def test_identity_map():
    pts = (F(0), F(3, 2), INF, F(-1))
    assert mobius_apply(((1, 0), (0, 1)), pts) == pts


def test_mobius_moves_infinity():
    assert mobius_apply(((1, 1), (1, 0)), (INF, F(0), F(1))) == (F(1), INF, F(2))


def test_normal_form_examples():
    lam = F(5, 3)
    assert pgl2_normal_form((F(0), F(1), INF, lam)) == (F(0), F(1), INF, lam)
    nf = pgl2_normal_form((F(1), F(2), F(3), F(4)))
    # z -> -(z - 1)/(z - 3) sends 1, 2, 3 to 0, 1, oo and 4 to -3
    assert nf == (F(0), F(1), INF, F(-3))
    assert nf[3] not in (F(0), F(1), INF)


def test_cross_ratio_coordinate_examples():
    assert cross_ratio_coords((F(0), F(1), INF, F(7))) == (F(7),)
    assert cross_ratio_coords((F(0), F(1), INF, F(2), F(3))) == (F(2), F(3))
    assert cross_ratio(F(0), F(1), INF, F(-4)) == F(-4)


def test_coincident_points_are_rejected():
    with pytest.raises(ValueError):
        cross_ratio_coords((F(0), F(1), F(0), F(2)))
    with pytest.raises(ValueError):
        to_standard(F(1), F(1), F(2))


@given(tuples, matrices)
def test_normal_form_is_invariant(pts, m):
    assert pgl2_normal_form(mobius_apply(m, pts)) == pgl2_normal_form(pts)


@given(tuples)
def test_normal_form_is_idempotent(pts):
    nf = pgl2_normal_form(pts)
    assert pgl2_normal_form(nf) == nf


def _inverse(m):
    (a, b), (c, d) = m
    return ((d, -b), (-c, a))


def test_equal_normal_forms_come_from_a_mobius_map():
    rng = random.Random(13)
    for _ in range(50):
        p = tuple(dict.fromkeys(F(rng.randint(-20, 20), rng.randint(1, 4)) for _ in range(5)))
        if len(p) < 4:
            continue
        if rng.random() < 0.5:
            m = ((rng.randint(-5, 5), rng.randint(-5, 5)), (rng.randint(-5, 5), rng.randint(-5, 5)))
            if m[0][0] * m[1][1] == m[0][1] * m[1][0]:
                continue
            q = mobius_apply(m, p)
        else:
            q = tuple(dict.fromkeys(F(rng.randint(-20, 20)) for _ in range(len(p))))
            if len(q) != len(p):
                continue
        same = pgl2_normal_form(p) == pgl2_normal_form(q)
        # the map carrying p to q, if one exists, is standard(q)^-1 o standard(p)
        a, b = to_standard(*p[:3]), _inverse(to_standard(*q[:3]))
        carried = mobius_apply(b, mobius_apply(a, p)) == q
        assert same == carried


@given(st.lists(points, min_size=1, max_size=6), matrices)
def test_vieta_transports_along_mobius_maps(pts, m):
    moved = vieta(list(mobius_apply(m, pts)))
    pulled = vieta(pts).act(_inverse(m))
    assert moved.proportional(pulled)
    assert squarefree_support(moved) == squarefree_support(pulled)


def test_h0_example():
    h = h0_coords([3, 1, -1, -3])
    assert h.y == (F(2), F(4), F(6))
    assert h.z == (F(1, 3), F(2, 3))
    assert h.off_diagonals


def test_h0_chart_errors():
    with pytest.raises(ValueError):
        h0_coords([1, 2, 3])
    with pytest.raises(ValueError):
        h0_coords([1, -2, 1])


def _random_h0(rng, n):
    while True:
        x = [F(rng.randint(-6, 6)) for _ in range(n - 1)]
        x.append(-sum(x))
        if x[0] != x[-1]:
            return x


def test_h0_coords_is_injective_up_to_scale():
    rng = random.Random(17)
    seen = {}
    for _ in range(400):
        x = _random_h0(rng, 5)
        key = h0_coords(x).z
        # normalize by x_1 - x_n so that proportional points share a key
        s = x[0] - x[-1]
        rep = tuple(v / s for v in x)
        assert seen.setdefault(key, rep) == rep


def test_diagonal_hyperplanes_detect_collisions():
    rng = random.Random(19)
    n = 5
    hyps = h0_diagonal_hyperplanes(n)
    pairs = [(0, i + 1) for i in range(n - 1)] + [(i + 1, j + 1) for i in range(n - 1) for j in range(i + 1, n - 1)]
    assert len(hyps) == len(pairs)
    for _ in range(200):
        x = _random_h0(rng, n)
        y = h0_coords(x).y
        for h, (i, j) in zip(hyps, pairs):
            assert (sum(a * b for a, b in zip(h, y)) == 0) == (x[i] == x[j])
