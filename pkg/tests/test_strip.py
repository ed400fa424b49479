from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from extpers.strip import (INF, PairDescriptor, StripPoint, apply_T, dist, dist_to_boundary,
                           embed_diag, fauxtan, in_fundamental_domain, nearest_boundary_point,
                           pair_at, poset_leq, region_classify, rho, tile_degree)

P = StripPoint

charts = st.fractions(min_value=-6, max_value=6, max_denominator=6)


@st.composite
def strip_points(draw, k_range=3):
    s = draw(st.sampled_from([-1, 0, 1]))
    k1 = draw(st.integers(-k_range, k_range))
    k2 = s - k1
    c1 = draw(charts)
    c2 = draw(charts)
    if s == 1 and c1 + c2 > 0:
        c1, c2 = -c1, -c2
    if s == -1 and c1 + c2 < 0:
        c1, c2 = -c1, -c2
    return P(k1, k2, c1, c2)


# ------------------------------------------------------------- frozen examples

def test_point_validation():
    with pytest.raises(ValueError):
        P(2, 0, 0, 0)
    with pytest.raises(ValueError):
        P(1, 0, 1, 1)
    with pytest.raises(ValueError):
        P(0, -1, -1, -1)
    with pytest.raises(TypeError):
        P(0, 0, 0.5, 0)
    assert P(1, 0, -2, 2).on_boundary
    assert not P(0, 0, 1, -1).on_boundary


def test_point_text_roundtrip():
    u = P(1, -1, F(-1, 3), 2)
    assert str(u) == "1 -1 -1/3 2/1"
    assert P.parse(str(u)) == u


def test_poset_examples():
    assert poset_leq(P(0, 0, 1, -1), P(0, 0, 0, 0))
    assert not poset_leq(P(0, 0, 0, 1), P(0, 0, 1, 0))
    assert not poset_leq(P(0, 0, 0, 1), P(0, 0, 1, 1))
    assert not poset_leq(P(0, 0, 1, 1), P(0, 0, 0, 1 - F(1, 2)))


def test_T_examples():
    assert apply_T(P(0, 0, 0, 0)) == P(-1, 1, 0, 0)
    u = P(1, -1, F(1, 2), -3)
    assert apply_T(u, 2) == P(-1, 1, F(1, 2), -3)
    assert apply_T(apply_T(u), -1) == u


def test_embed_and_fauxtan():
    assert embed_diag(0) == P(0, 0, 0, 0)
    assert embed_diag(1) == P(0, 0, 1, 1)
    assert fauxtan(0, F(5, 2)) == F(5, 2)
    assert fauxtan(1, F(5, 2)) == F(-5, 2)
    assert fauxtan(2, 7) == 7
    assert fauxtan(-1, 7) == -7


def test_distances():
    assert dist(P(0, 0, 0, 0), P(0, 0, 1, -2)) == 2
    assert dist(P(0, 0, 0, 0), P(1, -1, 0, 0)) == INF
    assert dist_to_boundary(P(1, 0, -3, 1)) == 1
    assert nearest_boundary_point(P(1, 0, -3, 1)) == P(1, 0, -2, 2)
    assert dist_to_boundary(P(0, 0, 5, -5)) == INF
    assert dist_to_boundary(P(1, 0, -2, 2)) == 0


def test_tile_degree_examples():
    assert tile_degree(P(0, 0, -1, 1)) == 0
    assert tile_degree(P(0, 0, 1, -1)) == 1
    assert tile_degree(P(1, -1, 2, -1)) == 2
    assert tile_degree(P(1, -1, -1, 2)) == 1


def test_region_examples():
    assert region_classify(P(0, 0, 1, -1)).kind == "InR"
    r = region_classify(P(1, 0, -1, 0))
    assert (r.kind, r.n, r.shape) == ("Lift", 1, "E1")
    r = region_classify(P(1, -1, 2, -1))
    assert (r.kind, r.n, r.shape, r.variant) == ("Lift", 1, "E3", "GtDiag")
    assert region_classify(P(-1, 1, 0, 0)).kind == "OutsideS"
    assert region_classify(P(0, 0, -1, 1)).kind == "OutsideS"
    assert region_classify(P(1, 0, -2, 2)).kind == "OnBoundary"


def test_rho_examples():
    assert rho(P(0, 0, -1, 1)) == PairDescriptor(F(-1), F(1), None)
    assert rho(P(-1, 0, 2, 1)) == PairDescriptor(-INF, F(1), (F(-2), INF))
    with pytest.raises(ValueError):
        rho(P(0, 0, 1, -1))


def test_pair_at_examples():
    d, n = pair_at(P(0, 0, 3, -2))
    assert n == 1 and (d.i_lo, d.i_hi) == (-INF, INF) and d.gap == (F(-2), F(3))
    d, n = pair_at(P(1, 0, F(-1, 2), -1))
    assert n == 1 and (d.i_lo, d.i_hi) == (-INF, F(1, 2)) and d.gap == (F(-1), INF)
    u = P(0, 0, -1, 1)
    assert pair_at(u) == (rho(u), 0)


# ------------------------------------------------------------- properties

@given(strip_points(), strip_points(), strip_points())
def test_poset_axioms(u, v, w):
    assert poset_leq(u, u)
    if poset_leq(u, v) and poset_leq(v, u):
        assert u == v
    if poset_leq(u, v) and poset_leq(v, w):
        assert poset_leq(u, w)


@given(strip_points(), strip_points())
def test_T_is_automorphism_and_isometry(u, v):
    tu, tv = apply_T(u), apply_T(v)
    assert poset_leq(u, v) == poset_leq(tu, tv)
    assert tu.on_boundary == u.on_boundary
    assert dist(tu, tv) == dist(u, v)
    assert apply_T(tu, -1) == u
    assert apply_T(u, 2) == P(u.k1 - 2, u.k2 + 2, u.c1, u.c2)


@given(strip_points())
def test_tile_degree_shifts(u):
    n = tile_degree(u)
    assert in_fundamental_domain(apply_T(u, n))
    assert tile_degree(apply_T(u)) == n - 1


@given(strip_points())
def test_boundary_levels_agree(u):
    if u.on_boundary:
        a, b = u.fauxtans
        assert a == b


@given(strip_points(k_range=2))
def test_nearest_boundary_attains_distance(u):
    if (u.k1 + u.k2) % 2:
        b = nearest_boundary_point(u)
        assert b.on_boundary and dist(u, b) == dist_to_boundary(u)


@given(strip_points(k_range=1), strip_points(k_range=1))
def test_rho_monotone_and_lattice(u, v):
    if not (in_fundamental_domain(u) and in_fundamental_domain(v)):
        return
    ru, rv = rho(u), rho(v)
    if poset_leq(u, v):
        assert ru.contained_in(rv)
    if u.square == v.square:
        # meet and join of an axis-aligned rectangle, when they stay in D
        meet = P(u.k1, u.k2, max(u.c1, v.c1), min(u.c2, v.c2))
        join = P(u.k1, u.k2, min(u.c1, v.c1), max(u.c2, v.c2))
        if in_fundamental_domain(meet) and in_fundamental_domain(join):
            rm, rj = rho(meet), rho(join)
            assert (rm.i_lo, rm.i_hi) == (max(ru.i_lo, rv.i_lo), min(ru.i_hi, rv.i_hi))
            assert (rj.i_lo, rj.i_hi) == (min(ru.i_lo, rv.i_lo), max(ru.i_hi, rv.i_hi))
            # C shrinks under meets, so its gap grows
            assert rm.gap == (min(ru.gap[0], rv.gap[0]), max(ru.gap[1], rv.gap[1]))
            assert rj.gap == (max(ru.gap[0], rv.gap[0]), min(ru.gap[1], rv.gap[1]))


def _difference_meets_reals(d: PairDescriptor) -> bool:
    if d.c_gap is None:
        return True
    a, b = d.gap
    return a < b and d.i_lo < b and a < d.i_hi


@given(strip_points(k_range=1))
def test_rho_shape(u):
    if not in_fundamental_domain(u):
        return
    d = rho(u)
    if d.c_gap is not None:
        a, b = d.gap
        # C is contained in I
        if a != -INF:
            assert d.i_lo == -INF and a <= d.i_hi
        if b != INF:
            assert d.i_hi == INF and b >= d.i_lo
    assert _difference_meets_reals(d) == (not u.on_boundary)
