import random
from fractions import Fraction as F

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from extpers.diagram import Diagram
from extpers.homology import rank_mod
from extpers.rish import (axiom_suite, build_context, diagram_of, disjoint_union,
                          evaluate_map, evaluate_space, extract_diagram, grid_points)
from extpers.simplex import build_complex
from extpers.strip import StripPoint as P, apply_T, poset_leq, tile_degree

from generators import random_complex

EDGE = build_complex([("a", -1), ("b", 1)], [["a", "b"]])
SQUARE = build_complex([("a", -1), ("b", 0), ("c", 1), ("d", 0)],
                       [["a", "b"], ["b", "c"], ["c", "d"], ["d", "a"]])


def test_context_examples():
    ctx = build_context(EDGE)
    assert ctx.criticals == (-1, 1)
    assert ctx.ladder == (-2, -1, 0, 1, 2)
    point = build_complex([("a", 3)], [])
    assert len(build_context(point).ladder) == 3
    tri = build_complex([("a", 0), ("b", 1), ("c", 2)], [["a", "b", "c"]])
    assert build_context(tri).n_max == 3


def test_space_examples():
    ctx = build_context(EDGE)
    assert evaluate_space(ctx, P(0, 0, 1, -1)).dim == 1
    assert evaluate_space(ctx, P(0, 0, -1, 1)).dim == 1
    assert evaluate_space(ctx, P(1, 0, -1, 1)).dim == 0
    with pytest.raises(ValueError):
        evaluate_space(ctx, P(0, 0, F(1, 3), -1))


def test_map_examples():
    ctx = build_context(SQUARE, 3)
    u = P(0, 0, 1, -1)
    m = evaluate_map(ctx, u, u)
    assert np.array_equal(m.matrix, np.eye(m.source_dim, dtype=np.int64))
    # the essential component reaches from tile 1 into the fundamental domain
    m = evaluate_map(ctx, u, P(0, 0, -1, 1))
    assert tile_degree(u) == 1 and m.rank == 1
    # beyond T(u) the map is zero
    far = P(-1, 1, -2, 2)
    assert poset_leq(u, far) and not poset_leq(far, apply_T(u))
    assert evaluate_map(ctx, u, far).is_zero()
    with pytest.raises(ValueError):
        evaluate_map(ctx, P(0, 0, -1, 1), u)


def test_diagram_examples():
    assert diagram_of(EDGE) == {P(0, 0, 1, -1): 1}
    assert diagram_of(build_complex([("a", 3)], [])) == {P(0, 0, 3, 3): 1}
    expected = {P(0, 0, 1, -1): 1, P(1, -1, -1, 1): 1}
    for q in (2, 3):
        ctx = build_context(SQUARE, q)
        assert extract_diagram(ctx) == expected
        assert extract_diagram(ctx, support_only=False) == expected


def test_axiom_examples():
    two, _, _ = disjoint_union(EDGE, EDGE.with_values((0, 2)))
    assert diagram_of(two) == diagram_of(EDGE) + diagram_of(EDGE.with_values((0, 2)))
    whole = SQUARE.with_sub(SQUARE.complex.simplices)
    assert diagram_of(whole) == Diagram()
    ctx = build_context(whole)
    assert all(ctx.space(u).dim == 0 for u in grid_points(ctx))
    report = axiom_suite(SQUARE, q=3, other=EDGE, max_points=60)
    assert report.ok, report.summary()


@settings(max_examples=15)
@given(st.integers(0, 10 ** 6))
def test_support_and_degree_window(seed):
    rng = random.Random(seed)
    p = random_complex(rng, rng.randint(2, 6))
    ctx = build_context(p)
    dgm = extract_diagram(ctx)
    assert extract_diagram(ctx, support_only=False) == dgm
    assert all(u.k1 >= 0 and u.k2 <= 0 and not u.on_boundary for u in dgm)
    # one tile past the window carries nothing
    top = ctx.n_max + 1
    assert all(ctx.space(u).dim == 0 for u in grid_points(ctx, top) if tile_degree(u) == top)


@settings(max_examples=10)
@given(st.integers(0, 10 ** 6))
def test_nested_images(seed):
    rng = random.Random(seed)
    ctx = build_context(random_complex(rng, rng.randint(2, 6), relative=True), q=rng.choice([2, 3]))
    for v in rng.sample(grid_points(ctx), 25):
        if v.on_boundary:
            continue
        above = [c for c in ctx.chart_ladder(v.k1) if c > v.c1]
        prev = None
        for x in above:
            try:
                u = P(v.k1, v.k2, x, v.c2)
            except ValueError:
                break
            m = ctx.map(u, v).matrix
            if prev is not None:
                # image at the farther sample sits inside the nearer one
                assert rank_mod(np.hstack([prev, m]), ctx.q) == rank_mod(prev, ctx.q)
            prev = m


@settings(max_examples=8)
@given(st.integers(0, 10 ** 6))
def test_field_independence_small(seed):
    rng = random.Random(seed)
    p = random_complex(rng, rng.randint(2, 6), max_dim=1)
    assert diagram_of(p, 2) == diagram_of(p, 3)
