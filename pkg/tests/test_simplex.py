import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from extpers.homology import homology_of_pair
from extpers.simplex import (Complex, booklet_skeleton, build_complex, closure,
                             gadget_horn, gadget_sphere_cylinder, glue_along_edge,
                             level_subdivision, pair_intersect, preimage_pair)
from extpers.strip import INF, PairDescriptor

from generators import random_complex


def betti(simplices, sub=frozenset(), q=2, top=3):
    return [homology_of_pair((simplices, sub), p, q).dim for p in range(top + 1)]


def test_build_complex_examples():
    p = build_complex([("0", 0), ("1", 1)], [["0", "1"]])
    assert p.complex.count(0) == 2 and p.complex.count(1) == 1
    p = build_complex([(i, 0) for i in "abc"], [["a", "b"], ["b", "c"], ["a", "c"]])
    assert (p.complex.count(1), p.complex.count(2)) == (3, 0)
    p = build_complex([(i, 0) for i in "abc"], [["a", "b", "c"]])
    assert (p.complex.count(0), p.complex.count(1), p.complex.count(2)) == (3, 3, 1)
    assert p.sub == frozenset()


def test_build_complex_errors():
    with pytest.raises(ValueError):
        build_complex([("a", 0), ("a", 1)], [])
    with pytest.raises(ValueError):
        build_complex([("a", 0)], [["a", "z"]])
    with pytest.raises(ValueError):
        Complex(("a", "b"), frozenset({(0, 1), (0,)}))


def test_level_subdivision_examples():
    edge = build_complex([("a", 0), ("b", 2)], [["a", "b"]])
    out = level_subdivision(edge, [1])
    assert out.complex.count(1) == 2 and F(1) in out.values
    tri = build_complex([("a", 0), ("b", 0), ("c", 2)], [["a", "b", "c"]])
    out = level_subdivision(tri, [1])
    assert out.complex.count(2) == 3
    assert out.complex.euler_characteristic() == 1
    assert betti(out.complex.simplices)[0] == 1
    same = level_subdivision(tri, [5, -5])
    assert same == tri


def test_preimage_examples():
    edge = level_subdivision(build_complex([("a", 0), ("b", 2)], [["a", "b"]]), [1])
    k, l = preimage_pair(edge, PairDescriptor(F(0), F(1), None))
    assert len(k) == 3 and l == frozenset()
    k, l = preimage_pair(edge, PairDescriptor(-INF, INF, (F(0), F(2))))
    assert k == edge.complex.simplices
    assert l == {(0,), (1,)}
    k, l = preimage_pair(edge, PairDescriptor(F(5), F(6), None))
    assert k == l == frozenset()
    raw = build_complex([("a", 0), ("b", 2)], [["a", "b"]])
    with pytest.raises(ValueError):
        preimage_pair(raw, PairDescriptor(F(0), F(1), None))


def test_pair_intersect_examples():
    x = closure([(0, 1), (1, 2)])
    y = closure([(1, 2), (2, 3)])
    b = closure([(3,)])
    assert pair_intersect((x, ()), (y, b)) == (x & y, x & b)
    a = closure([(0,)])
    assert pair_intersect((x, a), (x, ())) == (x, a)


def test_horns():
    h = gadget_horn(2, "top")
    assert set(s for s in h.simplices if len(s) == 2) == {(0, 2), (1, 2)}
    h = gadget_horn(3, "bottom")
    assert (1, 2, 3) not in h.simplices and (1, 2) in h.simplices
    assert h.count(2) == 3
    for m in (2, 3, 4):
        for which in ("top", "bottom", 1):
            assert betti(gadget_horn(m, which).simplices, top=m) == [1] + [0] * m
    with pytest.raises(ValueError):
        gadget_horn(0)


def test_sphere_cylinder():
    c = gadget_sphere_cylinder(1)
    assert (c.count(0), c.count(1), c.count(2)) == (6, 12, 6)
    assert c.euler_characteristic() == 0
    for n in (1, 2, 3):
        c = gadget_sphere_cylinder(n)
        b = betti(c.simplices, top=n + 1)
        assert b[0] == 1 and b[n] == 1 and sum(b) == 2
        assert (0, 2 * (n + 1) + 1) in c.simplices


def test_booklet_skeleton():
    c = booklet_skeleton([])
    assert c.simplices == closure([(0, 1)])
    c = booklet_skeleton(["a", "b", "c"])
    assert len(c.vertices) == 8
    assert c.euler_characteristic() == 1
    assert betti(c.simplices, top=2) == [1, 0, 0]
    for p in "abc":
        e = tuple(sorted((c.index_of(f"0:{p}"), c.index_of(f"1:{p}"))))
        assert e in c.simplices
    with pytest.raises(ValueError):
        booklet_skeleton([1, 1])


def test_glue_along_edge():
    base = booklet_skeleton(["x"])
    e = (base.index_of("0:x"), base.index_of("1:x"))
    edge = Complex(("0", "1"), closure([(0, 1)]))
    glued, _ = glue_along_edge(base, e, edge, (0, 1))
    assert glued == base
    cyl = gadget_sphere_cylinder(1)
    glued, vmap = glue_along_edge(base, e, cyl, (0, 3), tag="p")
    before, after = betti(base.simplices), betti(glued.simplices)
    assert after[0] == before[0] and after[1] == before[1] + 1
    assert vmap[0] == e[0] and vmap[3] == e[1]
    with pytest.raises(ValueError):
        glue_along_edge(base, e, cyl, (1, 4))


def test_glue_order_commutes():
    base = booklet_skeleton(["x", "y"])
    ex = (base.index_of("0:x"), base.index_of("1:x"))
    ey = (base.index_of("0:y"), base.index_of("1:y"))
    h = gadget_horn(2)
    one, _ = glue_along_edge(base, ex, h, (0, 2), "x")
    one, _ = glue_along_edge(one, ey, h, (0, 2), "y")
    two, _ = glue_along_edge(base, ey, h, (0, 2), "y")
    two, _ = glue_along_edge(two, ex, h, (0, 2), "x")
    relabel = lambda c: {frozenset(c.vertices[i] for i in s) for s in c.simplices}
    assert relabel(one) == relabel(two)


# ------------------------------------------------------------- properties

@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10 ** 6), st.sampled_from([2, 3]))
def test_subdivision_preserves_homology(seed, q):
    rng = random.Random(seed)
    p = random_complex(rng, rng.randint(3, 10), relative=True)
    levels = [F(rng.randint(-6, 6), rng.choice([1, 2, 3])) for _ in range(rng.randint(1, 3))]
    out = level_subdivision(p, levels)
    assert betti(p.complex.simplices, p.sub, q) == betti(out.complex.simplices, out.sub, q)
    # every edge sits inside a single gap of the level set
    for s in out.complex.simplices:
        if len(s) == 2:
            lo, hi = sorted(out.values[v] for v in s)
            assert not any(lo < t < hi for t in levels)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_preimage_monotone(seed):
    rng = random.Random(seed)
    p = random_complex(rng, rng.randint(3, 8), relative=True)
    cuts = sorted({F(rng.randint(-4, 4), 2) for _ in range(4)})
    sp = level_subdivision(p, cuts)
    pick = lambda: rng.choice(cuts + [INF, -INF])
    a, b = sorted((pick(), pick()))
    a2, b2 = min(a, pick()), max(b, pick())
    g1, g2 = sorted((pick(), pick()))
    small = PairDescriptor(a, b, (min(g1, a), max(g2, b)))
    big = PairDescriptor(a2, b2, (min(g1, a), max(g2, b)))
    k1, l1 = preimage_pair(sp, small)
    k2, l2 = preimage_pair(sp, big)
    assert k1 <= k2 and l1 <= l2


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_pair_intersect_laws(seed):
    rng = random.Random(seed)
    ambient = sorted(closure([tuple(sorted(rng.sample(range(6), 3))) for _ in range(5)]))

    def sub():
        return closure(s for s in ambient if rng.random() < 0.3)

    def pair():
        x = sub()
        return x, closure(s for s in x if rng.random() < 0.4)

    p, q, r = pair(), pair(), pair()
    assert pair_intersect(p, q) == pair_intersect(q, p)
    union = lambda u, v: (u[0] | v[0], u[1] | v[1])
    inter = lambda u, v: (u[0] & v[0], u[1] & v[1])
    assert pair_intersect(p, union(q, r)) == union(pair_intersect(p, q), pair_intersect(p, r))
    assert pair_intersect(p, inter(q, r)) == inter(pair_intersect(p, q), pair_intersect(p, r))
