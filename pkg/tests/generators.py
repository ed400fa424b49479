"""Seeded random inputs shared by the test modules."""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Optional, Tuple

from extpers.diagram import Diagram
from extpers.matching import check_admissible
from extpers.simplex import PLPair, build_complex, closure
from extpers.strip import StripPoint, region_classify

OCTAHEDRON = [(0, 2, 4), (0, 2, 5), (0, 3, 4), (0, 3, 5), (1, 2, 4), (1, 2, 5), (1, 3, 4), (1, 3, 5)]
TETRA_BOUNDARY = [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]


def rational(rng: random.Random, lo: int = -3, hi: int = 3, dens=(1, 2, 3)) -> Fraction:
    d = rng.choice(dens)
    return Fraction(rng.randint(lo * d, hi * d), d)


def random_complex(rng: random.Random, n_vertices: int = 7, max_dim: int = 2, relative: bool = False) -> PLPair:
    """Random closed complex on ``n_vertices`` vertices; connected via a spanning path."""
    n = n_vertices
    tops = [(i, i + 1) for i in range(n - 1)]
    for _ in range(rng.randint(0, n)):
        k = rng.randint(2, max_dim + 1)
        if k <= n:
            tops.append(tuple(sorted(rng.sample(range(n), k))))
    values = [(str(i), rational(rng)) for i in range(n)]
    sub = []
    if relative:
        sub = [s for s in closure(tops) if len(s) <= 2 and rng.random() < 0.15]
    return build_complex(values, [[str(v) for v in s] for s in tops], [[str(v) for v in s] for s in sub])


def sphere_complex(rng: random.Random, max_vertices: int = 12, relative: bool = False):
    """A 2-sphere plus random extras, with a cover cutting the sphere into two disks.

    Returns ``(pair, (X0, X1))``.
    """
    octa = rng.random() < 0.6
    base = OCTAHEDRON if octa else TETRA_BOUNDARY
    nb = 6 if octa else 4
    n = rng.randint(nb, max_vertices)
    tops = list(base)
    for v in range(nb, n):
        k = rng.choice([1, 1, 2])
        nbrs = rng.sample(range(v), k)
        tops.append(tuple(sorted(nbrs + [v])))
    if octa:
        piece0 = [s for s in base if 0 in s]
        piece1 = [s for s in base if 1 in s]
    else:
        piece0 = [s for s in base if 3 not in s]
        piece1 = [s for s in base if 3 in s]
    for s in tops[len(base):]:
        (piece0 if rng.random() < 0.5 else piece1).append(s)
    values = [(str(i), rational(rng, -2, 2)) for i in range(n)]
    sub = []
    if relative:
        sub = [s for s in closure(tops) if len(s) == 1 and rng.random() < 0.2]
    lab = lambda ss: [[str(v) for v in s] for s in ss]
    pair = build_complex(values, lab(tops), lab(sub))
    index = {lab_: i for i, lab_ in enumerate(pair.complex.vertices)}
    remap = lambda ss: closure(tuple(index[str(v)] for v in s) for s in ss)
    x0, x1 = remap(piece0), remap(piece1)
    x0 |= {(i,) for i in range(n) if (i,) not in x0 | x1}
    return pair, (x0, x1)


def perturb(rng: random.Random, pair: PLPair, size: int = 1) -> Tuple[Fraction, ...]:
    return tuple(v + rational(rng, -size, size, (1, 2, 4)) for v in pair.values)


# ---------------------------------------------------------------- diagrams

# squares of the realizable side up to tile degree 2, grouped by parity of k1 + k2
EVEN_SQUARES = [(1, -1), (2, -2)]
ODD_SQUARES = [(1, 0), (0, -1), (2, -1), (1, -2)]


def _chart_for_level(k: int, level: Fraction) -> Fraction:
    return level if k % 2 == 0 else -level


def random_point_in_window(rng: random.Random, square, a1: Fraction, a2: Fraction) -> Optional[StripPoint]:
    """Random point of ``square`` with both levels in ``[a2, a1]``, or None if rejected."""
    k1, k2 = square
    span = a1 - a2
    l1 = a2 + span * Fraction(rng.randint(0, 6), 6)
    l2 = a2 + span * Fraction(rng.randint(0, 6), 6)
    try:
        u = StripPoint(k1, k2, _chart_for_level(k1, l1), _chart_for_level(k2, l2))
    except ValueError:
        return None
    if u.on_boundary or region_classify(u).kind != "Lift":
        return None
    return u


def random_interior_diagram(rng: random.Random, n_points: int) -> Diagram:
    """Interior points in the centre square and its neighbours; not necessarily admissible."""
    pts = []
    for _ in range(n_points):
        sq = rng.choice([(0, 0), (1, -1), (1, 0), (0, -1)])
        for _ in range(50):
            try:
                u = StripPoint(sq[0], sq[1], rational(rng, -2, 2), rational(rng, -2, 2))
            except ValueError:
                continue
            if not u.on_boundary:
                pts.append(u)
                break
    return Diagram.from_points(pts)


def random_admissible(rng: random.Random, n_points: int = 4, allow_boundary: bool = False) -> Diagram:
    a2 = rational(rng, -3, 0)
    a1 = a2 + Fraction(rng.randint(2, 12), 2)
    pts = [StripPoint(0, 0, a1, a2)]
    while len(pts) < n_points + 1:
        sq = rng.choice(EVEN_SQUARES + ODD_SQUARES)
        u = random_point_in_window(rng, sq, a1, a2)
        if u is not None:
            pts.append(u)
            if rng.random() < 0.15:
                pts.append(u)
    if allow_boundary:
        t = a2 + (a1 - a2) / 2
        pts.append(StripPoint(1, 0, -t, t) if rng.random() < 0.5 else StripPoint(0, -1, t, -t))
    d = Diagram.from_points(pts)
    assert check_admissible(d).ok, d
    return d


def nearby_admissible(rng: random.Random, mu: Diagram) -> Diagram:
    """Admissible diagram at finite distance from ``mu``: even-square points move, odd ones may vanish or appear."""
    for _ in range(200):
        a = next(p for p in mu if p.square == (0, 0))
        a1 = a.c1 + Fraction(rng.randint(0, 2), 2)
        a2 = a.c2 - Fraction(rng.randint(0, 2), 2)
        pts = [StripPoint(0, 0, a1, a2)]
        ok = True
        for u in mu.interior().copies():
            if u.square == (0, 0):
                continue
            if (u.k1 + u.k2) % 2 and rng.random() < 0.3:
                continue
            for _ in range(20):
                try:
                    v = StripPoint(u.k1, u.k2, u.c1 + rational(rng, -1, 1, (2, 4)), u.c2 + rational(rng, -1, 1, (2, 4)))
                except ValueError:
                    continue
                if not v.on_boundary and region_classify(v).kind == "Lift" and all(a2 <= x <= a1 for x in v.fauxtans):
                    pts.append(v)
                    break
            else:
                ok = False
        if rng.random() < 0.5:
            extra = random_point_in_window(rng, rng.choice(ODD_SQUARES), a1, a2)
            if extra is not None:
                pts.append(extra)
        d = Diagram.from_points(pts)
        if ok and check_admissible(d).ok:
            return d
    raise RuntimeError("could not build a nearby admissible diagram")


def four_point_diagram() -> Diagram:
    """Central point, two horns and a cylinder, in the style of the standard booklet figure."""
    return Diagram.from_points([
        StripPoint(0, 0, 2, -2),
        StripPoint(1, 0, -1, Fraction(-1, 2)),
        StripPoint(0, -1, Fraction(3, 2), 1),
        StripPoint(1, -1, -1, 1),
    ])
