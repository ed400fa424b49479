"""Realizing diagrams and matchings by explicit complexes and functions.

Each point of an admissible diagram gets a small gadget (an edge, a horn or a
sphere-times-interval) whose diagram is that single point.  The gadgets are
glued along the fore edges of a booklet whose spine carries the central
point.  Moving every point inside its own square only changes the vertex
values, which is how a matching becomes a pair of functions on one complex.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .diagram import Diagram
from .homology import homology_of_pair
from .matching import (Matching, bottleneck_distance, check_admissible, matching_norm,
                       repair_matching)
from .rish import diagram_of
from .simplex import (Complex, PLPair, booklet_skeleton, closure, gadget_horn,
                      gadget_sphere_cylinder, glue_along_edge)
from .strip import Region, StripPoint, region_classify

__all__ = [
    "LiftGadget",
    "Representation",
    "Booklet",
    "Realization",
    "RoundTripReport",
    "lift_point",
    "represent",
    "build_booklet",
    "transport_function",
    "realize_matching",
    "verify_roundtrip",
]


@dataclass(frozen=True)
class LiftGadget:
    """Gadget for one point: complex, attaching edge ``j``, retraction ``r`` to the edge, and end values.

    ``r[v]`` is 0 or 1 and the function is ``b0`` or ``b1`` accordingly.  The
    relative part ``sub`` is the attaching edge, except for the central
    point, whose lift is the bare edge relative to nothing.
    """

    point: StripPoint
    region: Region
    complex: Complex
    sub: frozenset
    j: Tuple[int, int]
    r: Tuple[int, ...]
    b0: Fraction
    b1: Fraction

    @property
    def values(self) -> Tuple[Fraction, ...]:
        return tuple(self.b1 if side else self.b0 for side in self.r)

    def pair(self) -> PLPair:
        return PLPair(self.complex, self.sub, self.values)

    @property
    def shape_key(self):
        return (self.region.kind, self.region.n, self.region.shape)


def _shape_region(u: StripPoint) -> Region:
    """Region deciding the gadget shape; a boundary point borrows its square's."""
    region = region_classify(u)
    if region.kind != "OnBoundary":
        return region
    nudge = -1 if u.k1 + u.k2 == 1 else 1
    return region_classify(StripPoint(u.k1, u.k2, u.c1 + nudge, u.c2))


def lift_point(u: StripPoint) -> LiftGadget:
    region = _shape_region(u)
    if region.kind == "OutsideS":
        raise ValueError(f"{u!r} has no lift: it lies outside the realizable region")
    lo, hi = sorted(u.fauxtans)
    if region.kind == "InR":
        edge = Complex(("0", "1"), closure([(0, 1)]))
        return LiftGadget(u, region, edge, frozenset(), (0, 1), (0, 1), u.c2, u.c1)
    n = region.n
    if region.shape in ("E1", "E2"):
        top = region.shape == "E1"
        cx = gadget_horn(n + 1, "top" if top else "bottom")
        r = tuple(int(k == n + 1) if top else int(k >= 1) for k in range(n + 2))
        j = (0, n + 1)
    else:
        cx = gadget_sphere_cylinder(n)
        j = (0, 2 * (n + 1) + 1)
        if region.variant == "LeqDiag":
            r = tuple(int(i == n + 1) for i in range(n + 2) for _ in (0, 1))
        else:
            r = tuple(l for _ in range(n + 2) for l in (0, 1))
    assert r[j[0]] == 0 and r[j[1]] == 1
    if u.on_boundary:
        assert lo == hi
    return LiftGadget(u, region, cx, closure([j]), j, r, lo, hi)


@dataclass(frozen=True)
class Representation:
    """Indexed points with a distinguished central index ``s0``."""

    points: Tuple[StripPoint, ...]
    s0: int

    def diagram(self) -> Diagram:
        return Diagram.from_points(self.points)


def represent(d: Diagram) -> Representation:
    ok = check_admissible(d)
    if not ok.ok:
        raise ValueError(f"diagram is not admissible: {ok.reason} ({ok.witness!r})")
    points = d.copies()
    s0 = next(i for i, p in enumerate(points) if p.square == (0, 0))
    return Representation(points, s0)


@dataclass(frozen=True)
class Booklet:
    """Assembled complex with the skeleton, the per-page gluing maps and the retraction onto the skeleton."""

    pair: PLPair
    representation: Representation
    skeleton: frozenset
    page_maps: Dict[int, Tuple[int, ...]]
    retraction: Tuple[int, ...]

    def page_table(self) -> List[Tuple[int, StripPoint]]:
        return [(s, self.representation.points[s]) for s in sorted(self.page_maps)]


def build_booklet(w: Representation) -> Booklet:
    ok = check_admissible(w.diagram())
    if not ok.ok:
        raise ValueError(f"representation is not admissible: {ok.reason}")
    pages = [s for s in range(len(w.points)) if s != w.s0]
    cx = booklet_skeleton(pages)
    skeleton = frozenset(cx.simplices)
    centre = w.points[w.s0]
    values: List[Optional[Fraction]] = [None] * len(cx.vertices)
    values[0], values[1] = centre.c2, centre.c1
    retraction = list(range(len(cx.vertices)))
    page_maps = {}
    for s in pages:
        g = lift_point(w.points[s])
        e0, e1 = cx.index_of(f"0:{s}"), cx.index_of(f"1:{s}")
        values[e0], values[e1] = g.b0, g.b1
        cx, vmap = glue_along_edge(cx, (e0, e1), g.complex, g.j, tag=f"p{s}")
        for gv, new in enumerate(vmap):
            if new >= len(values):
                values.append(g.values[gv])
                retraction.append(e1 if g.r[gv] else e0)
        page_maps[s] = vmap
    pair = PLPair(cx, frozenset(), tuple(values))
    return Booklet(pair, w, skeleton, page_maps, tuple(retraction))


def transport_function(built: Booklet, w2: Representation, phi: Sequence[int]) -> Tuple[Fraction, ...]:
    """Values of the booklet of ``w2`` pulled back to ``built`` along the index bijection ``phi``."""
    w1 = built.representation
    if sorted(phi) != list(range(len(w2.points))) or len(phi) != len(w1.points):
        raise ValueError("phi must be a bijection between the index sets")
    if phi[w1.s0] != w2.s0:
        raise ValueError("phi must send the central index to the central index")
    values = list(built.pair.values)
    centre = w2.points[w2.s0]
    values[0], values[1] = centre.c2, centre.c1
    for s, vmap in built.page_maps.items():
        g1, g2 = lift_point(w1.points[s]), lift_point(w2.points[phi[s]])
        if g1.shape_key != g2.shape_key or g1.complex != g2.complex:
            raise ValueError(f"page {s}: {w1.points[s]!r} and {w2.points[phi[s]]!r} need different gadgets")
        for gv, vertex in enumerate(vmap):
            values[vertex] = g2.values[gv]
    return tuple(values)


def sup_distance(f: Sequence[Fraction], g: Sequence[Fraction]) -> Fraction:
    return max((abs(a - b) for a, b in zip(f, g)), default=Fraction(0))


@dataclass
class Realization:
    pair: PLPair
    f: Tuple[Fraction, ...]
    g: Tuple[Fraction, ...]
    matching: Matching
    booklet: Booklet
    certificate: Dict[str, object] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        c = self.certificate
        return bool(c["norm_equals_distance"] and c["f_diagram_ok"] and c["g_diagram_ok"])


def realize_matching(mu: Diagram, nu: Diagram, q: int = 2) -> Realization:
    """Complex with two functions whose diagrams are ``mu`` and ``nu`` at sup-distance ``d_B``."""
    for name, d in (("first", mu), ("second", nu)):
        ok = check_admissible(d)
        if not ok.ok:
            raise ValueError(f"{name} diagram is not admissible: {ok.reason}")
    value, m = bottleneck_distance(mu, nu)
    if m is None:
        raise ValueError("diagrams are at infinite bottleneck distance")
    m = repair_matching(m, mu, nu)
    pairs = m.pairs()
    s0 = next(i for i, (a, b) in enumerate(pairs) if a.square == (0, 0))
    w1 = Representation(tuple(a for a, _ in pairs), s0)
    w2 = Representation(tuple(b for _, b in pairs), s0)
    booklet = build_booklet(w1)
    f = booklet.pair.values
    g = transport_function(booklet, w2, list(range(len(pairs))))
    norm = sup_distance(f, g)
    dgm_f = diagram_of(booklet.pair, q)
    dgm_g = diagram_of(booklet.pair.with_values(g), q)
    cert = {
        "bottleneck": value,
        "sup_norm": norm,
        "matching_norm": matching_norm(m),
        "norm_equals_distance": norm == value,
        "f_diagram": dgm_f,
        "g_diagram": dgm_g,
        "f_diagram_ok": dgm_f == mu.interior(),
        "g_diagram_ok": dgm_g == nu.interior(),
    }
    return Realization(booklet.pair, f, g, m, booklet, cert)


@dataclass
class RoundTripReport:
    ok: bool
    expected: Diagram
    computed: Diagram
    betti0: int


def verify_roundtrip(d: Diagram, q: int = 2) -> RoundTripReport:
    booklet = build_booklet(represent(d))
    computed = diagram_of(booklet.pair, q)
    expected = d.interior()
    b0 = homology_of_pair((booklet.pair.complex.simplices, frozenset()), 0, q).dim
    return RoundTripReport(computed == expected and b0 == 1, expected, computed, b0)
