"""Finite simplicial complexes, PL pairs, level subdivision and the gadget builders.

Simplices are sorted tuples of vertex indices.  A complex stores every face,
so a subcomplex is just a subset of its simplex set.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import FrozenSet, Iterable, List, Mapping, Sequence, Tuple

from .strip import INF, PairDescriptor, as_fraction

__all__ = [
    "Simplex",
    "Complex",
    "PLPair",
    "SimplicialMap",
    "closure",
    "build_complex",
    "pair_intersect",
    "level_subdivision",
    "level_subdivision_tracked",
    "preimage_pair",
    "gadget_horn",
    "gadget_sphere_cylinder",
    "booklet_skeleton",
    "glue_along_edge",
]

Simplex = Tuple[int, ...]


def closure(simplices: Iterable[Iterable[int]]) -> FrozenSet[Simplex]:
    """All nonempty faces of the given simplices."""
    out = set()
    for s in simplices:
        s = tuple(sorted(set(s)))
        if s in out:
            continue
        for r in range(1, len(s) + 1):
            out.update(combinations(s, r))
    return frozenset(out)


@dataclass(frozen=True)
class Complex:
    vertices: Tuple[str, ...]
    simplices: FrozenSet[Simplex]

    def __post_init__(self):
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("duplicate vertex labels")
        n = len(self.vertices)
        for s in self.simplices:
            if not s or list(s) != sorted(set(s)) or s[0] < 0 or s[-1] >= n:
                raise ValueError(f"malformed simplex {s}")
            if len(s) > 1:
                for i in range(len(s)):
                    if s[:i] + s[i + 1:] not in self.simplices:
                        raise ValueError(f"simplex set not closed under faces at {s}")
        for i in range(n):
            if (i,) not in self.simplices:
                raise ValueError(f"vertex {self.vertices[i]!r} missing its 0-simplex")

    @property
    def dim(self) -> int:
        return max((len(s) - 1 for s in self.simplices), default=-1)

    def count(self, p: int) -> int:
        return sum(1 for s in self.simplices if len(s) == p + 1)

    def euler_characteristic(self) -> int:
        return sum((-1) ** (len(s) - 1) for s in self.simplices)

    def maximal(self) -> List[Simplex]:
        top = []
        for s in sorted(self.simplices, key=lambda s: (-len(s), s)):
            if not any(set(s) < set(t) for t in top):
                top.append(s)
        return sorted(top)

    def index_of(self, label: str) -> int:
        return self.vertices.index(label)

    def full_subcomplex(self, keep: Iterable[int]) -> FrozenSet[Simplex]:
        keep = set(keep)
        return frozenset(s for s in self.simplices if keep.issuperset(s))


@dataclass(frozen=True)
class PLPair:
    """A complex, a subcomplex and rational vertex values."""

    complex: Complex
    sub: FrozenSet[Simplex]
    values: Tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.values) != len(self.complex.vertices):
            raise ValueError("values must be given for every vertex")
        object.__setattr__(self, "values", tuple(as_fraction(v) for v in self.values))
        if not self.sub <= self.complex.simplices:
            raise ValueError("sub is not contained in the complex")
        for s in self.sub:
            for i in range(len(s)) if len(s) > 1 else ():
                if s[:i] + s[i + 1:] not in self.sub:
                    raise ValueError("sub is not closed under faces")

    def with_values(self, values: Sequence) -> "PLPair":
        return PLPair(self.complex, self.sub, tuple(values))

    def with_sub(self, sub: Iterable[Simplex]) -> "PLPair":
        return PLPair(self.complex, frozenset(sub), self.values)

    def critical_values(self) -> List[Fraction]:
        return sorted(set(self.values))


@dataclass(frozen=True)
class SimplicialMap:
    source: Complex
    target: Complex
    vertex_map: Tuple[int, ...]

    def __post_init__(self):
        if len(self.vertex_map) != len(self.source.vertices):
            raise ValueError("vertex map must be total")
        for s in self.source.simplices:
            if self.image(s) not in self.target.simplices:
                raise ValueError(f"image of {s} is not a simplex")

    def image(self, s: Simplex) -> Simplex:
        return tuple(sorted({self.vertex_map[v] for v in s}))


def build_complex(vertex_values, maximal_simplices, sub=()) -> PLPair:
    """Build a PL pair from ``(label, value)`` pairs and maximal simplices given by label.

    ``vertex_values`` may also be a mapping label -> value.  Vertex order
    follows the input order.
    """
    items = list(vertex_values.items()) if isinstance(vertex_values, Mapping) else list(vertex_values)
    labels = [str(lab) for lab, _ in items]
    if len(set(labels)) != len(labels):
        raise ValueError("duplicate vertex identifier")
    index = {lab: i for i, lab in enumerate(labels)}

    def resolve(simplices):
        out = []
        for s in simplices:
            try:
                out.append([index[str(v)] for v in s])
            except KeyError as exc:
                raise ValueError(f"simplex {list(s)} references unknown vertex {exc}") from None
        return out

    tops = resolve(maximal_simplices) + [[i] for i in range(len(labels))]
    cx = Complex(tuple(labels), closure(tops))
    a = closure(resolve(sub))
    if not a <= cx.simplices:
        raise ValueError("subcomplex simplex missing from the complex")
    return PLPair(cx, a, tuple(as_fraction(v) for _, v in items))


def pair_intersect(p, q):
    """``(X, A) meet (Y, B) = (X & Y, (A & Y) | (X & B))`` on simplex sets."""
    (x, a), (y, b) = p, q
    x, a, y, b = frozenset(x), frozenset(a), frozenset(y), frozenset(b)
    return x & y, (a & y) | (x & b)


def level_subdivision_tracked(p: PLPair, levels: Iterable, tracked: Sequence[Iterable[Simplex]] = ()):
    """Subdivide so that no edge crosses a level strictly; also subdivide ``tracked`` subcomplexes.

    Levels are handled in increasing order.  For each level, every edge whose
    endpoint values straddle it is split at the crossing point by a stellar
    subdivision, edges taken in sorted order.  The new vertex is labelled
    ``a~b`` after the edge's endpoint labels.
    """
    labels = list(p.complex.vertices)
    values = list(p.values)
    simplices = set(p.complex.simplices)
    sets = [set(p.sub)] + [set(t) for t in tracked]
    for level in sorted({as_fraction(t) for t in levels}):
        crossing = sorted(s for s in simplices if len(s) == 2
                          and min(values[s[0]], values[s[1]]) < level < max(values[s[0]], values[s[1]]))
        for a, b in crossing:
            m = len(labels)
            labels.append(f"{labels[a]}~{labels[b]}")
            values.append(level)
            for target in [simplices] + sets:
                star = [s for s in target if a in s and b in s]
                for s in star:
                    target.discard(s)
                    rest = [v for v in s if v != a and v != b]
                    target.add(tuple(sorted(rest + [b, m])))
                    target.add(tuple(sorted(rest + [a, m])))
                    target.add(tuple(sorted(rest + [m])))
    cx = Complex(tuple(labels), frozenset(simplices))
    out = PLPair(cx, frozenset(sets[0]), tuple(values))
    return out, [frozenset(t) for t in sets[1:]]


def level_subdivision(p: PLPair, levels: Iterable) -> PLPair:
    return level_subdivision_tracked(p, levels)[0]


def _check_sampled(p: PLPair, endpoints) -> None:
    vals = p.values
    for e in endpoints:
        for s in p.complex.simplices:
            if len(s) == 2 and min(vals[s[0]], vals[s[1]]) < e < max(vals[s[0]], vals[s[1]]):
                raise ValueError(f"level {e} is not sampled: edge {s} crosses it")


def preimage_pair(p: PLPair, d: PairDescriptor, check: bool = True):
    """``(X, A)`` meet the preimage of ``(I, C)``, for a level-subdivided pair."""
    if check:
        _check_sampled(p, d.finite_endpoints())
    vals = p.values
    a, b = d.gap

    def lo_hi(s):
        vs = [vals[v] for v in s]
        return min(vs), max(vs)

    k_i, k_c = set(), set()
    for s in p.complex.simplices:
        lo, hi = lo_hi(s)
        if d.i_lo <= lo and hi <= d.i_hi:
            k_i.add(s)
        if d.c_gap is not None and ((a != -INF and hi <= a) or (b != INF and lo >= b)):
            k_c.add(s)
    k_i = frozenset(k_i)
    return k_i, (p.sub & k_i) | frozenset(k_c)


def gadget_horn(m: int, which="top") -> Complex:
    """The horn: boundary of the m-simplex minus one facet.

    ``which`` is ``"top"`` (drop the facet opposite vertex m), ``"bottom"``
    (opposite vertex 0) or an explicit vertex index.
    """
    if m < 1:
        raise ValueError("horn dimension must be at least 1")
    k = {"top": m, "bottom": 0}.get(which, which)
    if not isinstance(k, int) or not 0 <= k <= m:
        raise ValueError(f"bad horn vertex {which!r}")
    full = tuple(range(m + 1))
    missing = tuple(v for v in full if v != k)
    simplices = frozenset(s for s in closure([full]) if s != full and s != missing)
    return Complex(tuple(str(i) for i in full), simplices)


def gadget_sphere_cylinder(n: int) -> Complex:
    """Staircase triangulation of (boundary of the (n+1)-simplex) x interval.

    Vertex ``(i, l)`` has label ``"i,l"`` and index ``2*i + l``.
    """
    if n < 1:
        raise ValueError("cylinder gadget needs n >= 1")
    tops = []
    for omit in range(n + 2):
        facet = [i for i in range(n + 2) if i != omit]
        for cut in range(len(facet)):
            chain = [2 * f for f in facet[:cut + 1]] + [2 * f + 1 for f in facet[cut:]]
            tops.append(chain)
    labels = tuple(f"{i},{l}" for i in range(n + 2) for l in (0, 1))
    return Complex(labels, closure(tops))


def booklet_skeleton(page_ids: Sequence) -> Complex:
    """Spine ``s0--s1`` plus, per page, a fore edge ``(0,p)--(1,p)`` and two triangles."""
    pages = [str(p) for p in page_ids]
    if len(set(pages)) != len(pages):
        raise ValueError("page ids must be distinct")
    labels = ["s0", "s1"]
    tops = [(0, 1)]
    for p in pages:
        e0, e1 = len(labels), len(labels) + 1
        labels += [f"0:{p}", f"1:{p}"]
        tops += [(0, 1, e1), (0, e0, e1)]
    return Complex(tuple(labels), closure(tops))


def glue_along_edge(base: Complex, edge: Tuple[int, int], gadget: Complex,
                    j: Tuple[int, int], tag: str = "g"):
    """Pushout gluing ``gadget`` to ``base`` with ``j[0] -> edge[0]`` and ``j[1] -> edge[1]``.

    Gadget vertices other than ``j`` get labels ``tag:label``.  Returns the
    glued complex and the map from gadget vertex index to glued index.
    """
    if tuple(sorted(j)) not in gadget.simplices or j[0] == j[1]:
        raise ValueError(f"{j} is not an edge of the gadget")
    if tuple(sorted(edge)) not in base.simplices or edge[0] == edge[1]:
        raise ValueError(f"{edge} is not an edge of the base")
    labels = list(base.vertices)
    vmap: List[int] = []
    for g, lab in enumerate(gadget.vertices):
        if g == j[0]:
            vmap.append(edge[0])
        elif g == j[1]:
            vmap.append(edge[1])
        else:
            vmap.append(len(labels))
            labels.append(f"{tag}:{lab}")
    glued = {tuple(sorted(vmap[v] for v in s)) for s in gadget.simplices}
    return Complex(tuple(labels), base.simplices | frozenset(glued)), tuple(vmap)
