"""Relative interlevel set homology on the strip and diagram extraction.

The functor is evaluated directly: a point ``u`` of tile degree ``n`` is sent
to ``H_n`` of ``(X, A)`` meet the preimage of the pair assigned to ``T**n(u)``.
Maps inside a tile are induced by inclusion; maps into the next tile are
Mayer-Vietoris connecting maps.  The complex is subdivided once at every
sample level, so every preimage needed below is a subcomplex given by a
vertex predicate, and all homology bases live in one ambient chain complex.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .diagram import Diagram
from .homology import (Ambient, HomologySpace, LinearMap, Subcomplex, check_prime,
                       connecting_map, inclusion_map, rank_mod)
from .simplex import PLPair, closure, level_subdivision_tracked
from .strip import (INF, PairDescriptor, StripPoint, apply_T, fauxtan, pair_at,
                    poset_leq, rho, tile_degree)

__all__ = [
    "RishContext",
    "restrict_pair",
    "build_context",
    "evaluate_space",
    "evaluate_map",
    "extract_diagram",
    "diagram_of",
    "grid_points",
    "AxiomReport",
    "axiom_suite",
    "default_cover",
    "pinch_extension",
    "disjoint_union",
]

Within = Tuple[Subcomplex, Subcomplex]


def _ladder(criticals: Sequence[Fraction], parts: int) -> Tuple[Fraction, ...]:
    """Criticals, ``parts - 1`` equally spaced samples per gap, and outer samples."""
    if not criticals:
        return ()
    pts = set(criticals)
    for a, b in zip(criticals, criticals[1:]):
        pts.update(a + (b - a) * Fraction(i, parts) for i in range(1, parts))
    outer = max(parts // 2, 1)
    for i in range(1, outer + 1):
        pts.add(criticals[0] - Fraction(i, outer))
        pts.add(criticals[-1] + Fraction(i, outer))
    return tuple(sorted(pts))


class RishContext:
    """Subdivided pair plus everything needed to evaluate the functor.

    ``tracked`` subcomplexes (simplex sets of the input complex) are subdivided
    alongside and exposed as ambient subcomplexes via :meth:`tracked_sub`.
    """

    def __init__(self, pair: PLPair, q: int = 2, parts: int = 2, tracked: Sequence = ()):
        if parts < 2:
            raise ValueError("need at least one sample per gap")
        self.source = pair
        self.q = check_prime(q)
        self.parts = parts
        self.criticals: Tuple[Fraction, ...] = tuple(pair.critical_values())
        self.ladder = _ladder(self.criticals, parts)
        inner = [t for t in self.ladder if self.criticals and self.criticals[0] < t < self.criticals[-1]]
        self.pair, tracked_sub = level_subdivision_tracked(pair, inner, tracked)
        self.n_max = pair.complex.dim + 1
        self.ambient = Ambient(self.pair.complex.simplices, self.q)
        amb = self.ambient
        self._rank = {t: i for i, t in enumerate(self.ladder)}
        vr = np.array([self._rank[v] for v in self.pair.values], dtype=np.int64)
        self._smin = np.array([vr[list(s)].min() for s in amb.simplices], dtype=np.int64)
        self._smax = np.array([vr[list(s)].max() for s in amb.simplices], dtype=np.int64)
        self.whole = Subcomplex(amb, np.ones(len(amb), dtype=bool))
        self.empty = Subcomplex(amb, np.zeros(len(amb), dtype=bool))
        self.sub = amb.sub(self.pair.sub)
        self._tracked = [amb.sub(t) for t in tracked_sub]
        self._chart = {}
        self._pairs: Dict[tuple, Tuple[Subcomplex, Subcomplex, int]] = {}

    # ------------------------------------------------------------ samples
    def tracked_sub(self, i: int) -> Subcomplex:
        return self._tracked[i]

    def chart_ladder(self, k: int) -> Tuple[Fraction, ...]:
        """Chart values on branch ``k`` whose level is a sample."""
        par = k % 2
        if par not in self._chart:
            self._chart[par] = tuple(sorted(fauxtan(par, t) for t in self.ladder))
        return self._chart[par]

    def critical_charts(self, k: int) -> Tuple[Fraction, ...]:
        return tuple(sorted(fauxtan(k, t) for t in self.criticals))

    def is_sampled(self, u: StripPoint) -> bool:
        return fauxtan(u.k1, u.c1) in self._rank and fauxtan(u.k2, u.c2) in self._rank

    def _endpoint(self, e) -> int:
        if e == -INF:
            return -1
        if e == INF:
            return len(self.ladder)
        try:
            return self._rank[e]
        except KeyError:
            raise ValueError(f"level {e} is not in the sample ladder") from None

    # ------------------------------------------------------------ pairs
    def descriptor_pair(self, d: PairDescriptor, within: Optional[Within] = None) -> Tuple[Subcomplex, Subcomplex]:
        """``within`` meet the preimage of ``d``, as ambient subcomplexes."""
        y, b = within if within is not None else (self.whole, self.sub)
        lo, hi = self._endpoint(d.i_lo), self._endpoint(d.i_hi)
        k = (self._smin >= lo) & (self._smax <= hi) & y.arr
        c = np.zeros_like(k)
        if d.c_gap is not None:
            a, bb = d.c_gap
            if a != -INF:
                c |= self._smax <= self._endpoint(a)
            if bb != INF:
                c |= self._smin >= self._endpoint(bb)
        l = (k & b.arr) | (c & y.arr)
        return Subcomplex(self.ambient, k), Subcomplex(self.ambient, l)

    def point_pair(self, u: StripPoint, within: Optional[Within] = None):
        """``(K, L, n)`` for the pair at ``u`` and its tile degree ``n``."""
        key = (u, None if within is None else (within[0].key, within[1].key))
        hit = self._pairs.get(key)
        if hit is None:
            if self.ladder and not self.is_sampled(u):
                raise ValueError(f"{u!r} has an unsampled chart value")
            d, n = pair_at(u)
            hit = (*self.descriptor_pair(d, within), n)
            self._pairs[key] = hit
        return hit

    def zero_space(self) -> HomologySpace:
        return self.ambient.space(self.empty, self.empty, 0)

    def space(self, u: StripPoint, within: Optional[Within] = None, shift: int = 0) -> HomologySpace:
        if u.on_boundary or not self.ladder:
            return self.zero_space()
        k, l, n = self.point_pair(u, within)
        if n + shift < 0:
            return self.zero_space()
        return self.ambient.space(k, l, n + shift)

    # ------------------------------------------------------------ maps
    def map(self, u: StripPoint, v: StripPoint, within: Optional[Within] = None,
            shift: int = 0) -> LinearMap:
        if not poset_leq(u, v):
            raise ValueError(f"{u!r} is not below {v!r}")
        src, dst = self.space(u, within, shift), self.space(v, within, shift)
        zero = LinearMap.zero(src.dim, dst.dim, self.q)
        if src.dim == 0 or dst.dim == 0 or _meets_boundary(u, v):
            return zero
        nu, nv = tile_degree(u), tile_degree(v)
        if nu == nv:
            return inclusion_map(src, dst)
        if nu == nv + 1 and poset_leq(v, apply_T(u)):
            k0, l0 = self.corner_pair(u, v, within)
            return connecting_map(src, k0, l0, dst)
        return zero

    def corner_pair(self, u: StripPoint, v: StripPoint, within: Optional[Within] = None):
        """First piece of the Mayer-Vietoris triad joining tile(v) + 1 to tile(v).

        With ``v' = T**n(v)`` and ``w' = T**(n+1)(u)`` in the fundamental
        domain, the whole pair sits at ``w'``, the intersection at ``v'``, and
        the pieces at the corners ``(w'1, v'2)`` and ``(v'1, w'2)``.
        """
        n = tile_degree(v)
        vp, wp = apply_T(v, n), apply_T(u, n + 1)
        c0 = StripPoint(wp.k1, vp.k2, wp.c1, vp.c2)
        c1 = StripPoint(vp.k1, wp.k2, vp.c1, wp.c2)
        k0, l0 = self.descriptor_pair(rho(c0), within)
        k1, l1 = self.descriptor_pair(rho(c1), within)
        kw, lw = self.descriptor_pair(rho(wp), within)
        kv, lv = self.descriptor_pair(rho(vp), within)
        assert np.array_equal(kw.arr, k0.arr | k1.arr) and np.array_equal(lw.arr, l0.arr | l1.arr)
        assert np.array_equal(kv.arr, k0.arr & k1.arr) and np.array_equal(lv.arr, l0.arr & l1.arr)
        return k0, l0


def _meets_boundary(u: StripPoint, v: StripPoint) -> bool:
    """Whether the order interval ``[u, v]`` touches the strip boundary."""
    s = u.k1 + v.k2
    if s >= 2 or (s == 1 and u.c1 + v.c2 >= 0):
        return True
    s = v.k1 + u.k2
    return s <= -2 or (s == -1 and v.c1 + u.c2 <= 0)


def build_context(p: PLPair, q: int = 2, parts: int = 2, tracked: Sequence = ()) -> RishContext:
    return RishContext(p, q, parts, tracked)


def evaluate_space(ctx: RishContext, u: StripPoint) -> HomologySpace:
    return ctx.space(u)


def evaluate_map(ctx: RishContext, u: StripPoint, v: StripPoint) -> LinearMap:
    return ctx.map(u, v)


# ---------------------------------------------------------------- diagrams

def _squares(n_max: int, support_only: bool):
    """Branch squares meeting tiles 0..n_max (restricted to the support side if asked)."""
    out = []
    for diff in range(-2, 2 * n_max + 2):
        for s in (-1, 0, 1):
            if (diff + s) % 2:
                continue
            k1, k2 = (s + diff) // 2, (s - diff) // 2
            if support_only and not (k1 >= 0 and k2 <= 0):
                continue
            out.append((k1, k2))
    return out


def _neighbor(values: Tuple[Fraction, ...], c: Fraction, up: bool) -> Fraction:
    i = values.index(c)
    return values[i + 1] if up else values[i - 1]


def extract_diagram(ctx: RishContext, support_only: bool = True) -> Diagram:
    """Multiplicities ``dim F(v) - rank(image of the two nearest predecessors)``.

    Candidates have critical levels in both coordinates and tile degree at
    most ``n_max``.  With ``support_only=False`` every square meeting those
    tiles is scanned, which is only useful to confirm nothing shows up
    outside the expected support.
    """
    out = {}
    if not ctx.criticals:
        return Diagram()
    for k1, k2 in _squares(ctx.n_max, support_only):
        l1, l2 = ctx.chart_ladder(k1), ctx.chart_ladder(k2)
        for c1 in ctx.critical_charts(k1):
            for c2 in ctx.critical_charts(k2):
                try:
                    v = StripPoint(k1, k2, c1, c2)
                except ValueError:
                    continue
                if v.on_boundary or tile_degree(v) > ctx.n_max:
                    continue
                if support_only and (k1, k2) == (0, 0) and c2 > c1:
                    continue
                fv = ctx.space(v)
                if fv.dim == 0:
                    continue
                p1 = StripPoint(k1, k2, _neighbor(l1, c1, True), c2)
                p2 = StripPoint(k1, k2, c1, _neighbor(l2, c2, False))
                stacked = np.hstack([ctx.map(p1, v).matrix, ctx.map(p2, v).matrix])
                mult = fv.dim - rank_mod(stacked, ctx.q)
                if mult:
                    out[v] = mult
    return Diagram(out)


def diagram_of(p: PLPair, q: int = 2, parts: int = 2) -> Diagram:
    return extract_diagram(build_context(p, q, parts))


def grid_points(ctx: RishContext, max_degree: Optional[int] = None) -> List[StripPoint]:
    """All sampled points of the strip in tiles ``0..max_degree``."""
    top = ctx.n_max if max_degree is None else max_degree
    pts = []
    for k1, k2 in _squares(top, False):
        for c1 in ctx.chart_ladder(k1):
            for c2 in ctx.chart_ladder(k2):
                try:
                    u = StripPoint(k1, k2, c1, c2)
                except ValueError:
                    continue
                if 0 <= tile_degree(u) <= top:
                    pts.append(u)
    return pts


# ---------------------------------------------------------------- constructions

def disjoint_union(p: PLPair, r: PLPair, tags=("x", "z")) -> Tuple[PLPair, frozenset, frozenset]:
    """Disjoint union of two PL pairs; also returns both halves as simplex sets."""
    from .simplex import Complex

    n = len(p.complex.vertices)
    labels = tuple(f"{tags[0]}{v}" for v in p.complex.vertices) + tuple(f"{tags[1]}{v}" for v in r.complex.vertices)
    shift = lambda s: tuple(i + n for i in s)
    left = frozenset(p.complex.simplices)
    right = frozenset(shift(s) for s in r.complex.simplices)
    sub = frozenset(p.sub) | frozenset(shift(s) for s in r.sub)
    out = PLPair(Complex(labels, left | right), sub, p.values + r.values)
    return out, left, right


def pinch_extension(p: PLPair, vertices: Sequence[int]):
    """Extend by a twin ``v'`` of each listed vertex, coned over the closed star of ``v``.

    The twin carries the value of ``v``; sending ``v' -> v`` is a simplicial
    retraction onto the original complex that preserves the function.
    Returns ``(extended pair with empty sub, original simplex set, retraction)``.
    """
    from .simplex import Complex

    labels = list(p.complex.vertices)
    values = list(p.values)
    simplices = set(p.complex.simplices)
    retraction = list(range(len(labels)))
    for v in vertices:
        twin = len(labels)
        labels.append(f"{labels[v]}'")
        values.append(values[v])
        retraction.append(retraction[v])
        closed_star = closure(s for s in simplices if v in s)
        simplices.update(tuple(sorted(s + (twin,))) for s in closed_star)
        simplices.add((twin,))
    cx = Complex(tuple(labels), frozenset(simplices))
    return PLPair(cx, frozenset(), tuple(values)), frozenset(p.complex.simplices), tuple(retraction)


def default_cover(p: PLPair) -> Tuple[frozenset, frozenset]:
    """Split the maximal simplices in two halves (by sorted order) and close each."""
    tops = p.complex.maximal()
    half = (len(tops) + 1) // 2
    return closure(tops[:half]), closure(tops[half:])


# ---------------------------------------------------------------- axiom suite

@dataclass
class AxiomReport:
    checks: Dict[str, int] = field(default_factory=dict)
    failures: Dict[str, List[str]] = field(default_factory=dict)
    nonzero: Dict[str, int] = field(default_factory=dict)

    def record(self, axiom: str, ok: bool, where, nonzero: bool = False) -> None:
        self.checks[axiom] = self.checks.get(axiom, 0) + 1
        if nonzero:
            self.nonzero[axiom] = self.nonzero.get(axiom, 0) + 1
        self.failures.setdefault(axiom, [])
        if not ok:
            self.failures[axiom].append(str(where))

    @property
    def ok(self) -> bool:
        return not any(self.failures.values())

    def merge(self, other: "AxiomReport") -> None:
        for k, n in other.checks.items():
            self.checks[k] = self.checks.get(k, 0) + n
            self.failures.setdefault(k, []).extend(other.failures.get(k, []))
        for k, n in other.nonzero.items():
            self.nonzero[k] = self.nonzero.get(k, 0) + n

    def summary(self) -> str:
        lines = []
        for k in sorted(self.checks):
            bad = len(self.failures.get(k, []))
            extra = f" ({self.nonzero[k]} with nonzero maps)" if k in self.nonzero else ""
            lines.append(f"{k}: {self.checks[k] - bad}/{self.checks[k]} passed{extra}")
        return "\n".join(lines)


def _stack_rows(a: LinearMap, b: LinearMap) -> np.ndarray:
    return np.vstack([a.matrix, b.matrix])


def _exact(inc: np.ndarray, out: np.ndarray, middle: int, q: int) -> bool:
    """Exactness at the middle term of ``-inc-> M -out->``."""
    if inc.shape[0] != middle or out.shape[1] != middle:
        return False
    if middle and inc.shape[1] and out.shape[0] and np.any(out @ inc % q):
        return False
    return rank_mod(inc, q) + rank_mod(out, q) == middle


def _incl(src: HomologySpace, dst: HomologySpace, q: int) -> np.ndarray:
    if src.dim == 0 or dst.dim == 0:
        return np.zeros((dst.dim, src.dim), dtype=np.int64)
    return inclusion_map(src, dst).matrix


def _boundary_part(src: HomologySpace, keep: Subcomplex, dst: HomologySpace) -> np.ndarray:
    """Connecting map of a pair: the part of the boundary lying in ``keep``."""
    ops = src.ambient.ops
    cols = [dst.coords(ops.keep(ops.boundary(src.ambient, z), keep)) for z in src.reps]
    return np.stack(cols, axis=1) if cols else np.zeros((dst.dim, 0), dtype=np.int64)


def _successor_pairs(ctx: RishContext, pts: List[StripPoint], rng: random.Random, per_point: int):
    """Sampled comparable pairs: immediate successors plus random cross-tile partners."""
    by_square: Dict[Tuple[int, int], List[StripPoint]] = {}
    for u in pts:
        by_square.setdefault(u.square, []).append(u)
    pairs = []
    for u in pts:
        l1, l2 = ctx.chart_ladder(u.k1), ctx.chart_ladder(u.k2)
        i1, i2 = l1.index(u.c1), l2.index(u.c2)
        for c1, c2 in ((i1 - 1, i2), (i1, i2 + 1)):
            if 0 <= c1 < len(l1) and 0 <= c2 < len(l2):
                try:
                    pairs.append((u, StripPoint(u.k1, u.k2, l1[c1], l2[c2])))
                except ValueError:
                    pass
        tu = apply_T(u)
        cross = [v for sq in _squares_between(u, tu) for v in by_square.get(sq, ())
                 if poset_leq(u, v) and poset_leq(v, tu) and v != u]
        rng.shuffle(cross)
        pairs.extend((u, v) for v in cross[:per_point])
    return pairs


def _squares_between(u: StripPoint, w: StripPoint):
    return [(k1, k2) for k1 in range(w.k1, u.k1 + 1) for k2 in range(u.k2, w.k2 + 1)]


def axiom_suite(pair: PLPair, cover=None, q: int = 2, other: Optional[PLPair] = None,
                retraction=None, seed: int = 0, pairs_per_point: int = 2,
                max_points: Optional[int] = None) -> AxiomReport:
    """Check the structural properties of the functor on a sampled grid.

    ``cover`` is ``(X0, X1)`` as simplex sets with union the whole complex;
    the relative parts are ``A & X0`` and ``A & X1``.  ``other`` enables the
    disjoint-union check.  ``retraction`` is ``(big pair, subcomplex simplices)``
    admitting a value-preserving simplicial retraction; when omitted one is
    built with :func:`pinch_extension`.
    """
    rng = random.Random(seed)
    x_all = frozenset(pair.complex.simplices)
    a_all = frozenset(pair.sub)
    x0, x1 = (frozenset(c) for c in (cover or default_cover(pair)))
    if x0 | x1 != x_all:
        raise ValueError("cover does not cover the complex")
    if not (x0 <= x_all and x1 <= x_all):
        raise ValueError("cover pieces must be subcomplexes")
    a0, a1 = a_all & x0, a_all & x1
    x01, a01 = x0 & x1, a0 & a1
    tracked = [x0, a0, x1, a1, x01, a01, x01 | a0, x1 | a_all, a_all]
    ctx = build_context(pair, q, tracked=tracked)
    t = ctx.tracked_sub
    w_pair = (ctx.whole, ctx.sub)
    p0, p1, p01 = (t(0), t(1)), (t(2), t(3)), (t(4), t(5))
    exc_src, exc_dst = (t(0), t(6)), (ctx.whole, t(7))
    a_pair, x_pair = (t(8), ctx.empty), (ctx.whole, ctx.empty)
    xa_pair = (ctx.whole, t(8))
    report = AxiomReport()
    pts = grid_points(ctx)
    if max_points is not None and len(pts) > max_points:
        pts = rng.sample(pts, max_points)
    for u in pts:
        if u.on_boundary:
            continue
        _check_mv(ctx, u, w_pair, p0, p1, p01, report)
        _check_pair_sequence(ctx, u, a_pair, x_pair, xa_pair, report)
        s, d = ctx.space(u, exc_src), ctx.space(u, exc_dst)
        m = _incl(s, d, q)
        report.record("excision", s.dim == d.dim and rank_mod(m, q) == d.dim, u)
        tu = apply_T(u)
        report.record("strict_stability_spaces", ctx.space(tu, shift=1).dim == ctx.space(u).dim, u)
    for u, v in _successor_pairs(ctx, pts, rng, pairs_per_point):
        if u.on_boundary or v.on_boundary:
            continue
        base = ctx.map(u, v)
        shifted = ctx.map(apply_T(u), apply_T(v), shift=1)
        report.record("strict_stability_maps", base == shifted, (u, v))
        _check_naturality(ctx, u, v, w_pair, p0, p01, report)
    _check_functoriality(ctx, pts, rng, report)
    if other is not None:
        _check_additivity(pair, other, q, report, seed)
    _check_retract(pair, retraction, q, report, rng)
    return report


def _mv_sign(n: int, q: int) -> int:
    # the Mayer-Vietoris connecting map is taken with sign (-1)**n in tile n,
    # which makes it commute with the cross-tile connecting maps
    return 1 if n % 2 == 0 else q - 1


def _mv_boundary_matrix(ctx: RishContext, u: StripPoint, w_pair, p0, p01) -> np.ndarray:
    src = ctx.space(u, w_pair)
    dst = ctx.space(u, p01, shift=-1)
    if src.dim == 0 or dst.dim == 0:
        return np.zeros((dst.dim, src.dim), dtype=np.int64)
    k0, l0, n = ctx.point_pair(u, p0)
    m = connecting_map(src, k0, l0, dst).matrix
    return m * _mv_sign(n, ctx.q) % ctx.q


def _check_mv(ctx, u, w_pair, p0, p1, p01, report):
    q = ctx.q
    s01, s0, s1, s = (ctx.space(u, w) for w in (p01, p0, p1, w_pair))
    t01, t0, t1 = (ctx.space(u, w, shift=-1) for w in (p01, p0, p1))
    alpha = np.vstack([_incl(s01, s0, q), _incl(s01, s1, q)])
    beta = np.hstack([_incl(s0, s, q), (-_incl(s1, s, q)) % q])
    dmv = _mv_boundary_matrix(ctx, u, w_pair, p0, p01)
    alpha2 = np.vstack([_incl(t01, t0, q), _incl(t01, t1, q)])
    report.record("mv_exact", _exact(alpha, beta, s0.dim + s1.dim, q)
                  and _exact(beta, dmv, s.dim, q) and _exact(dmv, alpha2, t01.dim, q), u)


def _check_pair_sequence(ctx, u, a_pair, x_pair, xa_pair, report):
    q = ctx.q
    ha, hx, hxa = (ctx.space(u, w) for w in (a_pair, x_pair, xa_pair))
    ha2 = ctx.space(u, a_pair, shift=-1)
    i = _incl(ha, hx, q)
    j = _incl(hx, hxa, q)
    if hxa.dim and ha2.dim:
        ka, _, _ = ctx.point_pair(u, a_pair)
        delta = _boundary_part(hxa, ka, ha2)
    else:
        delta = np.zeros((ha2.dim, hxa.dim), dtype=np.int64)
    hx2 = ctx.space(u, x_pair, shift=-1)
    i2 = _incl(ha2, hx2, q)
    report.record("pair_sequence", _exact(i, j, hx.dim, q) and _exact(j, delta, hxa.dim, q)
                  and _exact(delta, i2, ha2.dim, q), u)


def _check_naturality(ctx, u, v, w_pair, p0, p01, report):
    """The Mayer-Vietoris connecting map commutes with the structure maps."""
    q = ctx.q
    left = _mv_boundary_matrix(ctx, v, w_pair, p0, p01)
    top = ctx.map(u, v, w_pair).matrix
    right = ctx.map(apply_T(u), apply_T(v), p01).matrix
    bottom = _mv_boundary_matrix(ctx, u, w_pair, p0, p01)
    lhs = left @ top % q if left.size and top.size else np.zeros((left.shape[0], top.shape[1]), dtype=np.int64)
    rhs = right @ bottom % q if right.size and bottom.size else np.zeros((right.shape[0], bottom.shape[1]), dtype=np.int64)
    cross = tile_degree(u) != tile_degree(v)
    report.record("boundary_square" if cross else "mv_naturality", np.array_equal(lhs, rhs), (u, v),
                  nonzero=bool(np.any(lhs) or np.any(rhs)))


def _check_functoriality(ctx, pts, rng, report, trials: int = 60):
    interior = [u for u in pts if not u.on_boundary]
    if len(interior) < 3:
        return
    for _ in range(trials):
        u = rng.choice(interior)
        ups = [v for v in interior if poset_leq(u, v)]
        v = rng.choice(ups)
        w = rng.choice([w for w in ups if poset_leq(v, w)])
        report.record("functoriality", ctx.map(u, w) == ctx.map(v, w) @ ctx.map(u, v), (u, v, w))


def _check_additivity(pair, other, q, report, seed):
    union, left, right = disjoint_union(pair, other)
    ctx = build_context(union, q, tracked=[left, right, union.sub & left, union.sub & right])
    t = ctx.tracked_sub
    pl, pr = (t(0), t(2)), (t(1), t(3))
    for u in grid_points(ctx):
        if u.on_boundary:
            continue
        hl, hr, hu = ctx.space(u, pl), ctx.space(u, pr), ctx.space(u, None)
        m = np.hstack([_incl(hl, hu, q), _incl(hr, hu, q)])
        report.record("additivity", hl.dim + hr.dim == hu.dim and rank_mod(m, q) == hu.dim, u)
    whole = extract_diagram(ctx)
    parts = diagram_of(pair, q) + diagram_of(other, q)
    report.record("additivity_diagram", whole == parts, "diagram")


def _check_retract(pair, retraction, q, report, rng):
    if retraction is None:
        base = pair.with_sub(())
        n = len(base.complex.vertices)
        picks = rng.sample(range(n), min(2, n)) if n else []
        big, a_simp, _ = pinch_extension(base, picks)
    else:
        big, a_simp = retraction[0], frozenset(retraction[1])
    a_only = restrict_pair(big, a_simp)
    lhs = diagram_of(big.with_sub(()), q)
    rhs = diagram_of(a_only, q) + diagram_of(big.with_sub(a_simp), q)
    report.record("retract_splitting", lhs == rhs, "diagram")


def restrict_pair(p: PLPair, simplices: frozenset) -> PLPair:
    """The pair ``(B, empty)`` for a subcomplex ``B``, relabelled compactly."""
    from .simplex import Complex

    verts = sorted({v for s in simplices for v in s})
    idx = {v: i for i, v in enumerate(verts)}
    cx = Complex(tuple(p.complex.vertices[v] for v in verts),
                 frozenset(tuple(idx[v] for v in s) for s in simplices))
    return PLPair(cx, frozenset(), tuple(p.values[v] for v in verts))
