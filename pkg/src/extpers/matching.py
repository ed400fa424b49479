"""Admissibility, matchings and the exact bottleneck distance."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import List, NamedTuple, Optional, Sequence, Tuple

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_bipartite_matching

from .diagram import Diagram
from .strip import (INF, Ext, StripPoint, dist, dist_to_boundary,
                    nearest_boundary_point, region_classify)

__all__ = [
    "Matching",
    "Admissibility",
    "check_admissible",
    "window",
    "matching_norm",
    "bottleneck_distance",
    "brute_force_bottleneck",
    "repair_matching",
]


@dataclass(frozen=True)
class Matching:
    """Entries ``(left, right, mult)``; a boundary endpoint is a point on the strip boundary."""

    entries: Tuple[Tuple[StripPoint, StripPoint, int], ...]

    def __post_init__(self):
        merged = Counter()
        for left, right, mult in self.entries:
            if mult <= 0:
                raise ValueError("multiplicities must be positive")
            if left.on_boundary and right.on_boundary:
                raise ValueError("boundary-to-boundary entries are not allowed")
            merged[(left, right)] += int(mult)
        object.__setattr__(self, "entries", tuple((l, r, m) for (l, r), m in sorted(merged.items())))

    def left(self) -> Diagram:
        """Interior points of the left side, with multiplicity."""
        return Diagram((l, m) for l, _, m in self.entries if not l.on_boundary)

    def right(self) -> Diagram:
        return Diagram((r, m) for _, r, m in self.entries if not r.on_boundary)

    def is_between(self, mu: Diagram, nu: Diagram) -> bool:
        return self.left() == mu and self.right() == nu

    def pairs(self) -> List[Tuple[StripPoint, StripPoint]]:
        """Entries expanded by multiplicity, in canonical order."""
        return [(l, r) for l, r, m in self.entries for _ in range(m)]


class Admissibility(NamedTuple):
    ok: bool
    witness: Optional[StripPoint]
    reason: str


def window(d: Diagram) -> Tuple[Fraction, Fraction]:
    """``(a1, a2)`` from the unique point of the diagram in the central square."""
    centre = [p for p in d if p.square == (0, 0)]
    if len(centre) != 1:
        raise ValueError("diagram needs exactly one point in the central square")
    return centre[0].c1, centre[0].c2


def check_admissible(d: Diagram) -> Admissibility:
    centre = [p for p in d if p.square == (0, 0)]
    count = sum(d[p] for p in centre)
    if count != 1:
        return Admissibility(False, centre[1] if len(centre) > 1 else (centre[0] if centre else None),
                             f"{count} points in the central square, need exactly one")
    a = centre[0]
    if a.c2 > a.c1:
        return Admissibility(False, a, "central point lies above the diagonal")
    for u in d:
        if u == a:
            continue
        kind = region_classify(u).kind
        if kind not in ("Lift", "OnBoundary"):
            return Admissibility(False, u, f"point is outside the realizable region ({kind})")
        for level in u.fauxtans:
            if not a.c2 <= level <= a.c1:
                return Admissibility(False, u, f"level {level} outside the window [{a.c2}, {a.c1}]")
    return Admissibility(True, None, "")


def matching_norm(m: Matching) -> Ext:
    return max((dist(l, r) for l, r, _ in m.entries), default=Fraction(0))


# ---------------------------------------------------------------- bottleneck

def _cost_tables(mu: Sequence[StripPoint], nu: Sequence[StripPoint]):
    d = [[dist(a, b) for b in nu] for a in mu]
    return d, [dist_to_boundary(a) for a in mu], [dist_to_boundary(b) for b in nu]


def _perfect_matching(d, bmu, bnu, delta) -> Optional[np.ndarray]:
    """Perfect matching of the thresholded graph with diagonal slots, or None."""
    m, n = len(bmu), len(bnu)
    size = m + n
    rows, cols = [], []
    for i in range(m):
        for j in range(n):
            if d[i][j] <= delta:
                rows.append(i)
                cols.append(j)
        if bmu[i] <= delta:
            rows.append(i)
            cols.append(n + i)
    for j in range(n):
        if bnu[j] <= delta:
            rows.append(m + j)
            cols.append(j)
        for i in range(m):
            rows.append(m + j)
            cols.append(n + i)
    graph = csr_matrix((np.ones(len(rows), dtype=np.int8), (rows, cols)), shape=(size, size))
    match = maximum_bipartite_matching(graph, perm_type="column")
    return match if np.all(match >= 0) else None


def bottleneck_distance(mu: Diagram, nu: Diagram) -> Tuple[Ext, Optional[Matching]]:
    """Exact bottleneck distance and an optimal matching (None when infinite).

    Points on the strip boundary carry no weight and are ignored.
    """
    a, b = mu.interior().copies(), nu.interior().copies()
    if not a and not b:
        return Fraction(0), Matching(())
    d, bmu, bnu = _cost_tables(a, b)
    radii = {Fraction(0)}
    radii.update(x for row in d for x in row if x != INF)
    radii.update(x for x in bmu + bnu if x != INF)
    radii = sorted(radii)
    lo, hi = 0, len(radii) - 1
    if _perfect_matching(d, bmu, bnu, radii[hi]) is None:
        return INF, None
    while lo < hi:
        mid = (lo + hi) // 2
        if _perfect_matching(d, bmu, bnu, radii[mid]) is None:
            lo = mid + 1
        else:
            hi = mid
    best = radii[lo]
    match = _perfect_matching(d, bmu, bnu, best)
    m, n = len(a), len(b)
    entries = []
    for i in range(m):
        c = int(match[i])
        entries.append((a[i], b[c] if c < n else nearest_boundary_point(a[i]), 1))
    for j in range(n):
        if int(match[m + j]) == j:
            entries.append((nearest_boundary_point(b[j]), b[j], 1))
    return best, Matching(tuple(entries))


def brute_force_bottleneck(mu: Diagram, nu: Diagram, limit: int = 7) -> Ext:
    """Exhaustive minimum over partial bijections; the oracle for small inputs."""
    a, b = mu.interior().copies(), nu.interior().copies()
    if len(a) > limit or len(b) > limit:
        raise ValueError(f"brute force limited to {limit} copies per side")
    d, bmu, bnu = _cost_tables(a, b)
    best = [INF]

    def walk(i, used, cur):
        if cur >= best[0]:
            return
        if i == len(a):
            rest = max((bnu[j] for j in range(len(b)) if j not in used), default=Fraction(0))
            best[0] = min(best[0], max(cur, rest))
            return
        walk(i + 1, used, max(cur, bmu[i]))
        for j in range(len(b)):
            if j not in used:
                walk(i + 1, used | {j}, max(cur, d[i][j]))

    walk(0, frozenset(), Fraction(0))
    return best[0]


# ---------------------------------------------------------------- repair

def _clamp_to_window(p: StripPoint, a1: Fraction, a2: Fraction) -> StripPoint:
    """Closest boundary point to ``p`` (on the boundary) whose levels lie in ``[a2, a1]``."""
    lo, hi = (a2, a1) if p.k1 % 2 == 0 else (-a1, -a2)
    t = min(max(p.c1, lo), hi)
    return StripPoint(p.k1, p.k2, t, -t)


def _in_window(p: StripPoint, a1: Fraction, a2: Fraction) -> bool:
    return all(a2 <= x <= a1 for x in p.fauxtans)


def repair_matching(m: Matching, mu: Diagram, nu: Diagram) -> Matching:
    """Move boundary endpoints into the admissibility window of their side."""
    for side, d in (("left", mu), ("right", nu)):
        ok = check_admissible(d)
        if not ok.ok:
            raise ValueError(f"{side} diagram is not admissible: {ok.reason}")
    if not m.is_between(mu.interior(), nu.interior()):
        raise ValueError("matching does not project to the given diagrams")
    wa, wb = window(mu), window(nu)
    entries = []
    for left, right, mult in m.entries:
        if left.on_boundary and not _in_window(left, *wa):
            left = _clamp_to_window(left, *wa)
        if right.on_boundary and not _in_window(right, *wb):
            right = _clamp_to_window(right, *wb)
        entries.append((left, right, mult))
    return Matching(tuple(entries))
