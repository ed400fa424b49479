"""Homology of simplicial pairs over a prime field.

All pairs live inside one enumerated *ambient* complex.  A chain is a Python
int bitmask over ambient simplex indices when ``q == 2`` and a dict
``{index: coefficient}`` otherwise.  Orientation follows the sorted vertex
order of each simplex.

Relative cycles are found by column reduction of the relative boundary
matrix.  Boundaries and accepted cycle representatives are kept in an echelon
table keyed by their lowest (largest-index) cell, so expressing a cycle in a
homology basis is a single reduction pass.
"""

from __future__ import annotations

from typing import Callable, Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .simplex import Simplex

__all__ = [
    "Ambient",
    "Subcomplex",
    "HomologySpace",
    "LinearMap",
    "homology_of_pair",
    "induced_inclusion",
    "connecting_map",
    "mv_boundary",
    "rank_of_image_sum",
    "rank_mod",
    "check_prime",
]


def check_prime(q: int) -> int:
    q = int(q)
    if q < 2 or any(q % d == 0 for d in range(2, int(q ** 0.5) + 1)):
        raise ValueError(f"field characteristic must be prime, got {q}")
    return q


# ---------------------------------------------------------------- matrices

def rref_mod(a: np.ndarray, q: int):
    """Reduced row echelon form mod q; returns (matrix, pivot columns)."""
    a = np.array(a, dtype=np.int64) % q
    rows, cols = a.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        a[r] = (a[r] * pow(int(a[r, c]), q - 2, q)) % q
        col = a[:, c].copy()
        col[r] = 0
        hit = np.nonzero(col)[0]
        if hit.size:
            a[hit] = (a[hit] - np.outer(col[hit], a[r])) % q
        pivots.append(c)
        r += 1
    return a, pivots


def rank_mod(a: np.ndarray, q: int) -> int:
    a = np.asarray(a)
    if a.size == 0:
        return 0
    return len(rref_mod(a, q)[1])


# ---------------------------------------------------------------- ambient

class Ambient:
    """Enumeration of the simplices of a complex, with boundary data.

    ``order`` is an optional sort key on simplices; it only changes the cell
    enumeration, never orientations.
    """

    def __init__(self, simplices: Iterable[Simplex], q: int = 2,
                 order: Optional[Callable[[Simplex], object]] = None):
        self.q = check_prime(q)
        self.simplices: List[Simplex] = sorted(simplices, key=order or (lambda s: (len(s), s)))
        self.index: Dict[Simplex, int] = {s: i for i, s in enumerate(self.simplices)}
        self.dims = np.array([len(s) - 1 for s in self.simplices], dtype=np.int64)
        self.faces: List[Tuple[Tuple[int, int], ...]] = []
        for s in self.simplices:
            if len(s) == 1:
                self.faces.append(())
                continue
            try:
                self.faces.append(tuple((self.index[s[:i] + s[i + 1:]], (-1) ** i % q)
                                        for i in range(len(s))))
            except KeyError as exc:
                raise ValueError(f"simplex set is not closed under faces: {s} lacks {exc}") from None
        if q == 2:
            self.bmask = [sum(1 << f for f, _ in fs) for fs in self.faces]
        self.ops = _GF2 if q == 2 else _GFp(q)
        self._cache: Dict[tuple, object] = {}

    def __len__(self):
        return len(self.simplices)

    def sub(self, simplices: Iterable[Simplex]) -> "Subcomplex":
        arr = np.zeros(len(self.simplices), dtype=bool)
        for s in simplices:
            try:
                arr[self.index[s]] = True
            except KeyError:
                raise ValueError(f"simplex {s} not in the ambient complex") from None
        return Subcomplex(self, arr)

    def chain(self, terms: Dict[Simplex, int]):
        return self.ops.from_items(((self.index[s], c) for s, c in terms.items()))

    def chain_dict(self, x) -> Dict[Simplex, int]:
        return {self.simplices[i]: c for i, c in self.ops.items(x)}

    # cached reductions keyed by subcomplex fingerprints
    def _reduction(self, k: "Subcomplex", l: "Subcomplex", p: int):
        key = ("red", k.key, l.key, p)
        hit = self._cache.get(key)
        if hit is None:
            hit = _reduce(self, k, l, p)
            self._cache[key] = hit
        return hit

    def space(self, k: "Subcomplex", l: "Subcomplex", p: int) -> "HomologySpace":
        key = ("hom", k.key, l.key, p)
        hit = self._cache.get(key)
        if hit is None:
            hit = HomologySpace(self, k, l, p)
            self._cache[key] = hit
        return hit


class Subcomplex:
    """A subset of ambient simplices, stored as a boolean array."""

    def __init__(self, ambient: Ambient, arr: np.ndarray):
        self.ambient = ambient
        self.arr = arr
        self.key = np.packbits(arr).tobytes()
        self._bits = None

    @property
    def bits(self) -> int:
        if self._bits is None:
            self._bits = int.from_bytes(np.packbits(self.arr, bitorder="little").tobytes(), "little")
        return self._bits

    def simplices(self) -> FrozenSet[Simplex]:
        sx = self.ambient.simplices
        return frozenset(sx[i] for i in np.nonzero(self.arr)[0])

    def __and__(self, other: "Subcomplex") -> "Subcomplex":
        return Subcomplex(self.ambient, self.arr & other.arr)

    def __or__(self, other: "Subcomplex") -> "Subcomplex":
        return Subcomplex(self.ambient, self.arr | other.arr)

    def __le__(self, other: "Subcomplex") -> bool:
        return not np.any(self.arr & ~other.arr)

    def is_closed(self) -> bool:
        faces = self.ambient.faces
        return all(self.arr[f] for i in np.nonzero(self.arr)[0] for f, _ in faces[i])


# ---------------------------------------------------------------- chain ops

class _GF2:
    """Chains as int bitmasks."""

    zero = 0

    @staticmethod
    def unit(i):
        return 1 << i

    @staticmethod
    def low(x):
        return x.bit_length() - 1

    @staticmethod
    def coef(x, i):
        return (x >> i) & 1

    @staticmethod
    def axpy(x, c, y):
        return x ^ y if c else x

    @staticmethod
    def items(x):
        while x:
            b = x & -x
            yield b.bit_length() - 1, 1
            x ^= b

    @staticmethod
    def from_items(items):
        x = 0
        for i, c in items:
            if c % 2:
                x ^= 1 << i
        return x

    @staticmethod
    def drop(x, sub: Subcomplex):
        return x & ~sub.bits

    @staticmethod
    def outside(x, sub: Subcomplex):
        return x & ~sub.bits

    @staticmethod
    def keep(x, sub: Subcomplex):
        return x & sub.bits

    @staticmethod
    def boundary(amb: Ambient, x):
        out = 0
        bm = amb.bmask
        while x:
            b = x & -x
            out ^= bm[b.bit_length() - 1]
            x ^= b
        return out

    @staticmethod
    def inv(c):
        return 1

    @staticmethod
    def neg(c):
        return c


class _GFp:
    """Chains as sparse dicts modulo an odd prime."""

    zero = None  # replaced per instance

    def __init__(self, q: int):
        self.q = q
        self.zero = {}
        self._inverse = [0] + [pow(c, q - 2, q) for c in range(1, q)]

    def unit(self, i):
        return {i: 1}

    @staticmethod
    def low(x):
        return max(x) if x else -1

    @staticmethod
    def coef(x, i):
        return x.get(i, 0)

    def axpy(self, x, c, y):
        if not c:
            return x
        q = self.q
        out = dict(x)
        get = out.get
        for i, v in y.items():
            w = (get(i, 0) + c * v) % q
            if w:
                out[i] = w
            else:
                out.pop(i, None)
        return out

    @staticmethod
    def items(x):
        return sorted(x.items())

    def from_items(self, items):
        out: Dict[int, int] = {}
        for i, c in items:
            w = (out.get(i, 0) + c) % self.q
            if w:
                out[i] = w
            else:
                out.pop(i, None)
        return out

    @staticmethod
    def drop(x, sub: Subcomplex):
        arr = sub.arr
        return {i: c for i, c in x.items() if not arr[i]}

    outside = drop

    @staticmethod
    def keep(x, sub: Subcomplex):
        arr = sub.arr
        return {i: c for i, c in x.items() if arr[i]}

    def boundary(self, amb: Ambient, x):
        q = self.q
        out: Dict[int, int] = {}
        for i, c in x.items():
            for f, s in amb.faces[i]:
                w = (out.get(f, 0) + c * s) % q
                if w:
                    out[f] = w
                else:
                    out.pop(f, None)
        return out

    def inv(self, c):
        return self._inverse[c]

    def neg(self, c):
        return (-c) % self.q


def _reduce(amb: Ambient, k: Subcomplex, l: Subcomplex, p: int):
    """Column-reduce the relative boundary matrix of (k, l) in degree p.

    Returns ``(pivots, cycles)``: ``pivots`` maps the low of each nonzero
    reduced column (a relative boundary in degree p-1) to that column, and
    ``cycles`` is a basis of the relative p-cycles.
    """
    ops = amb.ops
    cells = np.nonzero(k.arr & ~l.arr & (amb.dims == p))[0]
    pivots: Dict[int, object] = {}
    vcols: Dict[int, object] = {}
    cycles = []
    for j in cells:
        j = int(j)
        r = ops.drop(ops.boundary(amb, ops.unit(j)), l) if p > 0 else ops.zero
        v = ops.unit(j)
        while r:
            lo = ops.low(r)
            hit = pivots.get(lo)
            if hit is None:
                break
            c = ops.neg(ops.coef(r, lo) * ops.inv(ops.coef(hit, lo)))
            r = ops.axpy(r, c, hit)
            v = ops.axpy(v, c, vcols[lo])
        if r:
            lo = ops.low(r)
            pivots[lo] = r
            vcols[lo] = v
        else:
            cycles.append(v)
    return pivots, cycles


class HomologySpace:
    """``H_p(K, L)`` with a basis of relative cycle representatives."""

    def __init__(self, amb: Ambient, k: Subcomplex, l: Subcomplex, p: int):
        if not l <= k:
            raise ValueError("L must be contained in K")
        self.ambient = amb
        self.k, self.l, self.degree, self.q = k, l, p, amb.q
        ops = amb.ops
        self.table: Dict[int, Tuple[object, object]] = {}
        self.reps: List[object] = []
        if p < 0:
            return
        bnd, _ = amb._reduction(k, l, p + 1)
        _, cycles = amb._reduction(k, l, p)
        hzero = ops.zero
        for lo, col in bnd.items():
            self.table[lo] = (col, hzero)
        for z in cycles:
            r = self._reduce(z)[0]
            if r:
                idx = len(self.reps)
                self.reps.append(r)
                self.table[ops.low(r)] = (r, ops.unit(idx))

    @property
    def dim(self) -> int:
        return len(self.reps)

    @property
    def cycle_basis(self) -> List[Dict[Simplex, int]]:
        return [self.ambient.chain_dict(z) for z in self.reps]

    def _reduce(self, x):
        ops = self.ambient.ops
        h = ops.zero
        while x:
            lo = ops.low(x)
            hit = self.table.get(lo)
            if hit is None:
                return x, h
            vec, hv = hit
            c = ops.neg(ops.coef(x, lo) * ops.inv(ops.coef(vec, lo)))
            x = ops.axpy(x, c, vec)
            h = ops.axpy(h, c, hv)
        return x, h

    def coords(self, chain) -> np.ndarray:
        """Coordinates of the class of a relative cycle (ambient chain)."""
        ops = self.ambient.ops
        x = ops.drop(chain, self.l)
        if ops.outside(x, self.k):
            raise ValueError("chain is not supported on K")
        rest, h = self._reduce(x)
        if rest:
            raise ValueError("chain is not a relative cycle of this pair")
        out = np.zeros(self.dim, dtype=np.int64)
        for i, c in ops.items(h):
            out[i] = (-c) % self.q
        return out


class LinearMap:
    """Matrix over F_q from a source basis to a target basis (target dim x source dim)."""

    def __init__(self, matrix: np.ndarray, q: int, source_dim: int, target_dim: int):
        m = np.asarray(matrix, dtype=np.int64).reshape(target_dim, source_dim) % q
        self.matrix, self.q = m, q
        self.source_dim, self.target_dim = source_dim, target_dim

    @classmethod
    def zero(cls, source_dim: int, target_dim: int, q: int) -> "LinearMap":
        return cls(np.zeros((target_dim, source_dim), dtype=np.int64), q, source_dim, target_dim)

    @property
    def rank(self) -> int:
        return rank_mod(self.matrix, self.q)

    def __matmul__(self, other: "LinearMap") -> "LinearMap":
        """``self @ other`` is ``self`` after ``other``."""
        if other.target_dim != self.source_dim:
            raise ValueError("dimension mismatch in composition")
        return LinearMap(self.matrix @ other.matrix % self.q, self.q, other.source_dim, self.target_dim)

    def is_zero(self) -> bool:
        return not np.any(self.matrix)

    def __eq__(self, other) -> bool:
        return (isinstance(other, LinearMap) and self.matrix.shape == other.matrix.shape
                and bool(np.all(self.matrix == other.matrix)))

    def __repr__(self):
        return f"LinearMap({self.target_dim}x{self.source_dim}, rank={self.rank})"


def _space_map(src: HomologySpace, dst: HomologySpace, images) -> LinearMap:
    cols = [dst.coords(z) for z in images]
    mat = np.stack(cols, axis=1) if cols else np.zeros((dst.dim, 0), dtype=np.int64)
    return LinearMap(mat, src.q, src.dim, dst.dim)


def inclusion_map(src: HomologySpace, dst: HomologySpace) -> LinearMap:
    if src.degree != dst.degree:
        raise ValueError("degree mismatch")
    if not (src.k <= dst.k and src.l <= dst.l):
        raise ValueError("source pair is not included in target pair")
    return _space_map(src, dst, src.reps)


def connecting_map(src: HomologySpace, piece0_k: Subcomplex, piece0_l: Subcomplex,
                   dst: HomologySpace) -> LinearMap:
    """Mayer-Vietoris connecting map ``H_p(K, L) -> H_{p-1}(K0 & K1, L0 & L1)``.

    For a relative cycle ``z`` let ``a`` be its part on ``K0`` and ``l0`` the
    part of ``dz`` on ``L0``; then ``da - l0`` is a relative cycle of the
    intersection pair whose class is the image.
    """
    ops = src.ambient.ops
    amb = src.ambient
    images = []
    for z in src.reps:
        a = ops.keep(z, piece0_k)
        l0 = ops.keep(ops.boundary(amb, z), piece0_l)
        c = ops.axpy(ops.boundary(amb, a), ops.neg(1), l0)
        images.append(c)
    return _space_map(src, dst, images)


def _as_ambient_pairs(q, order, *pairs):
    everything = set()
    for k, l in pairs:
        everything |= set(k)
        if not set(l) <= set(k):
            raise ValueError("L must be a subcomplex of K")
    amb = Ambient(everything, q, order)
    out = []
    for k, l in pairs:
        ks, ls = amb.sub(k), amb.sub(l)
        if not (ks.is_closed() and ls.is_closed()):
            raise ValueError("input is not closed under faces")
        out.append((ks, ls))
    return amb, out


def homology_of_pair(pair, p: int, q: int = 2, order=None) -> HomologySpace:
    """``H_p(K, L; F_q)`` for simplex sets ``pair = (K, L)``."""
    amb, [(k, l)] = _as_ambient_pairs(q, order, pair)
    return amb.space(k, l, p)


def induced_inclusion(src, dst, p: int, q: int = 2) -> LinearMap:
    """Map induced by the inclusion of simplex-set pairs ``src -> dst``."""
    if not (set(src[0]) <= set(dst[0]) and set(src[1]) <= set(dst[1])):
        raise ValueError("inclusion violated")
    amb, [(k, l), (k2, l2)] = _as_ambient_pairs(q, None, src, dst)
    return inclusion_map(amb.space(k, l, p), amb.space(k2, l2, p))


def mv_boundary(whole, piece0, piece1, p: int, q: int = 2) -> LinearMap:
    """Connecting map of the Mayer-Vietoris sequence of a union of pairs."""
    k, l = map(frozenset, whole)
    k0, l0 = map(frozenset, piece0)
    k1, l1 = map(frozenset, piece1)
    if k != k0 | k1 or l != l0 | l1:
        raise ValueError("pieces must cover the whole pair componentwise")
    amb, [(ks, ls), (k0s, l0s), (ks1, ls1)] = _as_ambient_pairs(q, None, whole, piece0, piece1)
    src = amb.space(ks, ls, p)
    dst = amb.space(k0s & ks1, l0s & ls1, p - 1)
    return connecting_map(src, k0s, l0s, dst)


def rank_of_image_sum(maps: Sequence[LinearMap]) -> int:
    if not maps:
        return 0
    t = maps[0].target_dim
    if any(m.target_dim != t for m in maps):
        raise ValueError("maps must share a target")
    return rank_mod(np.hstack([m.matrix for m in maps]), maps[0].q)
