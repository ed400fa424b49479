"""Exact geometry of the strip.

A point is stored in chart form ``(k1, k2 | c1, c2)`` and stands for
``(k1*pi + arctan c1, k2*pi + arctan c2)``.  Every predicate below is decided
on the integers ``k`` and the rationals ``c``; no floating point is involved.

Order convention: ``u <= v`` iff ``u1 >= v1`` and ``u2 <= v2``.  With this
choice the fundamental domain sits on the ``x <= y`` side and diagrams live on
the ``y <= x`` side.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple, Union

__all__ = [
    "INF",
    "Ext",
    "StripPoint",
    "PairDescriptor",
    "Region",
    "as_fraction",
    "format_rational",
    "format_ext",
    "poset_leq",
    "apply_T",
    "embed_diag",
    "fauxtan",
    "dist",
    "dist_to_boundary",
    "nearest_boundary_point",
    "in_fundamental_domain",
    "tile_degree",
    "region_classify",
    "rho",
    "pair_at",
]

INF = math.inf
Ext = Union[Fraction, float]  # a rational or +-inf


def as_fraction(x) -> Fraction:
    """Coerce ints, strings like ``'3/4'`` and Fractions; floats are refused."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError(f"refusing float {x!r}: chart values must be exact")
    return Fraction(x)


def format_rational(x: Fraction) -> str:
    x = as_fraction(x)
    return f"{x.numerator}/{x.denominator}"


def format_ext(x: Ext) -> str:
    if x == INF:
        return "inf"
    if x == -INF:
        return "-inf"
    return format_rational(x)


@dataclass(frozen=True, order=True)
class StripPoint:
    """A point of the strip in chart coordinates.

    Ordering (``<``) on the dataclass is the lexicographic order on
    ``(k1, k2, c1, c2)`` and is only used for canonical sorting; the poset
    relation is :func:`poset_leq`.
    """

    k1: int
    k2: int
    c1: Fraction
    c2: Fraction

    def __post_init__(self):
        object.__setattr__(self, "k1", int(self.k1))
        object.__setattr__(self, "k2", int(self.k2))
        object.__setattr__(self, "c1", as_fraction(self.c1))
        object.__setattr__(self, "c2", as_fraction(self.c2))
        s = self.k1 + self.k2
        if s not in (-1, 0, 1):
            raise ValueError(f"branch sum {s} leaves the strip: {self}")
        if s == 1 and self.c1 + self.c2 > 0:
            raise ValueError(f"point beyond the upper boundary line: {self}")
        if s == -1 and self.c1 + self.c2 < 0:
            raise ValueError(f"point beyond the lower boundary line: {self}")

    @property
    def square(self) -> Tuple[int, int]:
        return (self.k1, self.k2)

    @property
    def on_boundary(self) -> bool:
        return self.k1 + self.k2 in (-1, 1) and self.c1 + self.c2 == 0

    @property
    def fauxtans(self) -> Tuple[Fraction, Fraction]:
        return fauxtan(self.k1, self.c1), fauxtan(self.k2, self.c2)

    def __str__(self) -> str:
        return f"{self.k1} {self.k2} {format_rational(self.c1)} {format_rational(self.c2)}"

    def __repr__(self) -> str:
        return f"StripPoint({self.k1},{self.k2}|{self.c1},{self.c2})"

    @classmethod
    def parse(cls, text: str) -> "StripPoint":
        parts = text.split()
        if len(parts) != 4:
            raise ValueError(f"expected 'k1 k2 c1 c2', got {text!r}")
        return cls(int(parts[0]), int(parts[1]), Fraction(parts[2]), Fraction(parts[3]))


def poset_leq(u: StripPoint, v: StripPoint) -> bool:
    """``u <= v`` in the strip order (first coordinate reversed)."""
    return (u.k1, u.c1) >= (v.k1, v.c1) and (u.k2, u.c2) <= (v.k2, v.c2)


def apply_T(u: StripPoint, power: int = 1) -> StripPoint:
    """Apply the glide reflection ``T(x, y) = (-pi - y, pi - x)`` ``power`` times.

    ``T**2`` is the translation by ``(-2pi, 2pi)``, so any power reduces to a
    translation followed by at most one reflection step.
    """
    m, r = divmod(power, 2)
    k1, k2, c1, c2 = u.k1 - 2 * m, u.k2 + 2 * m, u.c1, u.c2
    if r:
        k1, k2, c1, c2 = -1 - k2, 1 - k1, -c2, -c1
    return StripPoint(k1, k2, c1, c2)


def embed_diag(t) -> StripPoint:
    t = as_fraction(t)
    return StripPoint(0, 0, t, t)


def fauxtan(k: int, c) -> Fraction:
    """Periodic tangent variant: the chart value on even branches, its negative on odd ones."""
    c = as_fraction(c)
    return c if k % 2 == 0 else -c


def dist(u: StripPoint, v: StripPoint) -> Ext:
    if u.square != v.square:
        return INF
    return max(abs(u.c1 - v.c1), abs(u.c2 - v.c2))


def dist_to_boundary(u: StripPoint) -> Ext:
    if (u.k1 + u.k2) % 2 == 0:
        return INF
    return abs(u.c1 + u.c2) / 2


def nearest_boundary_point(u: StripPoint) -> Optional[StripPoint]:
    """The closest point of the boundary in u's square, or None for even squares."""
    if (u.k1 + u.k2) % 2 == 0:
        return None
    t = (u.c1 - u.c2) / 2
    return StripPoint(u.k1, u.k2, t, -t)


def _in_up_diag(k1: int, k2: int, c1: Fraction, c2: Fraction) -> bool:
    # closed upset of the embedded diagonal
    return k1 <= 0 and k2 >= 0 and ((k1, k2) != (0, 0) or c1 <= c2)


def in_fundamental_domain(u: StripPoint) -> bool:
    if not _in_up_diag(u.k1, u.k2, u.c1, u.c2):
        return False
    # membership of T^-1(u) in the upset decides membership of u in its T-image
    return not _in_up_diag(1 - u.k2, -1 - u.k1, -u.c2, -u.c1)


def tile_degree(u: StripPoint) -> int:
    """The unique ``n`` with ``T**n(u)`` in the fundamental domain."""
    bound = abs(u.k1) + abs(u.k2) + 2
    # y - x is about (k2 - k1) * pi and each T step adds 2pi
    guess = (u.k1 - u.k2) // 2
    for step in range(bound + 1):
        for n in {guess + step, guess - step}:
            if in_fundamental_domain(apply_T(u, n)):
                return n
    raise ValueError(f"no tile found within {bound} steps for {u!r}")


@dataclass(frozen=True)
class Region:
    """Region tag: ``kind`` is one of InR, Lift, OnBoundary, OutsideS.

    For lifts, ``n`` is the number of T-steps into the reference region,
    ``shape`` is E1, E2 or E3, and ``variant`` (E3 only) is LeqDiag or GtDiag.
    """

    kind: str
    n: Optional[int] = None
    shape: Optional[str] = None
    variant: Optional[str] = None


_REFERENCE_SQUARES = {(-1, 0): "E1", (0, 1): "E2", (0, 0): "E3"}


def _in_support_closure(u: StripPoint) -> bool:
    return u.k1 >= 0 and u.k2 <= 0 and ((u.k1, u.k2) != (0, 0) or u.c2 <= u.c1)


def region_classify(u: StripPoint) -> Region:
    if not _in_support_closure(u):
        return Region("OutsideS")
    if u.on_boundary:
        return Region("OnBoundary")
    if u.square == (0, 0):
        return Region("InR")
    v = u
    for n in range(1, abs(u.k1) + abs(u.k2) + 3):
        v = apply_T(v)
        shape = _REFERENCE_SQUARES.get(v.square)
        if shape is not None:
            variant = None
            if shape == "E3":
                variant = "LeqDiag" if v.c1 <= v.c2 else "GtDiag"
            return Region("Lift", n, shape, variant)
    raise AssertionError(f"no reference square reached from {u!r}")


def _clamp(k: int, c: Fraction) -> Ext:
    if k == 0:
        return c
    return -INF if k < 0 else INF


@dataclass(frozen=True)
class PairDescriptor:
    """A pair ``(I, C)`` of closed subsets of the extended line.

    ``I = [i_lo, i_hi]``.  ``C`` is the complement of the open gap ``c_gap``,
    where an infinite endpoint of the gap is included in the gap; ``c_gap`` of
    None means ``C`` is empty.
    """

    i_lo: Ext
    i_hi: Ext
    c_gap: Optional[Tuple[Ext, Ext]]

    @property
    def gap(self) -> Tuple[Ext, Ext]:
        return self.c_gap if self.c_gap is not None else (-INF, INF)

    def in_I(self, t: Ext) -> bool:
        return self.i_lo <= t <= self.i_hi

    def in_C(self, t: Ext) -> bool:
        if self.c_gap is None:
            return False
        a, b = self.c_gap
        return (a != -INF and t <= a) or (b != INF and t >= b)

    def finite_endpoints(self):
        pts = [self.i_lo, self.i_hi, *self.gap]
        return sorted({p for p in pts if p not in (INF, -INF)})

    def contained_in(self, other: "PairDescriptor") -> bool:
        """Componentwise inclusion ``I <= I'`` and ``C <= C'``."""
        i_ok = other.i_lo <= self.i_lo and self.i_hi <= other.i_hi
        a, b = self.gap
        a2, b2 = other.gap
        return i_ok and a <= a2 and b2 <= b

    def __str__(self) -> str:
        c = "empty" if self.c_gap is None else (
            f"R\\({format_ext(self.c_gap[0])},{format_ext(self.c_gap[1])})")
        return f"I=[{format_ext(self.i_lo)},{format_ext(self.i_hi)}] C={c}"


def _gap_or_none(a: Ext, b: Ext) -> Optional[Tuple[Ext, Ext]]:
    return None if (a == -INF and b == INF) else (a, b)


def rho(u: StripPoint) -> PairDescriptor:
    """The pair assigned to a point of the fundamental domain."""
    if not in_fundamental_domain(u):
        raise ValueError(f"{u!r} is not in the fundamental domain")
    lo, hi = _clamp(u.k1, u.c1), _clamp(u.k2, u.c2)
    w = apply_T(u, -1)
    a, b = _clamp(w.k2, w.c2), _clamp(w.k1, w.c1)
    d = PairDescriptor(lo, hi, _gap_or_none(a, b))
    # a bounded interval comes with empty C; a nonempty C sits inside I
    assert lo <= hi and a <= b
    if lo != -INF and hi != INF:
        assert d.c_gap is None
    if d.c_gap is not None:
        assert (a == -INF or lo == -INF) and (b == INF or hi == INF)
    return d


def pair_at(u: StripPoint) -> Tuple[PairDescriptor, int]:
    n = tile_degree(u)
    return rho(apply_T(u, n)), n
