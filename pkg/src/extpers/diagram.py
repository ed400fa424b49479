"""Finite multisets of strip points."""

from __future__ import annotations

from collections.abc import Mapping
from typing import Dict, Iterable, Iterator, Tuple

from .strip import StripPoint

__all__ = ["Diagram"]


class Diagram(Mapping):
    """Immutable map ``StripPoint -> positive multiplicity``, iterated in canonical order."""

    __slots__ = ("_counts",)

    def __init__(self, data=None):
        counts: Dict[StripPoint, int] = {}
        items = data.items() if isinstance(data, Mapping) else (data or ())
        for point, mult in items:
            if not isinstance(point, StripPoint):
                raise TypeError(f"diagram keys must be StripPoints, got {point!r}")
            if int(mult) != mult or mult < 0:
                raise ValueError(f"multiplicity must be a nonnegative integer, got {mult!r}")
            if mult:
                counts[point] = counts.get(point, 0) + int(mult)
        self._counts = dict(sorted(counts.items()))

    @classmethod
    def from_points(cls, points: Iterable[StripPoint]) -> "Diagram":
        return cls((p, 1) for p in points)

    def __getitem__(self, point):
        return self._counts[point]

    def get(self, point, default=0):
        return self._counts.get(point, default)

    def __iter__(self) -> Iterator[StripPoint]:
        return iter(self._counts)

    def __len__(self) -> int:
        return len(self._counts)

    def __eq__(self, other) -> bool:
        if isinstance(other, Mapping):
            return self._counts == {k: v for k, v in other.items() if v}
        return NotImplemented

    def __hash__(self):
        return hash(tuple(self._counts.items()))

    def __add__(self, other: "Diagram") -> "Diagram":
        return Diagram(list(self.items()) + list(other.items()))

    @property
    def total(self) -> int:
        return sum(self._counts.values())

    def interior(self) -> "Diagram":
        """Drop points on the boundary of the strip."""
        return Diagram((p, m) for p, m in self.items() if not p.on_boundary)

    def copies(self) -> Tuple[StripPoint, ...]:
        """Points repeated by multiplicity, in canonical order."""
        return tuple(p for p, m in self.items() for _ in range(m))

    def __repr__(self) -> str:
        inner = ", ".join(f"{p!r}: {m}" for p, m in self.items())
        return f"Diagram({{{inner}}})"
