"""Plain-text file formats.

Every rational is written as a reduced ``p/q``; extended values use ``inf``
and ``-inf``.  Readers accept integers and ``p/q`` and ignore blank lines
and ``#`` comments.  Writers sort their output, so equal data gives equal
bytes.
"""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from .diagram import Diagram
from .matching import Matching
from .simplex import PLPair, build_complex
from .strip import Ext, StripPoint, format_ext, format_rational

__all__ = [
    "ParseError",
    "parse_rational",
    "read_complex",
    "write_complex",
    "read_values",
    "write_values",
    "read_diagram",
    "write_diagram",
    "format_diagram",
    "read_matching",
    "write_matching",
    "format_matching",
    "write_pages",
    "read_pages",
]

PathLike = Union[str, Path]


class ParseError(ValueError):
    def __init__(self, source: str, line: int, message: str):
        super().__init__(f"{source}:{line}: {message}")
        self.source = source
        self.line = line


def parse_rational(token: str) -> Fraction:
    if any(ch in token for ch in ".eE"):
        raise ValueError(f"floats are not accepted: {token!r}")
    return Fraction(token)


def _lines(path: PathLike):
    """Yield ``(line number, tokens)`` for non-empty, non-comment lines."""
    with open(path, encoding="utf-8") as fh:
        for number, raw in enumerate(fh, 1):
            text = raw.split("#", 1)[0].strip()
            if text:
                yield number, text.split()


def _point(tokens: Sequence[str]) -> StripPoint:
    if len(tokens) != 4:
        raise ValueError(f"a point needs 4 fields 'k1 k2 c1 c2', got {len(tokens)}")
    return StripPoint(int(tokens[0]), int(tokens[1]), parse_rational(tokens[2]), parse_rational(tokens[3]))


# ------------------------------------------------------------------ complexes

def read_complex(path: PathLike, relative: bool = True) -> PLPair:
    """Read ``v <id> <value>``, ``s <id>...`` and ``a <id>...`` lines.

    With ``relative=False`` the ``a`` lines are parsed but not used.
    """
    values: List[Tuple[str, Fraction]] = []
    tops, sub = [], []
    seen = set()
    src = str(path)
    for number, tokens in _lines(path):
        kind, rest = tokens[0], tokens[1:]
        try:
            if kind == "v":
                if len(rest) != 2:
                    raise ValueError("expected 'v <id> <value>'")
                if rest[0] in seen:
                    raise ValueError(f"duplicate vertex {rest[0]!r}")
                seen.add(rest[0])
                values.append((rest[0], parse_rational(rest[1])))
            elif kind in ("s", "a"):
                if not rest:
                    raise ValueError(f"empty '{kind}' line")
                missing = [v for v in rest if v not in seen]
                if missing:
                    raise ValueError(f"unknown vertex {missing[0]!r} (declare 'v' lines first)")
                if len(set(rest)) != len(rest):
                    raise ValueError("repeated vertex in a simplex")
                (tops if kind == "s" else sub).append(rest)
            else:
                raise ValueError(f"unknown record type {kind!r}")
        except ValueError as exc:
            raise ParseError(src, number, str(exc)) from None
    if not values:
        raise ParseError(src, 0, "no vertices")
    try:
        return build_complex(values, tops, sub if relative else ())
    except ValueError as exc:
        raise ParseError(src, 0, str(exc)) from None


def format_complex(pair: PLPair, values: Optional[Sequence[Fraction]] = None) -> str:
    cx = pair.complex
    vals = pair.values if values is None else values
    out = [f"v {lab} {format_rational(Fraction(v))}" for lab, v in zip(cx.vertices, vals)]
    tops = sorted(cx.maximal(), key=lambda s: (len(s), s))
    out += ["s " + " ".join(cx.vertices[i] for i in s) for s in tops if len(s) > 1]
    sub = pair.sub
    sub_tops = sorted((s for s in sub if not any(set(s) < set(t) for t in sub)), key=lambda s: (len(s), s))
    out += ["a " + " ".join(cx.vertices[i] for i in s) for s in sub_tops]
    return "\n".join(out) + "\n"


def write_complex(path: PathLike, pair: PLPair, values: Optional[Sequence[Fraction]] = None) -> None:
    Path(path).write_text(format_complex(pair, values), encoding="utf-8")


def read_values(path: PathLike, pair: PLPair) -> Tuple[Fraction, ...]:
    """Read ``<id> <value>`` lines covering every vertex of ``pair``."""
    found: Dict[str, Fraction] = {}
    for number, tokens in _lines(path):
        try:
            if len(tokens) != 2:
                raise ValueError("expected '<id> <value>'")
            if tokens[0] not in pair.complex.vertices:
                raise ValueError(f"unknown vertex {tokens[0]!r}")
            found[tokens[0]] = parse_rational(tokens[1])
        except ValueError as exc:
            raise ParseError(str(path), number, str(exc)) from None
    missing = [v for v in pair.complex.vertices if v not in found]
    if missing:
        raise ParseError(str(path), 0, f"no value for vertex {missing[0]!r}")
    return tuple(found[v] for v in pair.complex.vertices)


def write_values(path: PathLike, pair: PLPair, values: Sequence[Fraction]) -> None:
    lines = [f"{lab} {format_rational(Fraction(v))}" for lab, v in zip(pair.complex.vertices, values)]
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


# ------------------------------------------------------------------ diagrams

def read_diagram(path: PathLike) -> Diagram:
    counts = []
    for number, tokens in _lines(path):
        try:
            if len(tokens) != 5:
                raise ValueError("expected 'k1 k2 c1 c2 mult'")
            mult = int(tokens[4])
            if mult <= 0:
                raise ValueError("multiplicity must be positive")
            counts.append((_point(tokens[:4]), mult))
        except ValueError as exc:
            raise ParseError(str(path), number, str(exc)) from None
    return Diagram(counts)


def format_diagram(d: Diagram) -> str:
    return "".join(f"{p} {m}\n" for p, m in d.items())


def write_diagram(path: PathLike, d: Diagram) -> None:
    Path(path).write_text(format_diagram(d), encoding="utf-8")


# ------------------------------------------------------------------ matchings

def _endpoint_text(p: StripPoint) -> str:
    return f"B {p}" if p.on_boundary else str(p)


def format_matching(m: Matching) -> str:
    return "".join(f"L {_endpoint_text(l)} R {_endpoint_text(r)} {k}\n" for l, r, k in m.entries)


def write_matching(path: PathLike, m: Matching) -> None:
    Path(path).write_text(format_matching(m), encoding="utf-8")


def _endpoint(tokens: List[str]) -> StripPoint:
    boundary = tokens[0] == "B"
    p = _point(tokens[1:] if boundary else tokens)
    if boundary != p.on_boundary:
        raise ValueError(f"point {p} {'is not' if boundary else 'is'} on the boundary; fix the 'B' marker")
    return p


def read_matching(path: PathLike) -> Matching:
    entries = []
    for number, tokens in _lines(path):
        try:
            if tokens[0] != "L" or "R" not in tokens:
                raise ValueError("expected 'L <point> R <point> mult'")
            r = tokens.index("R")
            entries.append((_endpoint(tokens[1:r]), _endpoint(tokens[r + 1:-1]), int(tokens[-1])))
        except ValueError as exc:
            raise ParseError(str(path), number, str(exc)) from None
    return Matching(tuple(entries))


# ------------------------------------------------------------------ booklet sidecar

def write_pages(path: PathLike, table: Iterable[Tuple[int, StripPoint]], spine: Optional[Tuple[int, StripPoint]] = None) -> None:
    lines = []
    if spine is not None:
        lines.append(f"spine {spine[0]} {spine[1]}")
    lines += [f"page {s} {p}" for s, p in sorted(table)]
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def read_pages(path: PathLike) -> Dict[int, StripPoint]:
    table = {}
    for number, tokens in _lines(path):
        try:
            if tokens[0] not in ("page", "spine") or len(tokens) != 6:
                raise ValueError("expected 'page <index> k1 k2 c1 c2'")
            table[int(tokens[1])] = _point(tokens[2:])
        except ValueError as exc:
            raise ParseError(str(path), number, str(exc)) from None
    return table


def format_value(x: Ext) -> str:
    return format_ext(x)
