"""SVG rendering of a diagram on the strip (decorative, floats only here)."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import List, Tuple
from xml.sax.saxutils import escape

from .diagram import Diagram
from .strip import StripPoint, tile_degree

__all__ = ["render_svg"]

SCALE = 60.0
PI = math.pi


def _xy(p: StripPoint) -> Tuple[float, float]:
    return p.k1 * PI + math.atan(p.c1), p.k2 * PI + math.atan(p.c2)


def _square_labels(k1: int, k2: int) -> str:
    """Tile degrees met by the square, from a couple of sample points."""
    s = k1 + k2
    if s == 0:
        samples = [(1, -1), (-1, 1)]
    elif s == 1:
        samples = [(Fraction(-1, 2), Fraction(-1, 2))]
    else:
        samples = [(Fraction(1, 2), Fraction(1, 2))]
    degrees = sorted({tile_degree(StripPoint(k1, k2, a, b)) for a, b in samples})
    return "/".join(str(n) for n in degrees)


def render_svg(d: Diagram, margin: int = 1) -> str:
    """Strip window around the diagram's squares, with the chart grid, tile degrees and dots."""
    squares = [p.square for p in d] or [(0, 0)]
    k1s = [k for k, _ in squares]
    k2s = [k for _, k in squares]
    lo1, hi1 = min(k1s) - margin, max(k1s) + margin
    lo2, hi2 = min(k2s) - margin, max(k2s) + margin
    x0, x1 = (lo1 - 0.5) * PI, (hi1 + 0.5) * PI
    y0, y1 = (lo2 - 0.5) * PI, (hi2 + 0.5) * PI
    width, height = (x1 - x0) * SCALE, (y1 - y0) * SCALE

    def sx(x):
        return (x - x0) * SCALE

    def sy(y):
        return (y1 - y) * SCALE

    out: List[str] = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:.1f}" height="{height:.1f}" '
        f'viewBox="0 0 {width:.1f} {height:.1f}" font-family="sans-serif" font-size="12">',
        f'<rect width="{width:.1f}" height="{height:.1f}" fill="white"/>',
    ]
    # strip -pi <= x + y <= pi, clipped to the window
    corners = [(x0, -PI - x0), (x1, -PI - x1), (x1, PI - x1), (x0, PI - x0)]
    poly = " ".join(f"{sx(x):.1f},{sy(y):.1f}" for x, y in corners)
    out.append(f'<clipPath id="win"><rect width="{width:.1f}" height="{height:.1f}"/></clipPath>')
    out.append(f'<polygon points="{poly}" fill="#eef3fb" clip-path="url(#win)"/>')
    for k in range(lo1, hi1 + 2):
        x = sx((k - 0.5) * PI)
        out.append(f'<line x1="{x:.1f}" y1="0" x2="{x:.1f}" y2="{height:.1f}" stroke="#bbb" stroke-dasharray="3,3"/>')
    for k in range(lo2, hi2 + 2):
        y = sy((k - 0.5) * PI)
        out.append(f'<line x1="0" y1="{y:.1f}" x2="{width:.1f}" y2="{y:.1f}" stroke="#bbb" stroke-dasharray="3,3"/>')
    for c in (-PI, PI):
        out.append(f'<line x1="{sx(x0):.1f}" y1="{sy(c - x0):.1f}" x2="{sx(x1):.1f}" y2="{sy(c - x1):.1f}" '
                   f'stroke="#335" stroke-width="2" clip-path="url(#win)"/>')
    for k1 in range(lo1, hi1 + 1):
        for k2 in range(lo2, hi2 + 1):
            if abs(k1 + k2) > 1:
                continue
            label = _square_labels(k1, k2)
            out.append(f'<text x="{sx(k1 * PI - 1.3):.1f}" y="{sy(k2 * PI + 1.3):.1f}" fill="#789">'
                       f'{escape(label)}</text>')
    for p, m in d.items():
        x, y = _xy(p)
        colour = "#999" if p.on_boundary else "#c22"
        out.append(f'<circle cx="{sx(x):.1f}" cy="{sy(y):.1f}" r="4" fill="{colour}"><title>{escape(str(p))}</title></circle>')
        if m > 1:
            out.append(f'<text x="{sx(x) + 6:.1f}" y="{sy(y) - 6:.1f}">{m}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
