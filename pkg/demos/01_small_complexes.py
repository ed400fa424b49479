# Diagrams of a few small complexes.
# Run from the repository root: python demos/01_small_complexes.py

from fractions import Fraction as F

from extpers.io import format_diagram
from extpers.plot import render_svg
from extpers.rish import build_context, evaluate_map, evaluate_space, extract_diagram
from extpers.simplex import build_complex
from extpers.strip import StripPoint, tile_degree

# a single edge from -1 to 3/2 gives one point in the centre square,
# with chart coordinates (max, min)
edge = build_complex([("a", -1), ("b", F(3, 2))], [["a", "b"]])
print(format_diagram(extract_diagram(build_context(edge))))

# a circle: the centre point again, plus a point one square down the diagonal
square = build_complex(
    [("a", -1), ("b", 0), ("c", 1), ("d", 0)],
    [["a", "b"], ["b", "c"], ["c", "d"], ["d", "a"]],
)
ctx = build_context(square, q=3)
dgm = extract_diagram(ctx)
for p, mult in dgm.items():
    print(p, "multiplicity", mult, "tile", tile_degree(p))

# the loop survives into tile 0 through a nonzero map
u, v = StripPoint(0, 0, 1, -1), StripPoint(0, 0, -1, 1)
print("dim at u:", evaluate_space(ctx, u).dim, " dim at v:", evaluate_space(ctx, v).dim)
print("rank u -> v:", evaluate_map(ctx, u, v).rank)

# relative version: collapse the two zero vertices
rel = build_complex(
    [("a", -1), ("b", 0), ("c", 1), ("d", 0)],
    [["a", "b"], ["b", "c"], ["c", "d"], ["d", "a"]],
    [["b"], ["d"]],
)
print(format_diagram(extract_diagram(build_context(rel))))

with open("square.svg", "w") as fh:
    fh.write(render_svg(dgm))
print("wrote square.svg")
