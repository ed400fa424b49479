# Build a complex realizing a diagram, then realize a whole matching.

from fractions import Fraction as F

from extpers.diagram import Diagram
from extpers.io import format_diagram
from extpers.realize import build_booklet, lift_point, realize_matching, represent
from extpers.rish import diagram_of
from extpers.strip import StripPoint as P

# one gadget per point; the horn over (1,0) is a small relative complex
g = lift_point(P(1, 0, -1, F(-1, 2)))
print(g.region, "vertices:", len(g.complex.vertices), "relative simplices:", len(g.sub))
print(format_diagram(diagram_of(g.pair())))

d = Diagram.from_points([
    P(0, 0, 2, -2),
    P(1, 0, -1, F(-1, 2)),
    P(0, -1, F(3, 2), 1),
    P(1, -1, -1, 1),
])
booklet = build_booklet(represent(d))
print("booklet:", len(booklet.pair.complex.vertices), "vertices,",
      len(booklet.page_maps), "pages")
for page, point in booklet.page_table():
    print("  page", page, "->", point)
print("recovered:", diagram_of(booklet.pair) == d)

# two functions on one complex, as far apart as the diagrams
nu = Diagram.from_points([P(0, 0, F(5, 2), -2), P(1, -1, F(-1, 2), 1)])
r = realize_matching(d, nu)
for key in ("bottleneck", "sup_norm", "matching_norm", "f_diagram_ok", "g_diagram_ok"):
    print(f"{key:>14}: {r.certificate[key]}")
