# Exact bottleneck distances between diagrams on the strip.

from fractions import Fraction as F

from extpers.diagram import Diagram
from extpers.io import format_matching
from extpers.matching import bottleneck_distance, brute_force_bottleneck, check_admissible
from extpers.strip import StripPoint as P, dist, dist_to_boundary

mu = Diagram.from_points([P(0, 0, 2, -2), P(1, 0, -1, F(-1, 2)), P(1, -1, -1, 1)])
nu = Diagram.from_points([P(0, 0, F(5, 2), -2), P(1, -1, F(-1, 2), 1)])

print("admissible:", check_admissible(mu).ok, check_admissible(nu).ok)

# points in odd squares may be sent to the boundary; even squares must pair up
print("distance to boundary:", dist_to_boundary(P(1, 0, -1, F(-1, 2))))
print("centre to centre:", dist(P(0, 0, 2, -2), P(0, 0, F(5, 2), -2)))

value, m = bottleneck_distance(mu, nu)
print("d_B =", value)
print(format_matching(m))

# the exhaustive oracle agrees on small inputs
print("brute force:", brute_force_bottleneck(mu, nu))

# an extra point in an even square cannot be absorbed
lonely = nu + Diagram.from_points([P(1, -1, 0, 0)])
print("with an unmatched even point:", bottleneck_distance(mu, lonely)[0])
