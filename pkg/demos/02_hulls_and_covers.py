"""
Gated hulls and universal covers
================================
"""
import networkx as nx

from wmgraphs import gated_hull, gate, universal_cover_ball
from wmgraphs import generators as gen

g = gen.grid(4, 4)

# An edge of a grid is already gated. A bent path of length two is not: its
# hull fills in the whole square.
print(sorted(gated_hull(g, {0, 1})))
print(sorted(gated_hull(g, {1, 0, 4})))

# Every vertex outside a gated set has a gate: a member lying on a shortest
# path to every other member.
square = gated_hull(g, {0, 1, 5})
print({x: gate(g, square, x) for x in (10, 15, 3)})

# Universal covers. A weakly modular graph covers itself.
ball = universal_cover_ball(gen.cube(3), 0, 3)
print("Q3 cover ball has", ball.graph.n, "vertices")

# The 7-cycle has no 2-cells to fill, so its cover is the infinite line and
# the balls grow without bound.
for r in (1, 3, 6):
    b = universal_cover_ball(gen.cycle(7), 0, r)
    is_path = nx.is_isomorphic(b.graph.to_networkx(), nx.path_graph(2 * r + 1))
    print(f"radius {r}: {b.graph.n} vertices, path: {is_path}, projection {b.projection}")
