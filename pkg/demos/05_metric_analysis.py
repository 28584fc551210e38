"""
Hyperbolicity, BFS orders and disc fillings
===========================================
"""
import networkx as nx

from wmgraphs import (Graph, bfs_order, fill_cycle, is_distance_preserving, replay,
                      verify_hyperbolicity_bounds)
from wmgraphs import generators as gen

# Grids get less hyperbolic as they grow, and the largest isometric grid
# keeps pace with delta.
for n in (2, 3, 4, 5):
    r = verify_hyperbolicity_bounds(gen.grid(n, n))
    print(f"{n}x{n} grid: delta={r.delta} mu={r.mu} kappa={r.kappa} thinness={r.nu_thin}")

# Triangles are the awkward case for the metric-triangle bound: delta is 0
# while the triangle itself is a metric triangle of side 1.
r = verify_hyperbolicity_bounds(gen.complete(3))
print("K3:", r.checks)

# Any BFS order of a weakly modular graph keeps every prefix isometric.
g = gen.random_swm(5, 30)
order = bfs_order(g, 0, seed=1).order
print("BFS prefix-isometric:", is_distance_preserving(g, order)[0])

# On the 6-cycle, putting two antipodes first breaks this immediately.
print("C6, antipodes first:", is_distance_preserving(gen.cycle(6), [0, 3, 1, 2, 4, 5]))

# Fill the boundary of a 4x4 grid by triangle and square moves, then replay
# the moves to watch the cycle shrink to a point.
grid = gen.grid(4, 4)
boundary = [0, 1, 2, 3, 7, 11, 15, 14, 13, 12, 8, 4]
f = fill_cycle(grid, boundary)
print(f"boundary of length {f.length}: area {f.area}, bound {2 * f.length ** 2}")
print("replay ends at", replay(grid, f.cycle, f.moves))

# Bigger picture: every simple cycle of the king graph.
king = Graph.from_networkx(nx.strong_product(nx.path_graph(3), nx.path_graph(3)))
areas = [fill_cycle(king, c).area for c in nx.simple_cycles(king.to_networkx(), length_bound=8)
         if len(c) >= 3]
print(f"king graph: {len(areas)} cycles, largest area {max(areas)}")
