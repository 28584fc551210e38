"""
Boolean-gated sets, G* and the thickening
=========================================

swm graphs come with a poset of Boolean-gated sets. Its covering graph G*
is orientable modular and holds a copy of G with every distance doubled;
the thickening adds an edge for each Boolean pair.
"""
import numpy as np

from wmgraphs import (barycentric_graph, boolean_gated_sets, check_helly, normal_bg_path,
                      thickening, wm_skeleton)
from wmgraphs import generators as gen
from wmgraphs.recognition import check_modular

g = gen.random_swm(seed=11, max_vertices=18)
print(f"random swm graph: n={g.n}, m={g.m}")

poset = boolean_gated_sets(g)
sizes, counts = np.unique(poset.diameters, return_counts=True)
print(len(poset), "Boolean-gated sets; count by diameter", dict(zip(sizes.tolist(), counts.tolist())))

bary = barycentric_graph(g)
h = bary.graph
org = list(bary.origin)
print("G* vertices:", h.n, " modular:", check_modular(h).label)
print("distances doubled:", np.array_equal(h.dist[np.ix_(org, org)], 2 * g.dist))

th = thickening(g)
print("thickening adds", th.m - g.m, "edges; Helly:", check_helly(th).label)

# Normal paths walk through the thickening, one Boolean-gated hull per step.
p, q = 0, int(np.argmax(g.dist[0]))
path = normal_bg_path(g, p, q)
print(f"normal path {p} -> {q}: {path.vertices} (graph distance {g.d(p, q)})")
for hull in path.hulls:
    print("   hull", sorted(hull))

# Adding diagonals of squares until nothing changes reaches the same graph
# as the thickening, one step short of the cube dimension.
skel, rank = wm_skeleton(g)
print("diagonal rank:", rank, " skeleton equals thickening:", skel.edges == th.edges)
