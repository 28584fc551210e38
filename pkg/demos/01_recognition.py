"""
Recognising families of weakly modular graphs
=============================================

A tour of the recognition module on a few small graphs.
"""
from wmgraphs import Graph, recognize, check_weakly_modular, decide_simple_connectivity
from wmgraphs import generators as gen

# The 5-cycle is the smallest graph that is not weakly modular. The witness
# names a base vertex and an edge at distance 2 from it with no common
# neighbour closer to the base.
print(check_weakly_modular(gen.cycle(5)))

# The 7-cycle passes the local conditions (there is nothing at distance 3
# to worry about) but fails globally, so its triangle-square complex cannot
# be simply connected.
c7 = gen.cycle(7)
report = recognize(c7)
print("C7 locally weakly modular:", report["locally-weakly-modular"].label)
print("C7 weakly modular:       ", report["weakly-modular"].label)
print("C7 simply connected:     ", decide_simple_connectivity(c7).simply_connected)

# A full report for a few familiar graphs. Only a handful of the columns
# are printed here; ClassReport.to_json() has all of them.
columns = ["weakly-modular", "modular", "bridged", "swm", "dual-polar", "Helly"]
graphs = {
    "Q3": gen.cube(3),
    "K3,3": gen.complete_bipartite(3, 3),
    "octahedron": gen.hyperoctahedron(3),
    "3x3 grid": gen.grid(3, 3),
    "W6": Graph(7, [(0, i) for i in range(1, 7)] + [(i, i % 6 + 1) for i in range(1, 7)]),
}
print(f"\n{'':12s}" + "".join(f"{c:>16s}" for c in columns))
for name, g in graphs.items():
    rep = recognize(g)
    print(f"{name:12s}" + "".join(f"{rep[c].label:>16s}" for c in columns))

# swm graphs also get their cube dimension, the largest diameter of a
# Boolean-gated set.
print("\ncube dimension of Q3:", recognize(gen.cube(3)).cube_dimension)
