"""Named graphs and seeded random swm-graphs.

Random swm-graphs are assembled from small swm pieces (cliques, cubes and
complete bipartite graphs) by Cartesian products and gated amalgams, both of
which preserve the swm property.
"""
from __future__ import annotations

import random
from itertools import combinations, product

from .core import is_gated
from .errors import GraphFormatError
from .graph import Graph


def path(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphFormatError("a cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def grid(rows: int, cols: int) -> Graph:
    """Vertex (i, j) gets id i * cols + j."""
    return cartesian_product(path(rows), path(cols))


def cube(d: int) -> Graph:
    return Graph(1 << d, [(x, x | 1 << i) for x in range(1 << d) for i in range(d) if not x >> i & 1])


def hyperoctahedron(m: int) -> Graph:
    """Complete multipartite graph with m parts of size 2 (the octahedron for m=3)."""
    return Graph(2 * m, [(a, b) for a, b in combinations(range(2 * m), 2) if a // 2 != b // 2])


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Vertex (x, y) gets id x * h.n + y."""
    edges = [(x * h.n + a, x * h.n + b) for x in range(g.n) for a, b in h.edges]
    edges += [(x * h.n + y, z * h.n + y) for x, z in g.edges for y in range(h.n)]
    return Graph(g.n * h.n, edges)


def gated_amalgam(g: Graph, sg, h: Graph, sh) -> Graph:
    """Glue ``g`` and ``h`` by identifying ``sg[i]`` with ``sh[i]``.

    Both interfaces must be gated in their graphs and the map must be an
    isomorphism of the induced subgraphs. Vertices of ``g`` keep their ids;
    the remaining vertices of ``h`` follow in increasing order.
    """
    sg, sh = list(sg), list(sh)
    if len(sg) != len(sh) or not sg or len(set(sg)) != len(sg) or len(set(sh)) != len(sh):
        raise GraphFormatError("interfaces must be nonempty lists of distinct vertices of equal length")
    for a, b in combinations(range(len(sg)), 2):
        if g.has_edge(sg[a], sg[b]) != h.has_edge(sh[a], sh[b]):
            raise GraphFormatError("interfaces are not isomorphic under the given correspondence")
    if not is_gated(g, sg):
        raise GraphFormatError("interface is not gated in the first graph")
    if not is_gated(h, sh):
        raise GraphFormatError("interface is not gated in the second graph")
    ident = dict(zip(sh, sg))
    rest = [v for v in range(h.n) if v not in ident]
    ident.update({v: g.n + i for i, v in enumerate(rest)})
    edges = list(g.edges) + [(ident[a], ident[b]) for a, b in h.edges]
    edges = {(min(a, b), max(a, b)) for a, b in edges}
    return Graph(g.n + len(rest), sorted(edges))


def _piece(rng: random.Random) -> Graph:
    kind = rng.choice(("clique", "cube", "bipartite"))
    if kind == "clique":
        return complete(rng.randint(2, 4))
    if kind == "cube":
        return cube(rng.randint(1, 3))
    return complete_bipartite(rng.randint(1, 3), rng.randint(1, 3))


def _interfaces(g: Graph):
    """Single vertices and gated edges. The graphs built here are weakly
    modular, where an edge is gated exactly when it has no common neighbour."""
    out = [[v] for v in range(g.n)]
    out += [[a, b] for a, b in g.edges if not g.adj_mask[a] & g.adj_mask[b]]
    return out


def random_swm(seed: int, max_vertices: int = 40, min_vertices: int = 2) -> Graph:
    rng = random.Random(seed)
    target = rng.randint(min(min_vertices, max_vertices), max_vertices)
    g = _piece(rng)
    while g.n > max_vertices:
        g = _piece(rng)
    for _ in range(50):
        if g.n >= target:
            break
        h = _piece(rng)
        if rng.random() < 0.3 and g.n * h.n <= max_vertices:
            g = cartesian_product(g, h)
            continue
        gi, hi = _interfaces(g), _interfaces(h)
        size = rng.choice([1, 1, 2]) if any(len(s) == 2 for s in gi) and any(len(s) == 2 for s in hi) else 1
        a = rng.choice([s for s in gi if len(s) == size])
        b = rng.choice([s for s in hi if len(s) == size])
        if g.n + h.n - size > max_vertices:
            continue
        g = gated_amalgam(g, a, h, b)
    return g


GENERATORS = {
    "path": path,
    "cycle": cycle,
    "complete": complete,
    "grid": grid,
    "cube": cube,
    "hyperoctahedron": hyperoctahedron,
    "complete-bipartite": complete_bipartite,
}
