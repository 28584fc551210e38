"""Balls in the universal cover of the triangle-square complex.

The cover is grown one sphere at a time. A candidate new vertex is a pair
(w, z): ``w`` on the current outer sphere and ``z`` a neighbour of its image
that is not yet the image of anything around ``w``. Pairs naming the same
``z`` are identified when their ``w`` ends coincide or are adjacent, or when
they close an induced square through a common neighbour one layer further in.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import NotApplicable, RadiusTooLarge
from .graph import Graph, serialize_graph
from .recognition import check_locally_weakly_modular

DEFAULT_CAP = 10 ** 6


@dataclass(frozen=True)
class CoverBall:
    graph: Graph
    projection: tuple[int, ...]
    radius: int
    base: int

    def to_json(self) -> dict:
        return {"graph": serialize_graph(self.graph), "projection": list(self.projection),
                "radius": self.radius, "base": self.base}


class _DSU:
    def __init__(self, k):
        self.parent = list(range(k))

    def find(self, i):
        root = i
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[i] != root:
            self.parent[i], i = root, self.parent[i]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def universal_cover_ball(g: Graph, v: int, r: int, cap: int = DEFAULT_CAP) -> CoverBall:
    if not check_locally_weakly_modular(g):
        raise NotApplicable("universal_cover_ball requires a locally weakly modular graph")
    if r < 0:
        raise ValueError("radius must be nonnegative")
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} not in graph")
    gadj = g.adj_mask

    def is_edge(a, b):
        return gadj[a] >> b & 1

    proj = [v]
    nbrs: list[set[int]] = [set()]
    if r >= 1:
        for u in g.adj[v]:
            proj.append(u)
            nbrs.append(set())
        for i in range(1, len(proj)):
            nbrs[0].add(i)
            nbrs[i].add(0)
            for j in range(i + 1, len(proj)):
                if is_edge(proj[i], proj[j]):
                    nbrs[i].add(j)
                    nbrs[j].add(i)
    inner = {0}                        # B_{i-1}
    sphere = list(range(1, len(proj)))  # S_i

    for _ in range(1, r):
        pairs = []
        for w in sphere:
            seen = {proj[w]} | {proj[x] for x in nbrs[w]}
            pairs.extend((w, z) for z in g.adj[proj[w]] if z not in seen)
        by_z: dict[int, list[int]] = {}
        for idx, (_, z) in enumerate(pairs):
            by_z.setdefault(z, []).append(idx)
        dsu = _DSU(len(pairs))
        for z, members in by_z.items():
            for a_pos, a in enumerate(members):
                w = pairs[a][0]
                for b in members[a_pos + 1:]:
                    w2 = pairs[b][0]
                    if w2 in nbrs[w]:
                        dsu.union(a, b)             # (Z1)
                        continue
                    fw, fw2 = proj[w], proj[w2]
                    for u in nbrs[w] & nbrs[w2] & inner:   # (Z2)
                        fu = proj[u]
                        if (is_edge(fu, fw) and is_edge(fu, fw2) and not is_edge(fu, z)
                                and not is_edge(fw, fw2)):
                            dsu.union(a, b)
                            break
        class_id = {}
        new_vertices = []
        for idx in range(len(pairs)):
            root = dsu.find(idx)
            if root not in class_id:
                class_id[root] = len(proj)
                proj.append(pairs[idx][1])
                nbrs.append(set())
                new_vertices.append(class_id[root])
                if len(proj) > cap:
                    raise RadiusTooLarge(f"cover ball exceeds {cap} vertices")
        by_w: dict[int, list[int]] = {}
        for idx, (w, z) in enumerate(pairs):
            c = class_id[dsu.find(idx)]
            nbrs[w].add(c)
            nbrs[c].add(w)
            by_w.setdefault(w, []).append(c)
        for w, cs in by_w.items():
            for i, a in enumerate(cs):
                for b in cs[i + 1:]:
                    if a != b and is_edge(proj[a], proj[b]):
                        nbrs[a].add(b)
                        nbrs[b].add(a)
        inner |= set(sphere)
        sphere = new_vertices
        if not sphere:
            break

    edges = [(a, b) for a in range(len(proj)) for b in nbrs[a] if a < b]
    return CoverBall(Graph(len(proj), edges), tuple(proj), r, v)


def check_cover_ball(ball: CoverBall, g: Graph) -> list[str]:
    """Return a list of violated invariants (empty when the ball is sound):
    projection is a graph map, is injective and edge-faithful on unit balls
    of interior vertices, layers match distances from the base, and TC/QC hold
    at the base."""
    problems = []
    h, f = ball.graph, ball.projection
    D = h.dist
    for a, b in h.edges:
        if not g.has_edge(f[a], f[b]):
            problems.append(f"edge {a}-{b} maps to non-edge")
    for x in range(h.n):
        if D[0, x] >= ball.radius:
            continue
        closed = (x,) + h.adj[x]
        images = [f[y] for y in closed]
        if len(set(images)) != len(images) or set(images) != {f[x], *g.adj[f[x]]}:
            problems.append(f"unit ball of {x} not mapped bijectively")
            continue
        for i, a in enumerate(closed):
            for b in closed[i + 1:]:
                if h.has_edge(a, b) != g.has_edge(f[a], f[b]):
                    problems.append(f"unit ball of {x} not mapped isomorphically")
                    break
    sm = h.sphere_masks(0)
    adj = h.adj_mask
    for vv, w in h.edges:
        k = D[0, vv]
        if k == D[0, w] and k >= 1 and not adj[vv] & adj[w] & sm[k - 1]:
            problems.append(f"TC fails at base for edge {vv}-{w}")
    for z in range(h.n):
        kz = int(D[0, z])
        if kz < 3:
            continue
        below = [y for y in h.adj[z] if D[0, y] == kz - 1]
        for i, a in enumerate(below):
            for b in below[i + 1:]:
                if not h.has_edge(a, b) and not adj[a] & adj[b] & sm[kz - 2]:
                    problems.append(f"QC fails at base for {a},{b},{z}")
    return problems
