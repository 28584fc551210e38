"""Intervals, metric triangles, gates, convexity and gated hulls."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import NotApplicable
from .graph import Graph, list_to_mask, lowest, mask_to_list, popcount

KINDS = ("plain", "convex", "gated")


class VertexSet(frozenset):
    """Frozenset of vertex ids. ``kind`` says "gated" or "convex" when the producer guarantees it."""

    def __new__(cls, members: Iterable[int] = (), kind: str = "plain"):
        if kind not in KINDS:
            raise ValueError(f"unknown kind {kind!r}")
        obj = super().__new__(cls, members)
        obj.kind = kind
        return obj

    @property
    def members(self) -> tuple[int, ...]:
        return tuple(sorted(self))

    def __repr__(self):
        return f"VertexSet({list(self.members)}, kind={self.kind!r})"

    def __reduce__(self):
        return (VertexSet, (tuple(self), self.kind))


def _check_vertex(g: Graph, *vs: int) -> None:
    for v in vs:
        if not (isinstance(v, int) and 0 <= v < g.n):
            raise ValueError(f"vertex {v!r} not in graph with n={g.n}")


def _as_mask(g: Graph, s) -> int:
    vs = list(s)
    _check_vertex(g, *vs)
    if not vs:
        raise ValueError("vertex set must be nonempty")
    return list_to_mask(vs)


def is_connected_mask(g: Graph, mask: int) -> bool:
    start = mask & -mask
    seen, frontier = start, start
    while frontier:
        grow = 0
        for v in mask_to_list(frontier):
            grow |= g.adj_mask[v]
        frontier = grow & mask & ~seen
        seen |= frontier
    return seen == mask


def interval(g: Graph, u: int, v: int) -> VertexSet:
    _check_vertex(g, u, v)
    return VertexSet(mask_to_list(g.interval_masks()[u][v]))


@dataclass(frozen=True)
class MetricTriangle:
    """Three vertices and their side lengths. ``size`` is the longest side;
    in a weakly modular graph all three sides agree."""

    v1: int
    v2: int
    v3: int
    sides: tuple[int, int, int]

    @property
    def size(self) -> int:
        return max(self.sides)

    @property
    def equilateral(self) -> bool:
        return len(set(self.sides)) == 1


def _triangle(g: Graph, a: int, b: int, c: int) -> MetricTriangle:
    return MetricTriangle(a, b, c, (g.d(a, b), g.d(b, c), g.d(a, c)))


def quasi_median(g: Graph, x: int, y: int, z: int) -> MetricTriangle:
    """Greedy quasi-median of (x, y, z); ties go to the smallest vertex id."""
    _check_vertex(g, x, y, z)
    I = g.interval_masks()
    D = g.dist

    def farthest(src, mask):
        best, best_d = None, -1
        for v in mask_to_list(mask):
            if D[src, v] > best_d:
                best, best_d = v, D[src, v]
        return best

    v1 = farthest(x, I[x][y] & I[x][z])
    v2 = farthest(y, I[y][v1] & I[y][z])
    v3 = farthest(z, I[z][v1] & I[z][v2])
    return _triangle(g, v1, v2, v3)


def is_metric_triangle(g: Graph, a: int, b: int, c: int) -> bool:
    I = g.interval_masks()
    return (I[a][b] & I[a][c] == 1 << a and I[b][a] & I[b][c] == 1 << b
            and I[c][a] & I[c][b] == 1 << c)


def max_metric_triangle_side(g: Graph) -> tuple[int, MetricTriangle]:
    """Largest side over all metric triangles, with the lexicographically
    smallest witness. A single vertex is a metric triangle of size 0."""
    n = g.n
    D = g.dist.tolist()
    # closer[a][b]: neighbours of a lying one step closer to b
    closer = [[g.adj_mask[a] & g.sphere(b, D[a][b] - 1) for b in range(n)] for a in range(n)]
    best = 0
    wit = MetricTriangle(0, 0, 0, (0, 0, 0))
    for a in range(n):
        ca = closer[a]
        for b in range(a + 1, n):
            cab, cb = ca[b], closer[b]
            for c in range(b + 1, n):
                side = max(D[a][b], D[b][c], D[a][c])
                if side <= best:
                    continue
                if cab & ca[c] or cb[a] & cb[c] or closer[c][a] & closer[c][b]:
                    continue
                best = side
                wit = _triangle(g, a, b, c)
    return best, wit


def gate(g: Graph, s, x: int):
    """Gate of ``x`` in ``s``: the vertex of ``s`` lying on a geodesic from x to
    every member of s. Returns None when no gate exists."""
    mask = _as_mask(g, s)
    _check_vertex(g, x)
    return _gate_mask(g, mask, x)


def _gate_mask(g: Graph, mask: int, x: int):
    if mask >> x & 1:
        return x
    D = g.dist
    members = mask_to_list(mask)
    dx = D[x]
    near = min(members, key=lambda v: (dx[v], v))
    I = g.interval_masks()[x]
    for y in members:
        if not I[y] >> near & 1:
            return None
    return near


def _require_connected(g: Graph, mask: int) -> None:
    if not is_connected_mask(g, mask):
        raise ValueError("vertex set must induce a connected subgraph")


def _require_wm(g: Graph, what: str) -> None:
    from .recognition import is_weakly_modular

    if not is_weakly_modular(g):
        raise NotApplicable(f"{what} requires a weakly modular graph")


def is_convex(g: Graph, s, method: str = "definition") -> bool:
    """Convexity of ``s``.

    ``method="local"`` uses the local criterion (a connected set is convex iff
    it contains every 2-interval spanned by two of its members that already
    share a neighbour inside it); valid only on weakly modular graphs.
    """
    mask = _as_mask(g, s)
    _require_connected(g, mask)
    I = g.interval_masks()
    members = mask_to_list(mask)
    if method == "definition":
        return all(I[u][v] & ~mask == 0 for i, u in enumerate(members) for v in members[i + 1:])
    if method != "local":
        raise ValueError(f"unknown method {method!r}")
    _require_wm(g, "the local convexity test")
    for u in members:
        for v in mask_to_list(g.sphere(u, 2) & mask):
            if v > u and g.adj_mask[u] & g.adj_mask[v] & mask and I[u][v] & ~mask:
                return False
    return True


def is_gated(g: Graph, s, method: str = "definition") -> bool:
    """Gatedness of ``s``. ``method="local"``: on weakly modular graphs a
    connected set is gated iff it absorbs common neighbours of its members."""
    mask = _as_mask(g, s)
    _require_connected(g, mask)
    if method == "definition":
        return all(_gate_mask(g, mask, x) is not None for x in range(g.n) if not mask >> x & 1)
    if method != "local":
        raise ValueError(f"unknown method {method!r}")
    _require_wm(g, "the local gatedness test")
    return _absorbs_common_neighbours(g, mask)


def _absorbs_common_neighbours(g: Graph, mask: int) -> bool:
    for x in range(g.n):
        if not mask >> x & 1 and popcount(g.adj_mask[x] & mask) >= 2:
            return False
    return True


def _hull_mask(g: Graph, mask: int) -> int:
    """Closure under adding common neighbours of two members (no checks)."""
    adj = g.adj_mask
    outside = [x for x in range(g.n) if not mask >> x & 1]
    changed = True
    while changed:
        changed = False
        rest = []
        for x in outside:
            common = adj[x] & mask
            if common & (common - 1):
                mask |= 1 << x
                changed = True
            else:
                rest.append(x)
        outside = rest
    return mask


def gated_hull(g: Graph, s) -> VertexSet:
    """Smallest gated set containing ``s`` (weakly modular graphs only)."""
    mask = _as_mask(g, s)
    _require_connected(g, mask)
    _require_wm(g, "gated_hull")
    return VertexSet(mask_to_list(_hull_mask(g, mask)), kind="gated")


def pair_hull(g: Graph, p: int, q: int) -> VertexSet:
    """Gated hull of the interval I(p, q)."""
    _check_vertex(g, p, q)
    _require_wm(g, "pair_hull")
    return VertexSet(mask_to_list(_hull_mask(g, g.interval_masks()[p][q])), kind="gated")


__all__ = [
    "VertexSet", "MetricTriangle", "interval", "quasi_median", "is_metric_triangle",
    "max_metric_triangle_side", "gate", "is_convex", "is_gated", "gated_hull", "pair_hull",
    "is_connected_mask", "lowest",
]
