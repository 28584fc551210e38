"""Boolean-gated machinery on swm-graphs.

An swm-graph is weakly modular with no induced K4 minus an edge and no
isometric K33 minus an edge. Every public function here checks that once per
graph (the verdict is cached on the Graph object).
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .core import VertexSet, _gate_mask, _hull_mask, pair_hull
from .errors import InvariantError, NotApplicable, RankDiverges
from .graph import Graph, list_to_mask, lowest, mask_to_list
from .recognition import is_swm


def _require_swm(g: Graph, what: str) -> None:
    if not is_swm(g):
        raise NotApplicable(f"{what} requires an swm-graph")


def _check(g: Graph, *vs):
    for v in vs:
        if not (isinstance(v, (int, np.integer)) and 0 <= v < g.n):
            raise ValueError(f"vertex {v!r} not in graph with n={g.n}")


# -- Boolean pairs -------------------------------------------------------------
def _join(I, x, y, top, box):
    """Median of (x, y, top) inside ``box``; None unless unique."""
    m = I[x][y] & I[x][top] & I[y][top] & box
    return lowest(m) if m and not m & (m - 1) else None


def _boolean_pair_unchecked(g: Graph, p: int, q: int) -> bool:
    D = g.dist
    k = int(D[p, q])
    if k <= 1:
        return True
    I = g.interval_masks()
    box = I[p][q]
    atoms = mask_to_list(g.adj_mask[p] & box)
    x = p
    for i in range(1, k + 1):
        nxt = lowest(g.adj_mask[x] & box & g.sphere(p, i))
        if i >= 2 and not any(_join(I, x, a, q, box) == nxt for a in atoms):
            return False
        x = nxt
    return True


def boolean_pair_matrix(g: Graph) -> np.ndarray:
    """``B[p, q]`` is True iff (p, q) is a Boolean pair (diagonal included)."""
    _require_swm(g, "boolean_pair_matrix")
    B = g._cache.get("boolean")
    if B is None:
        B = np.eye(g.n, dtype=bool)
        for p, q in combinations(range(g.n), 2):
            B[p, q] = B[q, p] = _boolean_pair_unchecked(g, p, q)
        B.setflags(write=False)
        g._cache["boolean"] = B
    return B


def is_boolean_pair(g: Graph, p: int, q: int) -> bool:
    """Is I(p, q), ordered from p, a complemented modular lattice?

    Walks one maximal chain p = x0, ..., xk = q and asks that every step
    x_i -> x_{i+1} (i >= 1) be the join of x_i with a neighbour of p.
    """
    _check(g, p, q)
    return bool(boolean_pair_matrix(g)[p, q])


# -- B(G) ------------------------------------------------------------------------
@dataclass(frozen=True)
class BooleanGatedPoset:
    """Boolean-gated sets of a graph. Entries ``0..n-1`` are the singletons
    in vertex order; the rest follow sorted by (diameter, members)."""

    sets: tuple[VertexSet, ...]
    masks: tuple[int, ...]
    diameters: tuple[int, ...]

    def __len__(self):
        return len(self.sets)

    def index(self, members) -> int:
        return self.masks.index(list_to_mask(members))

    def contains(self, i: int, j: int) -> bool:
        """Is set j a subset of set i?"""
        return self.masks[j] & ~self.masks[i] == 0

    def supersets(self, mask: int) -> list[int]:
        return [i for i, m in enumerate(self.masks) if mask & ~m == 0]


def boolean_gated_sets(g: Graph) -> BooleanGatedPoset:
    _require_swm(g, "boolean_gated_sets")
    cached = g._cache.get("bgs")
    if cached is not None:
        return cached
    B = boolean_pair_matrix(g)
    I = g.interval_masks()
    D = g.dist
    found = {}
    for p, q in zip(*np.nonzero(np.triu(B, 1))):
        mask = _hull_mask(g, I[p][q])
        found.setdefault(mask, None)
    singles = [1 << v for v in range(g.n)]
    for s in singles:
        found.pop(s, None)

    def diam(mask):
        m = mask_to_list(mask)
        return int(D[np.ix_(m, m)].max())

    rest = sorted(found, key=lambda m: (diam(m), mask_to_list(m)))
    masks = tuple(singles + rest)
    poset = BooleanGatedPoset(
        tuple(VertexSet(mask_to_list(m), kind="gated") for m in masks),
        masks,
        tuple(diam(m) for m in masks),
    )
    g._cache["bgs"] = poset
    return poset


def cube_dimension(g: Graph) -> int:
    """Largest diameter of a Boolean-gated set."""
    return max(boolean_gated_sets(g).diameters)


# -- barycentric graph -----------------------------------------------------------
@dataclass(frozen=True)
class BarycentricGraph:
    graph: Graph
    sets: tuple            # node id -> frozenset of vertices of the source graph
    origin: tuple[int, ...]  # source vertex -> node id of its singleton
    orientation: tuple[tuple[int, int], ...]  # arcs (larger set -> smaller set)

    def to_json(self) -> dict:
        from .graph import serialize_graph
        return {"graph": serialize_graph(self.graph),
                "sets": [sorted(s) for s in self.sets],
                "origin": list(self.origin),
                "orientation": [list(a) for a in self.orientation]}


def covering_pairs(masks) -> list[tuple[int, int]]:
    """Pairs (big, small) where ``small`` is a maximal proper subset of ``big``."""
    out = []
    for i, small in enumerate(masks):
        ups = [j for j, big in enumerate(masks) if j != i and small & ~big == 0 and big != small]
        for j in ups:
            big = masks[j]
            if not any(k != j and masks[k] & ~big == 0 and masks[k] != big for k in ups):
                out.append((j, i))
    return out


def barycentric_graph(g: Graph) -> BarycentricGraph:
    poset = boolean_gated_sets(g)
    arcs = sorted(covering_pairs(poset.masks))
    h = Graph(len(poset), arcs)
    return BarycentricGraph(h, tuple(frozenset(s) for s in poset.sets), tuple(range(g.n)), tuple(arcs))


def barycentric_iterate(g: Graph, i: int) -> BarycentricGraph:
    """Apply the barycentric construction ``i >= 1`` times. ``origin`` maps
    vertices of ``g`` into the final graph; ``sets`` refer to the previous level."""
    if i < 1:
        raise ValueError("need at least one iteration")
    current = barycentric_graph(g)
    origin = current.origin
    for _ in range(i - 1):
        current = barycentric_graph(current.graph)
        origin = tuple(current.origin[o] for o in origin)
    return BarycentricGraph(current.graph, current.sets, origin, current.orientation)


# -- thickenings -------------------------------------------------------------------
def partial_thickening(g: Graph, k: int | None) -> Graph:
    """Join every Boolean pair at distance at most ``k`` (all of them if None)."""
    B = boolean_pair_matrix(g)
    D = g.dist
    keep = np.triu(B, 1)
    if k is not None:
        if k < 1:
            raise ValueError("k must be at least 1")
        keep &= D <= k
    return Graph(g.n, list(zip(*(a.tolist() for a in np.nonzero(keep)))))


def thickening(g: Graph) -> Graph:
    th = g._cache.get("thickening")
    if th is None:
        th = g._cache["thickening"] = partial_thickening(g, None)
    return th


def delta_dist(g: Graph) -> np.ndarray:
    return thickening(g).dist


def delta_gate(g: Graph, p: int, q: int) -> int:
    """Gate of p in the ball of the thickening centred at q whose radius is
    one less than the thickened distance from p to q."""
    _check(g, p, q)
    if p == q:
        raise ValueError("delta_gate needs p != q")
    DD = delta_dist(g)
    k = int(DD[p, q])
    ball = list_to_mask(np.flatnonzero(DD[q] <= k - 1).tolist())
    gt = _gate_mask(g, ball, p)
    if gt is None:
        raise InvariantError(f"ball of radius {k - 1} around {q} has no gate for {p}")
    return gt


@dataclass(frozen=True)
class NormalPath:
    vertices: tuple[int, ...]
    hulls: tuple[VertexSet, ...]

    def __len__(self):
        return len(self.vertices) - 1


def normal_bg_path(g: Graph, p: int, q: int) -> NormalPath:
    _check(g, p, q)
    DD = delta_dist(g)
    xs = [q]
    while xs[-1] != p:
        xs.append(delta_gate(g, xs[-1], p))
        if len(xs) > g.n:
            raise InvariantError("normal path construction does not terminate")
    xs.reverse()
    if len(xs) - 1 != DD[p, q]:
        raise InvariantError("normal path is not a geodesic of the thickening")
    hulls = tuple(pair_hull(g, a, b) for a, b in zip(xs, xs[1:]))
    return NormalPath(tuple(xs), hulls)


def is_normal_triple(g: Graph, a: int, b: int, c: int) -> bool:
    """Every Boolean-gated set containing the hull of (a, b) meets the hull of
    (b, c) only in b."""
    I = g.interval_masks()
    ab = _hull_mask(g, I[a][b])
    bc = _hull_mask(g, I[b][c])
    poset = boolean_gated_sets(g)
    return all(m & bc == 1 << b for m in poset.masks if ab & ~m == 0)


def is_normal_path(g: Graph, path) -> bool:
    B = boolean_pair_matrix(g)
    if any(a == b or not B[a, b] for a, b in zip(path, path[1:])):
        return False
    return all(is_normal_triple(g, *path[i:i + 3]) for i in range(len(path) - 2))


def verify_fellow_traveler(g: Graph, p: int, q: int, x: int, y: int) -> bool:
    _check(g, p, q, x, y)
    DD = delta_dist(g)
    if DD[p, q] > 1 or DD[x, y] > 1:
        raise ValueError("endpoints must be at thickened distance at most 1")
    a = list(normal_bg_path(g, p, x).vertices)
    b = list(normal_bg_path(g, q, y).vertices)
    size = max(len(a), len(b))
    a += [a[-1]] * (size - len(a))
    b += [b[-1]] * (size - len(b))
    return all(DD[s, t] <= 1 for s, t in zip(a, b))


def geodesic_extension_check(g: Graph, x: int, y: int, p: int) -> bool:
    """Does p lie on a geodesic of the thickening between x and y?

    Answered by distances and cross-checked against the gate criterion: the
    delta-gates of x and y at p must be distinct and nonadjacent.
    """
    _check(g, x, y, p)
    if p in (x, y):
        raise ValueError("p must differ from x and y")
    DD = delta_dist(g)
    by_distance = bool(DD[x, y] == DD[x, p] + DD[p, y])
    gx, gy = delta_gate(g, p, x), delta_gate(g, p, y)
    by_gates = bool(gx != gy and DD[gx, gy] > 1)
    if by_distance != by_gates:
        raise InvariantError(f"geodesic extension criteria disagree at {(x, y, p)}")
    return by_distance


# -- diagonal extension ----------------------------------------------------------
def _diagonal_step(g: Graph, adj: list[int]) -> list[int]:
    new = list(adj)
    for a0, b0 in g.edges:
        for a, b in ((a0, b0), (b0, a0)):
            na, nb = adj[a], adj[b]
            for c in mask_to_list(nb & ~na & ~(1 << a)):
                for d in mask_to_list(na & adj[c] & ~nb & ~(1 << b)):
                    new[a] |= 1 << c
                    new[c] |= 1 << a
                    new[b] |= 1 << d
                    new[d] |= 1 << b
    return new


def _graph_from_masks(n, adj):
    return Graph(n, [(u, v) for u in range(n) for v in mask_to_list(adj[u]) if u < v])


def diagonal_extension(g: Graph, k: int) -> Graph:
    if k < 0:
        raise ValueError("k must be nonnegative")
    adj = list(g.adj_mask)
    for _ in range(k):
        nxt = _diagonal_step(g, adj)
        if nxt == adj:
            break
        adj = nxt
    return _graph_from_masks(g.n, adj)


def wm_skeleton(g: Graph, cap: int | None = None) -> tuple[Graph, int]:
    """Fixpoint of the diagonal extension and the first step reaching it."""
    cap = g.n + 1 if cap is None else cap
    adj = list(g.adj_mask)
    for k in range(cap + 1):
        nxt = _diagonal_step(g, adj)
        if nxt == adj:
            return _graph_from_masks(g.n, adj), k
        adj = nxt
    raise RankDiverges(f"no fixpoint within {cap} diagonal-extension steps")
