"""Immutable connected simple graphs on vertices 0..n-1, plus the text format.

Text format::

    # optional comment lines
    n m
    u v        (m lines, 0 <= u < v < n)

Serialization emits edges sorted, so parse/serialize round-trips byte-for-byte
on canonical input.
"""
from __future__ import annotations

from collections import deque
from typing import Iterable, Sequence

import numpy as np

from .errors import DisconnectedGraphError, GraphFormatError

INF = np.iinfo(np.int32).max // 4


class Graph:
    """A finite, simple, connected, undirected graph.

    Vertices are the integers ``0..n-1``. Adjacency is kept both as sorted
    tuples and as Python-int bitsets (``adj_mask[v]`` has bit ``u`` set iff
    ``u ~ v``). Derived data such as the distance matrix is cached lazily.
    """

    __slots__ = ("n", "adj", "adj_mask", "_edges", "_cache")

    def __init__(self, n: int, edges: Iterable[Sequence[int]], *, check_connected: bool = True):
        if n < 1:
            raise GraphFormatError("a graph needs at least one vertex")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphFormatError(f"self-loop at {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        self.n = n
        self.adj = tuple(tuple(sorted(s)) for s in nbrs)
        self.adj_mask = tuple(sum(1 << u for u in s) for s in nbrs)
        self._edges = tuple((u, v) for u in range(n) for v in self.adj[u] if u < v)
        self._cache: dict = {}
        if check_connected:
            comps = self.components()
            if len(comps) > 1:
                raise DisconnectedGraphError(comps)

    # -- basic accessors -------------------------------------------------
    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return self._edges

    @property
    def m(self) -> int:
        return len(self._edges)

    def has_edge(self, u: int, v: int) -> bool:
        return (self.adj_mask[u] >> v) & 1 == 1

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp, queue = [s], deque([s])
            while queue:
                x = queue.popleft()
                for y in self.adj[x]:
                    if not seen[y]:
                        seen[y] = True
                        comp.append(y)
                        queue.append(y)
            comps.append(sorted(comp))
        return comps

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self._edges == other._edges

    def __hash__(self):
        return hash((self.n, self._edges))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"

    # -- distances -------------------------------------------------------
    @property
    def dist(self) -> np.ndarray:
        """All-pairs distance matrix (read-only int array), by BFS from every vertex."""
        D = self._cache.get("dist")
        if D is None:
            D = np.empty((self.n, self.n), dtype=np.int64)
            for s in range(self.n):
                D[s] = self._bfs_row(s)
            D.setflags(write=False)
            self._cache["dist"] = D
        return D

    def _bfs_row(self, s: int) -> list[int]:
        row = [INF] * self.n
        row[s] = 0
        frontier = [s]
        d = 0
        while frontier:
            d += 1
            nxt = []
            for x in frontier:
                for y in self.adj[x]:
                    if row[y] == INF:
                        row[y] = d
                        nxt.append(y)
            frontier = nxt
        return row

    def d(self, u: int, v: int) -> int:
        return int(self.dist[u, v])

    @property
    def diameter(self) -> int:
        return int(self.dist.max())

    def sphere_masks(self, u: int) -> list[int]:
        """``sphere_masks(u)[k]`` is the bitset of vertices at distance exactly k from u."""
        cache = self._cache.setdefault("spheres", {})
        sm = cache.get(u)
        if sm is None:
            row = self.dist[u]
            sm = [0] * (int(row.max()) + 1)
            for v in range(self.n):
                sm[int(row[v])] |= 1 << v
            cache[u] = sm
        return sm

    def sphere(self, u: int, k: int) -> int:
        sm = self.sphere_masks(u)
        return sm[k] if 0 <= k < len(sm) else 0

    def interval_masks(self) -> list[list[int]]:
        """Bitset ``I[u][v]`` of the interval between u and v, for all pairs."""
        im = self._cache.get("intervals")
        if im is None:
            D = self.dist
            n = self.n
            im = [[0] * n for _ in range(n)]
            for u in range(n):
                # row block: D[u][:,None] + D[:, x] vs D[u, x]
                on = (D[u][None, :] + D) == D[u][:, None]   # on[v, x]: x in I(u, v)
                for v in range(u, n):
                    mask = bool_to_mask(on[v])
                    im[u][v] = mask
                    im[v][u] = mask
            self._cache["intervals"] = im
        return im

    # -- conversions -----------------------------------------------------
    def induced(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph relabelled to 0..k-1, with the list mapping new ids to old."""
        old = sorted(set(vertices))
        index = {v: i for i, v in enumerate(old)}
        edges = [(index[u], index[v]) for u, v in self._edges if u in index and v in index]
        return Graph(len(old), edges, check_connected=False), old

    def to_networkx(self):
        import networkx as nx

        G = nx.Graph()
        G.add_nodes_from(range(self.n))
        G.add_edges_from(self._edges)
        return G

    @classmethod
    def from_networkx(cls, G) -> "Graph":
        nodes = sorted(G.nodes())
        index = {v: i for i, v in enumerate(nodes)}
        return cls(len(nodes), [(index[u], index[v]) for u, v in G.edges()])


def bool_to_mask(flags: np.ndarray) -> int:
    """Pack a boolean vector into a Python-int bitset (bit i <- flags[i])."""
    return int.from_bytes(np.packbits(flags, bitorder="little").tobytes(), "little")


def mask_to_list(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def list_to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


# -- text format ---------------------------------------------------------
def parse_graph(text: str) -> Graph:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append((lineno, line.split()))
    if not rows:
        raise GraphFormatError("empty graph file")
    lineno, head = rows[0]
    try:
        n, m = (int(t) for t in head)
    except ValueError:
        raise GraphFormatError(f"line {lineno}: expected 'n m', got {' '.join(head)!r}") from None
    if len(rows) - 1 != m:
        raise GraphFormatError(f"header announces {m} edges but {len(rows) - 1} edge lines follow")
    edges, seen = [], set()
    for lineno, toks in rows[1:]:
        if len(toks) != 2:
            raise GraphFormatError(f"line {lineno}: expected 'u v'")
        try:
            u, v = int(toks[0]), int(toks[1])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: non-integer vertex") from None
        if not (0 <= u < v < n):
            raise GraphFormatError(f"line {lineno}: need 0 <= u < v < n, got {u} {v}")
        if (u, v) in seen:
            raise GraphFormatError(f"line {lineno}: duplicate edge {u} {v}")
        seen.add((u, v))
        edges.append((u, v))
    return Graph(n, edges)


def serialize_graph(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines += [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def read_graph(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


def write_graph(g: Graph, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(serialize_graph(g))


def all_pairs_distances(g: Graph) -> np.ndarray:
    return g.dist
