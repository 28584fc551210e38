"""Slow, definition-level reference implementations.

Everything here works from networkx graphs and networkx distances so that
no library shortcut (bitsets, cached matrices, lemma-based criteria) sits on
both sides of a comparison.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations, product

import networkx as nx
from networkx.algorithms import isomorphism


def dist(G):
    return dict(nx.all_pairs_shortest_path_length(G))


def interval(d, V, u, v):
    return {x for x in V if d[u][x] + d[x][v] == d[u][v]}


# -- weak modularity -----------------------------------------------------------
def weakly_modular(G) -> bool:
    d = dist(G)
    V = list(G)
    for u in V:
        for v, w in G.edges():
            k = d[u][v]
            if k == d[u][w] and k >= 1:
                if not any(d[u][x] == k - 1 for x in nx.common_neighbors(G, v, w)):
                    return False
        for z in V:
            for v, w in combinations(G[z], 2):
                if d[v][w] == 2 and d[u][v] == d[u][w] == d[u][z] - 1 and d[u][v] >= 2:
                    if not any(d[u][x] == d[u][v] - 1 for x in nx.common_neighbors(G, v, w)):
                        return False
    return True


def modular(G) -> bool:
    d = dist(G)
    V = list(G)
    return all(interval(d, V, x, y) & interval(d, V, y, z) & interval(d, V, x, z)
               for x, y, z in combinations(V, 3))


def meshed(G) -> bool:
    d = dist(G)
    V = list(G)
    for v, w in combinations(V, 2):
        if d[v][w] != 2:
            continue
        common = list(nx.common_neighbors(G, v, w))
        for u in V:
            if not any(2 * d[u][x] <= d[u][v] + d[u][w] for x in common):
                return False
    return True


def balls(G, d=None):
    d = d or dist(G)
    diam = max(max(r.values()) for r in d.values())
    return {frozenset(x for x in G if d[c][x] <= r) for c in G for r in range(diam + 1)}


def pseudo_modular(G) -> bool:
    """Any three pairwise intersecting balls share a vertex."""
    bs = list(balls(G))
    for a, b, c in combinations(bs, 3):
        if a & b and b & c and a & c and not a & b & c:
            return False
    return True


def _helly_family(sets) -> bool:
    sets = list(sets)
    H = nx.Graph()
    H.add_nodes_from(range(len(sets)))
    H.add_edges_from((i, j) for i, j in combinations(range(len(sets)), 2) if sets[i] & sets[j])
    for clique in nx.find_cliques(H):
        if not frozenset.intersection(*(sets[i] for i in clique)):
            return False
    return True


def clique_helly(G) -> bool:
    return _helly_family(frozenset(c) for c in nx.find_cliques(G))


def ball_helly(G) -> bool:
    return _helly_family(balls(G))


def dismantlable(G) -> bool:
    nbr = {v: frozenset(G[v]) | {v} for v in G}

    @lru_cache(maxsize=None)
    def ok(alive):
        if len(alive) <= 1:
            return True
        for x in alive:
            nx_ = nbr[x] & alive
            if any(nx_ <= nbr[y] for y in alive if y != x) and ok(alive - {x}):
                return True
        return False

    return ok(frozenset(G))


# -- patterns ------------------------------------------------------------------
def pattern_graph(name):
    from wmgraphs.patterns import PATTERNS
    p = PATTERNS[name]
    H = nx.Graph()
    H.add_nodes_from(range(p.k))
    H.add_edges_from(p.edges)
    return H, p.far_pairs


def has_pattern(G, name) -> bool:
    H, far = pattern_graph(name)
    d = dist(G) if far else None
    for sub in combinations(G, H.number_of_nodes()):
        S = G.subgraph(sub)
        if S.number_of_edges() != H.number_of_edges():
            continue
        gm = isomorphism.GraphMatcher(H, S)
        for mapping in gm.isomorphisms_iter():
            if all(d[mapping[a]][mapping[b]] == dd for a, b, dd in far):
                return True
            if not far:
                break
    return False


# -- lattices --------------------------------------------------------------------
def complemented_modular_lattice(G, p, q) -> bool:
    """Brute force on I(p, q) ordered by x <= y iff x lies in I(p, y)."""
    d = dist(G)
    V = list(G)
    P = sorted(interval(d, V, p, q))
    le = {(x, y): d[p][x] + d[x][y] == d[p][y] for x in P for y in P}

    def lub(x, y):
        ups = [z for z in P if le[(x, z)] and le[(y, z)]]
        least = [z for z in ups if all(le[(z, w)] for w in ups)]
        return least[0] if least else None

    def glb(x, y):
        downs = [z for z in P if le[(z, x)] and le[(z, y)]]
        great = [z for z in downs if all(le[(w, z)] for w in downs)]
        return great[0] if great else None

    join = {(x, y): lub(x, y) for x in P for y in P}
    meet = {(x, y): glb(x, y) for x in P for y in P}
    if any(v is None for v in join.values()) or any(v is None for v in meet.values()):
        return False
    for x, y, z in product(P, repeat=3):
        if le[(x, z)] and join[(x, meet[(y, z)])] != meet[(join[(x, y)], z)]:
            return False
    return all(any(meet[(x, y)] == p and join[(x, y)] == q for y in P) for x in P)


# -- gated sets ------------------------------------------------------------------
def gated(G, S, d=None) -> bool:
    d = d or dist(G)
    S = set(S)
    for x in G:
        if x in S:
            continue
        if not any(all(d[x][g] + d[g][y] == d[x][y] for y in S) for g in S):
            return False
    return True


def all_gated_supersets(G, S):
    d = dist(G)
    rest = [v for v in G if v not in S]
    out = []
    for r in range(len(rest) + 1):
        for extra in combinations(rest, r):
            T = set(S) | set(extra)
            if nx.is_connected(G.subgraph(T)) and gated(G, T, d):
                out.append(frozenset(T))
    return out


# -- four-point delta --------------------------------------------------------------
def delta_doubled(G) -> int:
    d = dist(G)
    best = 0
    for a, b, c, e in product(G, repeat=4):
        s = sorted((d[a][b] + d[c][e], d[a][c] + d[b][e], d[a][e] + d[b][c]))
        best = max(best, s[2] - s[1])
    return best


def prefix_isometric(G, order) -> bool:
    d = dist(G)
    for i in range(1, len(order) + 1):
        S = G.subgraph(order[:i])
        if not nx.is_connected(S):
            return False
        ds = dict(nx.all_pairs_shortest_path_length(S))
        if any(ds[a][b] != d[a][b] for a in order[:i] for b in order[:i]):
            return False
    return True
