"""Induced (and isometric) subgraph search for the small forbidden patterns."""
from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, mask_to_list


@dataclass(frozen=True)
class Pattern:
    name: str
    k: int
    edges: frozenset
    # pairs of pattern vertices whose distance in the host must equal the given value
    far_pairs: tuple = ()

    def adjacent(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.edges


def _pattern(name, k, edges, far_pairs=()):
    return Pattern(name, k, frozenset((min(a, b), max(a, b)) for a, b in edges), tuple(far_pairs))


def _cycle(k):
    return [(i, (i + 1) % k) for i in range(k)]


# sides {0, 2, 4} and {1, 3, 5}; the edge 0-5 is missing
_K33M = [(a, b) for a in (0, 2, 4) for b in (1, 3, 5) if (a, b) != (0, 5)]

# Vertex orders matter: witnesses are reported in pattern order, and every
# vertex after the first is adjacent to an earlier one so the search stays local.
PATTERNS = {
    # a, b, c, d with a and d the nonadjacent pair
    "K4minus": _pattern("K4minus", 4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]),
    # parts {0, 2} and {1, 3, 4}
    "K23": _pattern("K23", 5, [(a, b) for a in (0, 2) for b in (1, 3, 4)]),
    # centre 0, rim 1-2-3-4-1, spoke 0-4 missing
    "W4minus": _pattern("W4minus", 5, [(1, 2), (2, 3), (3, 4), (4, 1), (0, 1), (0, 2), (0, 3)]),
    "W4": _pattern("W4", 5, [(1, 2), (2, 3), (3, 4), (4, 1), (0, 1), (0, 2), (0, 3), (0, 4)]),
    # square 0-1-2-3, clique 4..7, a_i adjacent to x_i and x_{i+1}
    "M4": _pattern("M4", 8, _cycle(4) + [(a, b) for a in range(4, 8) for b in range(a + 1, 8)]
                   + [(4, 0), (4, 1), (5, 1), (5, 2), (6, 2), (6, 3), (7, 3), (7, 0)]),
    "K33minus-induced": _pattern("K33minus-induced", 6, _K33M),
    # same, and the nonadjacent cross pair 0, 5 must sit at distance 3 in the host
    "K33minus-isometric": _pattern("K33minus-isometric", 6, _K33M, far_pairs=((0, 5, 3),)),
    "C4": _pattern("C4", 4, _cycle(4)),
    "C5": _pattern("C5", 5, _cycle(5)),
}


@dataclass(frozen=True)
class PatternHit:
    pattern: str
    vertices: tuple[int, ...]


def find_pattern(g: Graph, pattern):
    """First induced copy of ``pattern`` in ``g`` (lexicographically smallest
    image tuple in pattern-vertex order), or None.

    ``pattern`` is a name from ``PATTERNS`` or a ``Pattern``.
    """
    if isinstance(pattern, str):
        if pattern not in PATTERNS:
            raise ValueError(f"unknown pattern {pattern!r}; expected one of {sorted(PATTERNS)}")
        pattern = PATTERNS[pattern]
    p = pattern
    far = p.far_pairs
    n, adj = g.n, g.adj_mask
    full = (1 << n) - 1
    D = g.dist if far else None
    image = [0] * p.k
    earlier = [[(j, p.adjacent(i, j)) for j in range(i)] for i in range(p.k)]
    far_at = [[(a, dd) for (a, b, dd) in far if b == i] + [(b, dd) for (a, b, dd) in far if a == i]
              for i in range(p.k)]
    deg_needed = [sum(p.adjacent(i, j) for j in range(p.k) if j != i) for i in range(p.k)]

    def extend(i, used):
        if i == p.k:
            return True
        cand = full & ~used
        for j, is_adj in earlier[i]:
            cand &= adj[image[j]] if is_adj else ~adj[image[j]]
        for v in mask_to_list(cand):
            if len(g.adj[v]) < deg_needed[i]:
                continue
            if any(j < i and D[image[j], v] != dd for j, dd in far_at[i]):
                continue
            image[i] = v
            if extend(i + 1, used | 1 << v):
                return True
        return False

    if p.k > n:
        return None
    if extend(0, 0):
        return PatternHit(p.name, tuple(image))
    return None


def induced_squares(g: Graph):
    """All induced 4-cycles, each once, as (x1, x2, x3, x4) in cyclic order
    with x1 the smallest vertex and x2 < x4."""
    adj = g.adj_mask
    out = []
    for a in range(g.n):
        for c in mask_to_list(g.sphere(a, 2)):
            if c <= a:
                continue
            common = [x for x in mask_to_list(adj[a] & adj[c]) if x > a]
            for i, b in enumerate(common):
                for d in common[i + 1:]:
                    if not adj[b] >> d & 1:
                        out.append((a, b, c, d))
    return out
