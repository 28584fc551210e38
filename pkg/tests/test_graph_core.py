import itertools

import networkx as nx
import pytest

import oracles as O
from corpus import named_graphs, small_graphs
from wmgraphs import (DisconnectedGraphError, Graph, GraphFormatError, NotApplicable, all_pairs_distances,
                      find_pattern, gate, gated_hull, interval, is_convex, is_gated,
                      max_metric_triangle_side, parse_graph, quasi_median, serialize_graph)
from wmgraphs import generators as gen
from wmgraphs.recognition import is_weakly_modular


def test_text_round_trip_is_byte_stable():
    text = "4 4\n0 1\n0 3\n1 2\n2 3\n"
    assert serialize_graph(parse_graph(text)) == text


def test_parse_accepts_comments_and_sorts():
    g = parse_graph("# square\n4 4\n2 3 # last\n0 1\n1 2\n0 3\n")
    assert serialize_graph(g) == "4 4\n0 1\n0 3\n1 2\n2 3\n"


@pytest.mark.parametrize("text", [
    "", "3\n0 1\n", "3 2\n0 1\n", "3 1\n1 0\n", "3 2\n0 1\n0 1\n", "2 1\n0 5\n", "2 1\na b\n",
])
def test_parse_rejects_malformed(text):
    with pytest.raises(GraphFormatError):
        parse_graph(text)


def test_disconnected_graph_lists_components():
    with pytest.raises(DisconnectedGraphError) as info:
        Graph(4, [(0, 1), (2, 3)])
    assert info.value.components == [[0, 1], [2, 3]]
    assert "[0, 1]" in str(info.value)


def test_no_loops():
    with pytest.raises(GraphFormatError):
        Graph(2, [(0, 0), (0, 1)])


def test_distance_examples():
    assert gen.path(3).d(0, 2) == 2
    assert all_pairs_distances(gen.cycle(5)).max() == 2
    assert gen.cube(3).d(0, 7) == 3


def test_distances_match_networkx():
    for _, g, G in small_graphs()[::7]:
        d = O.dist(G)
        assert all(g.d(u, v) == d[u][v] for u in G for v in G)


def test_interval_examples():
    c4 = gen.cycle(4)
    assert interval(c4, 2, 2) == {2}
    assert interval(c4, 0, 2) == {0, 1, 2, 3}
    k33 = gen.complete_bipartite(3, 3)
    assert interval(k33, 0, 1) == {0, 1, 3, 4, 5}
    with pytest.raises(ValueError):
        interval(c4, 0, 9)


def test_interval_matches_definition():
    for _, g, G in small_graphs()[::5]:
        d = O.dist(G)
        for u, v in itertools.product(G, repeat=2):
            assert set(interval(g, u, v)) == O.interval(d, list(G), u, v)


def test_quasi_median_examples():
    tree = Graph.from_networkx(nx.balanced_tree(2, 2))
    assert all(quasi_median(tree, *t).size == 0 for t in itertools.combinations(range(tree.n), 3))
    tri = quasi_median(gen.complete(3), 0, 1, 2)
    assert (tri.v1, tri.v2, tri.v3, tri.size) == (0, 1, 2, 1)
    q3 = gen.cube(3)
    for t in itertools.combinations(range(8), 3):
        m = quasi_median(q3, *t)
        assert m.size == 0
        assert all(q3.d(a, m.v1) + q3.d(m.v1, b) == q3.d(a, b) for a, b in itertools.combinations(t, 2))


def test_quasi_median_decomposes_distances():
    for label, g in named_graphs():
        if not is_weakly_modular(g) or g.n > 16:
            continue
        for x, y, z in itertools.combinations(range(g.n), 3):
            t = quasi_median(g, x, y, z)
            assert t.equilateral, label
            assert g.d(x, y) == g.d(x, t.v1) + g.d(t.v1, t.v2) + g.d(t.v2, y)
            assert g.d(y, z) == g.d(y, t.v2) + g.d(t.v2, t.v3) + g.d(t.v3, z)
            assert g.d(z, x) == g.d(z, t.v3) + g.d(t.v3, t.v1) + g.d(t.v1, x)


def _mu_oracle(G):
    d = O.dist(G)
    V = list(G)
    best = 0
    for a, b, c in itertools.combinations(V, 3):
        I = lambda p, q: O.interval(d, V, p, q)
        if I(a, b) & I(a, c) == {a} and I(b, a) & I(b, c) == {b} and I(c, a) & I(c, b) == {c}:
            best = max(best, d[a][b], d[b][c], d[a][c])
    return best


def test_max_metric_triangle_side():
    assert max_metric_triangle_side(gen.cube(3))[0] == 0
    assert max_metric_triangle_side(gen.complete(3))[0] == 1
    mu, tri = max_metric_triangle_side(gen.cycle(5))
    assert mu >= 1 and not tri.equilateral
    for _, g, G in small_graphs()[::9]:
        assert max_metric_triangle_side(g)[0] == _mu_oracle(G)


def test_gate_examples():
    k3 = gen.complete(3)
    assert gate(k3, {0, 1}, 0) == 0
    assert gate(k3, {0, 1}, 2) is None
    tree = Graph.from_networkx(nx.balanced_tree(2, 3))
    sub = {1, 3, 4, 7}  # a subtree
    for x in range(tree.n):
        nearest = min(sub, key=lambda s: tree.d(x, s))
        assert gate(tree, sub, x) == nearest


def test_gated_and_convex_examples():
    k3 = gen.complete(3)
    assert is_gated(k3, range(3)) and is_convex(k3, range(3))
    assert not is_gated(k3, {0, 1})
    g = gen.grid(3, 3)
    assert is_gated(g, {0, 1}) and is_gated(g, {0, 1, 3, 4})
    with pytest.raises(ValueError):
        is_gated(g, {0, 2})


def test_local_shortcuts_agree_on_weakly_modular_graphs():
    for label, g in named_graphs():
        if not is_weakly_modular(g) or g.n > 12:
            continue
        for size in (1, 2, 3, 4):
            for s in itertools.islice(itertools.combinations(range(g.n), size), 60):
                h, _ = g.induced(s)
                if len(h.components()) != 1:
                    continue
                assert is_gated(g, s) == is_gated(g, s, method="local"), (label, s)
                assert is_convex(g, s) == is_convex(g, s, method="local"), (label, s)


def test_local_shortcut_guarded():
    with pytest.raises(NotApplicable):
        is_gated(gen.cycle(5), {0, 1}, method="local")
    assert is_gated(gen.cycle(5), {0, 1}) is False


def test_gated_hull_examples():
    g = gen.grid(3, 3)
    assert gated_hull(g, {0, 1}) == {0, 1}
    assert gated_hull(g, {0, 1}).kind == "gated"
    assert gated_hull(gen.complete_bipartite(3, 3), {0, 3, 1}) == set(range(6))
    assert gated_hull(gen.cube(3), {0, 1, 3, 7}) == set(range(8))
    assert gated_hull(gen.cube(3), {0, 1, 3}) == {0, 1, 2, 3}
    with pytest.raises(NotApplicable):
        gated_hull(gen.cycle(5), {0})


def test_gated_hull_is_least_gated_superset():
    checked = 0
    for label, g in named_graphs():
        if g.n > 9 or not is_weakly_modular(g):
            continue
        G = g.to_networkx()
        for s in itertools.islice(itertools.combinations(range(g.n), 2), 8):
            if not nx.is_connected(G.subgraph(s)):
                s = (s[0],) + tuple(nx.shortest_path(G, s[0], s[1]))[1:]
            hull = gated_hull(g, s)
            assert O.gated(G, hull)
            supersets = O.all_gated_supersets(G, s)
            assert frozenset(hull) == min(supersets, key=len)
            assert all(hull <= t for t in supersets)
            checked += 1
    assert checked > 20


def test_find_pattern_examples():
    k4m = Graph(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])
    assert find_pattern(k4m, "K4minus").vertices == (0, 1, 2, 3)
    assert find_pattern(gen.cube(3), "K4minus") is None
    k33m = Graph(6, [(a, b) for a in (0, 1, 2) for b in (3, 4, 5) if (a, b) != (0, 5)])
    hit = find_pattern(k33m, "K33minus-isometric")
    assert hit is not None and k33m.d(hit.vertices[0], hit.vertices[5]) == 3
    # K33 itself has an induced K33 minus an edge nowhere (removing an edge is not induced)
    assert find_pattern(gen.complete_bipartite(3, 3), "K33minus-induced") is None
    with pytest.raises(ValueError):
        find_pattern(k4m, "K7")


def test_pattern_hit_is_induced_copy():
    from wmgraphs.patterns import PATTERNS
    for label, g in named_graphs():
        for name, p in PATTERNS.items():
            hit = find_pattern(g, name)
            if hit is None:
                continue
            vs = hit.vertices
            for i, j in itertools.combinations(range(p.k), 2):
                assert g.has_edge(vs[i], vs[j]) == p.adjacent(i, j), (label, name)
