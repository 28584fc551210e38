"""Property-based checks over random connected graphs and random swm seeds."""
import itertools

import networkx as nx
from hypothesis import given, settings, strategies as st

import oracles as O
from wmgraphs import (Graph, bfs_order, boolean_gated_sets, check_weakly_modular, gated_hull,
                      hyperbolicity_delta, interval, is_distance_preserving, parse_graph,
                      quasi_median, serialize_graph)
from wmgraphs import generators as gen
from wmgraphs.recognition import check_swm, is_weakly_modular


@st.composite
def connected_graphs(draw, max_n=9):
    n = draw(st.integers(1, max_n))
    edges = {(draw(st.integers(0, v - 1)), v) for v in range(1, n)}
    pairs = list(itertools.combinations(range(n), 2))
    if pairs:
        edges |= set(draw(st.lists(st.sampled_from(pairs), max_size=2 * n)))
    return Graph(n, sorted(edges))


@given(connected_graphs())
def test_serialisation_round_trip(g):
    assert parse_graph(serialize_graph(g)).edges == g.edges


@given(connected_graphs())
def test_weak_modularity_matches_oracle(g):
    assert check_weakly_modular(g).holds == O.weakly_modular(g.to_networkx())


@given(connected_graphs(), st.data())
def test_interval_laws(g, data):
    u = data.draw(st.integers(0, g.n - 1))
    v = data.draw(st.integers(0, g.n - 1))
    I = interval(g, u, v)
    assert I == interval(g, v, u) and {u, v} <= I
    assert all(g.d(u, x) + g.d(x, v) == g.d(u, v) for x in I)
    assert len(I) + sum(1 for x in range(g.n) if g.d(u, x) + g.d(x, v) > g.d(u, v)) == g.n


@given(connected_graphs(), st.data())
def test_quasi_median_is_metric_triangle(g, data):
    x, y, z = (data.draw(st.integers(0, g.n - 1)) for _ in range(3))
    t = quasi_median(g, x, y, z)
    assert g.d(x, t.v1) + g.d(t.v1, t.v2) + g.d(t.v2, y) == g.d(x, y)
    if is_weakly_modular(g):
        assert t.equilateral


@settings(max_examples=60)
@given(connected_graphs(max_n=8), st.data())
def test_gated_hull_is_gated_on_weakly_modular_graphs(g, data):
    if not is_weakly_modular(g):
        return
    v = data.draw(st.integers(0, g.n - 1))
    s = {v} | set(data.draw(st.sets(st.sampled_from((v,) + g.adj[v]), max_size=2)))
    hull = gated_hull(g, s)
    assert s <= hull and O.gated(g.to_networkx(), hull)
    assert gated_hull(g, {v}) == {v}


@given(connected_graphs())
def test_delta_is_half_integer_bounded_by_half_diameter(g):
    delta, _ = hyperbolicity_delta(g)
    assert (2 * delta).denominator == 1 and 2 * delta <= g.diameter


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6), st.integers(2, 25))
def test_random_swm_generator(seed, size):
    g = gen.random_swm(seed, size)
    assert g.n <= size and check_swm(g).holds
    assert len(boolean_gated_sets(g)) <= g.n ** 2 + g.n
    order = bfs_order(g, seed % g.n, seed).order
    assert is_distance_preserving(g, order)[0]
    assert nx.is_connected(g.to_networkx())
