import networkx as nx
import pytest

from corpus import named_graphs, small_graphs
from wmgraphs import NotApplicable, RadiusTooLarge, universal_cover_ball
from wmgraphs import generators as gen
from wmgraphs.cover import check_cover_ball
from wmgraphs.recognition import check_locally_weakly_modular, is_weakly_modular


def test_radius_zero():
    ball = universal_cover_ball(gen.cube(3), 5, 0)
    assert ball.graph.n == 1 and ball.projection == (5,)


def test_cube_is_its_own_cover():
    q3 = gen.cube(3)
    ball = universal_cover_ball(q3, 0, 3)
    assert ball.graph.n == 8 and sorted(ball.projection) == list(range(8))
    assert all(q3.has_edge(ball.projection[a], ball.projection[b]) for a, b in ball.graph.edges)
    assert ball.graph.m == q3.m


def test_seven_cycle_unrolls():
    ball = universal_cover_ball(gen.cycle(7), 0, 3)
    assert nx.is_isomorphic(ball.graph.to_networkx(), nx.path_graph(7))
    long = universal_cover_ball(gen.cycle(7), 0, 5)
    assert nx.is_isomorphic(long.graph.to_networkx(), nx.path_graph(11))
    assert check_cover_ball(long, gen.cycle(7)) == []


def test_guards():
    with pytest.raises(NotApplicable):
        universal_cover_ball(gen.cycle(5), 0, 2)
    with pytest.raises(RadiusTooLarge):
        universal_cover_ball(gen.cycle(8), 0, 50, cap=20)
    with pytest.raises(ValueError):
        universal_cover_ball(gen.cycle(8), 0, -1)


def test_json():
    data = universal_cover_ball(gen.cycle(7), 0, 1).to_json()
    assert sorted(data["projection"]) == [0, 1, 6]
    assert data["graph"].startswith("3 2\n")


def test_balls_are_sound_on_locally_weakly_modular_graphs():
    seen = 0
    for label, g in [(f"a{i}", g) for i, g, _ in small_graphs()] + list(named_graphs()):
        if not check_locally_weakly_modular(g).holds:
            continue
        r = 4 if g.n <= 7 else 3
        ball = universal_cover_ball(g, 0, r)
        assert check_cover_ball(ball, g) == [], label
        seen += 1
    assert seen > 100


def test_non_simply_connected_cover_grows():
    # locally weakly modular but not weakly modular: the cover is strictly bigger
    grew = 0
    for _, g, _G in small_graphs():
        if check_locally_weakly_modular(g).holds and not is_weakly_modular(g):
            ball = universal_cover_ball(g, 0, g.n)
            assert ball.graph.n > g.n
            grew += 1
    assert grew > 0
