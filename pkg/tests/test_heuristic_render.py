import random

import pytest
from hypothesis import given, settings

from dycross.drawing import is_good
from dycross.graph import Graph, complete, complete_bipartite, named_graph
from dycross.heuristic import heuristic_drawing
from dycross.planarity import embedding_is_spherical, is_kuratowski_subdivision, is_planar
from dycross.render import layout, proper_crossings, segments_intersect, to_svg

from conftest import graphs, random_graph


@pytest.mark.parametrize("name,best", [("K5", 1), ("K3,3", 1), ("K6", 3), ("Heawood", 3), ("P10", 2)])
def test_heuristic_reaches_known_optimum(name, best):
    d = heuristic_drawing(named_graph(name), restarts=50, seed=1)
    assert is_good(d) and d.crossing_count == best


def test_heuristic_is_deterministic():
    g = named_graph("K7")
    a = heuristic_drawing(g, restarts=5, seed=4)
    b = heuristic_drawing(g, restarts=5, seed=4)
    assert a == b and a.rotation == b.rotation


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=9))
def test_heuristic_always_returns_good_drawing(g):
    d = heuristic_drawing(g, restarts=2, seed=0)
    assert is_good(d) and d.base == g


def test_planarity_certificates():
    rng = random.Random(2)
    for _ in range(60):
        g = random_graph(rng, 5, 9, 0.2, 0.8)
        res = is_planar(g)
        if res.planar:
            assert embedding_is_spherical(g, res.embedding)
        else:
            assert is_kuratowski_subdivision(g, res.obstruction)


def test_kuratowski_check_rejects_non_subdivisions():
    assert not is_kuratowski_subdivision(complete(5), complete(4))
    assert is_kuratowski_subdivision(complete_bipartite(3, 3), complete_bipartite(3, 3))


def test_segment_intersection():
    assert segments_intersect((0, 0), (2, 2), (0, 2), (2, 0))
    assert not segments_intersect((0, 0), (1, 0), (0, 1), (1, 1))
    assert segments_intersect((0, 0), (2, 0), (1, 0), (3, 0))


@pytest.mark.parametrize("name", ["K4", "K7", "Heawood", "Gstar", "C3"])
def test_layout_is_a_plane_straight_line_drawing(name):
    d = heuristic_drawing(named_graph(name), restarts=3)
    pos, pieces = layout(d)
    assert len(set(pos.values())) == len(pos)
    assert proper_crossings(pos, pieces) == []


def test_layout_handles_isolated_vertices():
    d = heuristic_drawing(Graph.from_edges([(0, 1), (1, 2), (0, 2)], range(5)), restarts=1)
    pos, _ = layout(d)
    assert set(range(5)) <= set(pos)


def test_svg_output():
    d = heuristic_drawing(complete(5), restarts=3)
    svg = to_svg(d)
    assert svg.startswith("<svg") and svg.count("<circle") == 5 and svg.rstrip().endswith("</svg>")
