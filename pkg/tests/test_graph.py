import itertools

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dycross import graph as G
from dycross.graph import Graph, GraphError, MoveStep, Triangle, delta_y, gnk, named_graph, y_delta
from dycross.iso import canonical_form, girth, invariants, is_isomorphic

from conftest import graphs


def nxg(g):
    h = nx.Graph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from(g.edges)
    return h


def test_graph_rejects_loops_and_parallel_edges():
    with pytest.raises(GraphError):
        Graph.from_edges([(0, 0)])
    with pytest.raises(GraphError):
        Graph((0, 1), ((0, 1), (1, 0)))
    with pytest.raises(GraphError):
        Graph((0, 1), ((0, 2),))


def test_edge_ids_are_positions_in_sorted_edge_list():
    g = G.complete(4)
    assert [g.edge_id(*e) for e in g.edges] == list(range(6))
    assert g.edge_id(3, 1) == g.edge_id(1, 3)


@pytest.mark.parametrize("name,n,m", [("K7", 7, 21), ("K3,3", 6, 9), ("K3,4", 7, 12), ("C5", 5, 5),
                                      ("Heawood", 14, 21), ("Petersen", 10, 15), ("Q7", 7, 15),
                                      ("G7_1", 8, 21), ("G7_2", 9, 21), ("Gstar", 9, 21), ("Gnk(9,2)", 11, 36)])
def test_named_graph_sizes(name, n, m):
    g = named_graph(name)
    assert (g.n, g.m) == (n, m)


def test_heawood_is_cubic_girth_six_bipartite():
    g = named_graph("Heawood")
    assert set(g.degree(v) for v in g.vertices) == {3}
    assert girth(g) == 6 and invariants(g).bipartite
    assert is_isomorphic(g, Graph.from_edges(nx.heawood_graph().edges))


def test_petersen_matches_networkx():
    assert is_isomorphic(named_graph("Petersen"), Graph.from_edges(nx.petersen_graph().edges))


@pytest.mark.parametrize("bad", ["K", "Gnk(7,4)", "Foo", "C2", "Gnk(3,x)"])
def test_named_graph_errors(bad):
    with pytest.raises(GraphError):
        named_graph(bad)


def test_gnk_labels_and_structure():
    g = gnk(7, 2)
    assert g.label(0) == "a"
    v1, v2 = g.vertex_by_label("v_1"), g.vertex_by_label("v_2")
    assert g.neighbors(v1) == {0, g.vertex_by_label("t_{1,1}"), g.vertex_by_label("t_{1,2}")}
    assert g.degree(0) == 6 - 4 + 2
    assert not g.has_edge(0, g.vertex_by_label("t_{2,1}"))
    assert {g.label(v) for v in g.vertices} >= {"1", "2", "v_2"}
    assert v2 == g.n - 1


def test_gstar_triangle_is_disjoint_from_first():
    g = named_graph("Gstar")
    assert g.n == 9 and g.m == 21
    assert not is_isomorphic(g, gnk(7, 2))


def test_delta_y_on_k4_gives_k23():
    h, step = delta_y(G.complete(4), Triangle(0, 1, 2))
    assert is_isomorphic(h, G.complete_bipartite(2, 3))
    assert step == MoveStep("DY", Triangle(0, 1, 2), 4, 0)


def test_delta_y_counts_and_error():
    h, _ = delta_y(G.complete(6), Triangle(0, 1, 2))
    assert (h.n, h.m) == (7, 15)
    with pytest.raises(GraphError):
        delta_y(G.cycle(4), Triangle(0, 1, 2))


def test_y_delta_examples():
    h, step = y_delta(G.complete(4), 3)
    assert is_isomorphic(h, G.complete(3)) and step.simplified_edges == 3
    with pytest.raises(GraphError):
        y_delta(G.complete(5), 0)
    with pytest.raises(GraphError):
        y_delta(G.complete(4), 9)


def test_movestep_invariant():
    with pytest.raises(ValueError):
        MoveStep("DY", Triangle(0, 1, 2), 3, simplified_edges=1)


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=8), st.data())
def test_delta_y_then_y_delta_round_trip(g, data):
    tris = g.triangles()
    if not tris:
        return
    t = data.draw(st.sampled_from(tris))
    h, step = delta_y(g, t)
    assert (h.n, h.m) == (g.n + 1, g.m)
    back, undo = y_delta(h, step.new_vertex)
    assert undo.simplified_edges == 0
    assert set(back.edges) == set(g.edges) and set(back.vertices) == set(g.vertices)


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=8))
def test_edge_list_round_trip(g):
    g = g.with_labels({v: f"x{v}" for v in g.vertices[:2]})
    assert G.loads(G.dumps(g)) == g


def test_loads_reports_line_numbers():
    with pytest.raises(GraphError, match="line 2"):
        G.loads("0 1\n0 1 2\n")


def test_triangles_and_components_match_networkx():
    g = G.Graph.from_edges([(0, 1), (1, 2), (0, 2), (3, 4)], range(6))
    assert [tuple(t) for t in g.triangles()] == [(0, 1, 2)]
    assert sorted(map(sorted, g.components())) == sorted(map(sorted, nx.connected_components(nxg(g))))
    assert not g.is_connected()


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=7), st.randoms(use_true_random=False))
def test_canonical_form_is_permutation_invariant(g, rnd):
    perm = list(g.vertices)
    rnd.shuffle(perm)
    h = g.relabel(dict(zip(g.vertices, perm)))
    assert canonical_form(g) == canonical_form(h)


def test_canonical_form_separates_all_small_graphs():
    atlas = [g for g in nx.graph_atlas_g() if g.number_of_nodes() == 6]
    forms = {canonical_form(Graph.from_edges(h.edges, h.nodes)) for h in atlas}
    assert len(forms) == len(atlas) == 156


def test_canonical_form_size_cap():
    with pytest.raises(ValueError):
        canonical_form(G.cycle(20))


def test_isomorphism_agrees_with_networkx_on_random_pairs():
    import random
    rng = random.Random(3)
    for _ in range(150):
        a = Graph.from_edges([e for e in itertools.combinations(range(6), 2) if rng.random() < 0.5], range(6))
        b = Graph.from_edges([e for e in itertools.combinations(range(6), 2) if rng.random() < 0.5], range(6))
        assert is_isomorphic(a, b) == nx.is_isomorphic(nxg(a), nxg(b))
