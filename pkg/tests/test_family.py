import pytest

from dycross.family import BudgetExceeded, legal_moves, move_closure, petersen_family
from dycross.graph import complete, complete_bipartite, named_graph
from dycross.iso import canonical_form, girth, invariants, is_isomorphic


def test_closure_is_closed_under_moves():
    c = move_closure(complete(6))
    for g in c.graphs():
        for h, _ in legal_moves(g):
            assert canonical_form(h) in c.members


def test_every_recorded_move_is_between_members():
    c = move_closure(complete(6))
    for a, step, b in c.moves:
        assert a in c.members and b in c.members
        assert step.kind in ("DY", "YD")


def test_family_names():
    fam = petersen_family()
    assert [fam[k].n for k in ("K6", "Q7", "P7", "Q8", "P8", "P9", "P10")] == [6, 7, 7, 8, 8, 9, 10]
    assert all(g.m == 15 for g in fam.values())
    assert is_isomorphic(fam["P10"], named_graph("Petersen"))
    assert invariants(fam["Q8"]).bipartite and girth(fam["Q8"]) == 4
    assert not invariants(fam["P8"]).bipartite
    # Q7 is the one Delta-Y image of K6
    k6 = complete(6)
    from dycross.graph import delta_y
    assert is_isomorphic(delta_y(k6, k6.triangles()[0])[0], fam["Q7"])


def test_closure_of_k4_and_budget():
    c = move_closure(complete(4))
    # K4 <-> K_{1,1,3}-like chain: K4, K2,3 (after one move), and K3 reached by Y-Delta with merging
    assert any(is_isomorphic(g, complete_bipartite(2, 3)) for g in c.graphs())
    with pytest.raises(BudgetExceeded):
        move_closure(complete(6), max_members=3)
    with pytest.raises(ValueError):
        move_closure(complete(6), max_members=0)
