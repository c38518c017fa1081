import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dycross import drawing as D
from dycross.drawing import (DrawingError, best_surgery, build_drawing, goodness, is_cr_reducible, is_good,
                             pair_crossings, planar_drawing, surgery_count, trigon_profile, trigons)
from dycross.graph import Triangle, complete, cycle, delta_y
from dycross.iso import is_isomorphic

from conftest import check_surgery_suite, random_good_drawings


def test_d5_is_valid_and_good(d5):
    assert d5.crossing_count == 1
    assert len(d5.faces()) == 8  # V - E + F = 2 with 6 nodes and 12 segments
    assert is_good(d5)
    assert D.edge_crossings(d5, (1, 2)) == 1 and D.edge_crossings(d5, (1, 3)) == 0


def test_d5_trigon_profile(d5):
    p = trigon_profile(d5, Triangle(1, 2, 3))
    assert p.c == (0, 0, 1)
    assert p.m[2] == (1, 1) and p.d[2] == 1
    assert is_cr_reducible(d5, Triangle(1, 2, 3)) == (False, None)
    assert surgery_count(p, 3, 1) == 1
    assert trigon_profile(d5, Triangle(1, 2, 4)).d[2] == 1


def test_pair_crossings(d5):
    assert pair_crossings(d5, [(1, 2)], [(4, 5)]) == 1
    assert pair_crossings(d5, [(1, 2), (1, 3)], [(3, 4), (4, 5)]) == 1
    with pytest.raises(ValueError):
        pair_crossings(d5, [(1, 2)], [(1, 2)])


def test_invalid_rotation_is_rejected(d5):
    rot = dict(d5.rotation)
    rot[1] = (rot[1][1], rot[1][0], rot[1][2], rot[1][3])
    with pytest.raises(DrawingError):
        build_drawing(d5.base, d5.crossings, d5.order, rot)


def test_non_alternating_crossing_is_rejected(d5):
    rot = dict(d5.rotation)
    rot[~0] = ((0, 1), (0, 0), (9, 0), (9, 1))
    with pytest.raises(DrawingError):
        build_drawing(d5.base, d5.crossings, d5.order, rot)


def test_order_must_match_crossings(d5):
    with pytest.raises(DrawingError):
        build_drawing(d5.base, d5.crossings, [()] * 10, d5.rotation)


def test_goodness_flags_adjacent_crossing():
    # triangle whose two edges at vertex 0 cross once: a valid drawing but not a good one
    g = complete(3)
    # edge ids: 01=0 02=1 12=2
    rot = {
        0: [(0, 0), (1, 0)],
        1: [(2, 0), (0, 1)],
        2: [(1, 1), (2, 0)],
        ~0: [(0, 0), (1, 1), (0, 1), (1, 0)],
    }
    d = build_drawing(g, [(0, 1)], [(0,), (0,), ()], rot)
    rep = goodness(d)
    assert not rep.good and any("G2" in v for v in rep.violations)
    with pytest.raises(DrawingError):
        trigon_profile(d, Triangle(0, 1, 2))


def test_planar_drawing_of_cycle():
    d = planar_drawing(cycle(5), {i: [(i - 1) % 5, (i + 1) % 5] for i in range(5)})
    assert d.crossing_count == 0 and len(d.faces()) == 2 and is_good(d)


def test_text_round_trip(d5):
    d = D.loads(D.dumps(d5))
    assert d == d5 and d.rotation == d5.rotation


def test_loads_rejects_bad_header():
    with pytest.raises(DrawingError):
        D.loads("drawing v2\n")


def test_surgery_suite_small():
    variants, _ = check_surgery_suite(random_good_drawings(25, seed=11))
    assert variants > 0


def test_k7_fixture_surgery_lowers_count():
    from dycross.fixtures import load_fixture
    d = load_fixture("K7")
    red = [t for t in trigons(d) if is_cr_reducible(d, t)[0]]
    assert red
    out, count = best_surgery(d, red[0])
    assert count <= 8 and is_good(out) and is_isomorphic(out.base, delta_y(d.base, red[0])[0])


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**6))
def test_surgery_count_formula_property(seed):
    d = random_good_drawings(1, seed)[0]
    check_surgery_suite([d])
