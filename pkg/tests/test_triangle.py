import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from scripts.errors import DegenerateInput, WrongCardinality
from scripts.predicates import Orientation, Point, orient
from scripts.triangle import MINUS_ONE, ONE, ZERO, Idx3, OrientedTriangle, edge_opposite, three_points, vertex

TABLE = [Point(0, 0), Point(4, 0), Point(0, 4), Point(1, 1), Point(2, 2)]


def test_idx3_group_law():
    assert ZERO + 3 == ZERO
    assert ZERO - 1 == Idx3(2) == MINUS_ONE
    assert ONE + ONE == MINUS_ONE
    assert -ONE == MINUS_ONE
    assert 1 + ONE == MINUS_ONE
    assert Idx3.all() == (ZERO, ONE, MINUS_ONE)


def test_idx3_repr_uses_signed_representatives():
    assert repr(Idx3(2)) == "Idx3(-1)"


@pytest.mark.parametrize("value", [True, 1.0, "1"])
def test_idx3_rejects_non_integers(value):
    with pytest.raises(TypeError):
        Idx3(value)


def test_oriented_triangle_canonical_rotation():
    assert OrientedTriangle((2, 0, 1)).ids == (0, 1, 2)
    assert OrientedTriangle((1, 0, 2)).ids == (0, 2, 1)
    assert OrientedTriangle((2, 0, 1)) == OrientedTriangle((0, 1, 2))


def test_oriented_triangle_requires_three_distinct_ids():
    with pytest.raises(WrongCardinality):
        OrientedTriangle((1, 1, 2))


def test_three_points_orients_counterclockwise():
    t = three_points({0, 1, 2}, TABLE)
    assert t.vertex_set() == {0, 1, 2}
    assert orient(TABLE[vertex(t, ZERO)], TABLE[vertex(t, ONE)], TABLE[vertex(t, MINUS_ONE)]) is Orientation.COUNTERCLOCKWISE

    # ensemble donné dans un ordre quelconque
    assert three_points([2, 0, 1], TABLE) == t
    assert three_points({0, 2, 1}, TABLE).is_ccw(TABLE)


def test_three_points_collinear_set():
    with pytest.raises(DegenerateInput):
        three_points({0, 3, 4}, TABLE)


def test_three_points_wrong_cardinality():
    with pytest.raises(WrongCardinality):
        three_points({0, 1}, TABLE)
    with pytest.raises(WrongCardinality):
        three_points({0, 1, 2, 3}, TABLE)


def test_vertex_index_arithmetic():
    t = three_points({0, 1, 2}, TABLE)
    assert vertex(t, ZERO + 3) == vertex(t, ZERO)
    assert vertex(t, ZERO - 1) == vertex(t, Idx3(2))
    assert len({vertex(t, i) for i in Idx3.all()}) == 3


def test_vertex_requires_idx3():
    t = three_points({0, 1, 2}, TABLE)
    with pytest.raises(TypeError):
        vertex(t, 0)


def test_edge_opposite():
    t = three_points({0, 1, 2}, TABLE)
    assert edge_opposite(t, ZERO) == (1, 2)
    edges = {frozenset(edge_opposite(t, i)) for i in Idx3.all()}
    assert edges == {frozenset({0, 1}), frozenset({1, 2}), frozenset({0, 2})}
    for i in Idx3.all():
        u, v = edge_opposite(t, i)
        assert orient(TABLE[u], TABLE[v], TABLE[vertex(t, i)]) is Orientation.COUNTERCLOCKWISE
        # (t_{i+1}, t_{i-1}, t_i) échangé -> sens horaire
        assert orient(TABLE[v], TABLE[u], TABLE[vertex(t, i)]) is Orientation.CLOCKWISE


coords = st.integers(min_value=-100, max_value=100)
points = st.builds(Point, coords, coords)


@given(st.lists(points, min_size=3, max_size=3))
def test_three_points_every_rotation_is_ccw(pts):
    assume(orient(*pts) is not Orientation.COLLINEAR)
    t = three_points({0, 1, 2}, pts)
    assert t.vertex_set() == {0, 1, 2}
    assert t.ids[0] == 0
    for i in Idx3.all():
        a, b, c = (pts[vertex(t, j)] for j in (i, i + 1, i - 1))
        assert orient(a, b, c) is Orientation.COUNTERCLOCKWISE
