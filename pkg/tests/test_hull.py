import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from scripts.errors import DegenerateInput, InsidePoint, MalformedBoundary
from scripts.generation import external_queries, generate_points
from scripts.hull import (
    CyclicSequence,
    EdgeColor,
    PurpleReport,
    build_hull_loop,
    classify_hull_edges,
    color_changes,
    hull_oracle,
    purple_points,
)
from scripts.predicates import Orientation, Point, orient
from scripts.triangle import three_points
from scripts.triangulation import (
    Edge,
    PointTable,
    Triangulation,
    boundary_edges,
    insert_outside,
    triangulate,
    with_point,
)

RED, BLUE = EdgeColor.RED, EdgeColor.BLUE


def test_cyclic_sequence_is_stored_canonically():
    c = CyclicSequence((2, 0, 1))
    assert c.items == (0, 1, 2)
    assert c == CyclicSequence((1, 2, 0))
    assert c.shift(2) == 0
    assert c.shift(0, -1) == 2
    assert c.at(5) == 2
    assert 1 in c and 7 not in c


def test_cyclic_sequence_rejects_repetitions():
    with pytest.raises(MalformedBoundary):
        CyclicSequence((0, 1, 0))


def test_build_hull_loop_examples(triangle, square, split_table):
    assert build_hull_loop(triangle).vertices() == (0, 1, 2)
    assert build_hull_loop(square).vertices() == (0, 1, 2, 3)
    L = build_hull_loop(triangulate(split_table))
    assert L.vertices() == (0, 1, 2)
    assert 3 not in L.cycle


def test_hull_loop_is_a_single_cycle(square):
    L = build_hull_loop(square)
    n = len(L)
    for x in L.vertices():
        assert L.f_pow(x, n) == x
        assert sorted(L.orbit(x)) == sorted(L.vertices())
        assert Edge.of(x, L.f(x)) in boundary_edges(square)


def test_build_hull_loop_rejects_broken_boundary(square_table):
    # deux triangles disjoints : deux cycles
    table = PointTable.from_coords([(0, 0), (4, 0), (0, 4), (10, 10), (14, 10), (10, 14)])
    T = triangulate(table.prefix(3))
    T = Triangulation(table, T.triangles | {three_points({3, 4, 5}, table)})
    with pytest.raises(MalformedBoundary):
        build_hull_loop(T)
    with pytest.raises(MalformedBoundary):
        build_hull_loop(Triangulation(square_table, frozenset()))


def test_classify_examples(triangle, square):
    assert classify_hull_edges(build_hull_loop(triangle), triangle, Point(5, 5)) == [BLUE, RED, BLUE]
    L = build_hull_loop(square)
    assert classify_hull_edges(L, square, Point(8, 8)) == [BLUE, RED, RED, BLUE]
    assert classify_hull_edges(L, square, Point(2, -3)) == [RED, BLUE, BLUE, BLUE]


def test_classify_from_another_start(square):
    L = build_hull_loop(square)
    assert classify_hull_edges(L, square, Point(8, 8), start=2) == [RED, BLUE, BLUE, RED]


def test_classify_inside_point(triangle):
    with pytest.raises(InsidePoint) as exc:
        classify_hull_edges(build_hull_loop(triangle), triangle, Point(1, 1))
    assert exc.value.triangle == (0, 1, 2)


def test_classify_collinear_with_hull_edge(triangle):
    with pytest.raises(DegenerateInput):
        classify_hull_edges(build_hull_loop(triangle), triangle, Point(8, 0))


@pytest.mark.parametrize(
    "fixture, q, expected",
    [
        ("triangle", (5, 5), PurpleReport(1, 2, 1)),
        ("square", (8, 8), PurpleReport(1, 3, 2)),
        ("square", (2, -3), PurpleReport(0, 1, 1)),
    ],
)
def test_purple_points_examples(request, fixture, q, expected):
    T = request.getfixturevalue(fixture)
    assert purple_points(build_hull_loop(T), T, Point(*q)) == expected


def test_color_changes():
    assert color_changes([BLUE, RED, RED, BLUE]) == 2
    assert color_changes([RED, BLUE, RED, BLUE]) == 4
    assert color_changes([BLUE, BLUE, BLUE]) == 0


def test_hull_after_outside_insertion(triangle):
    report = purple_points(build_hull_loop(triangle), triangle, Point(5, 5))
    T, d = with_point(triangle, Point(5, 5))
    L = build_hull_loop(insert_outside(T, d))
    assert L.f(report.p1) == d
    assert L.f(d) == report.p2


def test_hull_oracle_examples():
    square_plus = PointTable.from_coords([(0, 0), (4, 0), (4, 4), (0, 4), (2, 1)])
    assert hull_oracle(square_plus).vertices() == (0, 1, 2, 3)

    three = PointTable.from_coords([(0, 4), (4, 0), (0, 0)])
    assert hull_oracle(three).vertices() == (0, 2, 1)

    pentagon = PointTable.from_coords([(2, 0), (4, 1), (3, 4), (1, 4), (0, 1)])
    assert hull_oracle(pentagon).vertices() == (0, 1, 2, 3, 4)


def test_hull_oracle_rejects_collinear_hull():
    with pytest.raises(DegenerateInput):
        hull_oracle(PointTable.from_coords([(0, 0), (2, 0), (4, 0), (2, 3)]))


tables = st.builds(
    generate_points,
    n=st.integers(min_value=3, max_value=40),
    seed=st.integers(min_value=0, max_value=2**32 - 1),
    bound=st.just(1000),
)


@settings(max_examples=40, deadline=None)
@given(tables)
def test_hull_loop_matches_oracle(table):
    T = triangulate(table)
    L = build_hull_loop(T)
    assert L.cycle == hull_oracle(table).cycle
    for x, y in L.directed_edges():
        for p in range(len(table)):
            if p not in (x, y):
                assert orient(table[x], table[y], table[p]) is Orientation.COUNTERCLOCKWISE


@settings(max_examples=30, deadline=None)
@given(tables, st.integers(min_value=0, max_value=2**32 - 1))
def test_red_arc_is_contiguous(table, seed):
    T = triangulate(table)
    L = build_hull_loop(T)
    for q in external_queries(table, 5, seed):
        colors = classify_hull_edges(L, T, q)
        assert color_changes(colors) == 2
        rep = purple_points(L, T, q)
        assert rep.n_r >= 1
        assert L.f_pow(rep.p1, rep.n_r) == rep.p2
        arc = classify_hull_edges(L, T, q, start=rep.p1)
        assert arc == [RED] * rep.n_r + [BLUE] * (len(L) - rep.n_r)

        extended, d = with_point(T, q)
        grown = insert_outside(extended, d)
        assert len(grown) - len(T) == rep.n_r
        new_loop = build_hull_loop(grown)
        assert new_loop.f(rep.p1) == d and new_loop.f(d) == rep.p2


@pytest.mark.slow
@pytest.mark.parametrize("seed", range(20))
def test_red_arc_twenty_queries_per_triangulation(seed):
    table = generate_points(3 + 5 * seed, seed, 10**6)
    T = triangulate(table)
    L = build_hull_loop(T)
    queries = external_queries(table, 20, seed)
    assert len(queries) == 20
    for q in queries:
        assert color_changes(classify_hull_edges(L, T, q)) == 2
        rep = purple_points(L, T, q)
        assert rep.n_r >= 1
        assert classify_hull_edges(L, T, q, start=rep.p1) == [RED] * rep.n_r + [BLUE] * (len(L) - rep.n_r)
        extended, d = with_point(T, q)
        assert len(insert_outside(extended, d)) - len(T) == rep.n_r
