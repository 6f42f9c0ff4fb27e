from fractions import Fraction

import pytest

from scripts.documents import TriangulationDocument
from scripts.errors import CollinearTriple
from scripts.generation import generate_points
from scripts.hull import build_hull_loop
from scripts.predicates import Point, RationalPoint
from scripts.triangulation import PointTable, triangulate
from scripts.verifier import (
    CheckResult,
    VerificationReport,
    check_area_conservation,
    check_euler_count,
    check_hull_blue,
    check_hull_equality,
    check_no_overlap,
    check_point_coverage,
    check_red_run,
    check_sizes,
    check_vertex_union,
    fan_samples,
    verify_all,
    verify_document,
    verify_steps,
)


def statuses(report):
    return {c.name: c.status for c in report.checks}


# ----------------------------
# Checks unitaires + contrôles négatifs
# ----------------------------
def test_check_sizes():
    assert check_sizes([(0, 1, 2)]).status == "PASS"
    assert check_sizes([]).status == "PASS"
    bad = check_sizes([(0, 1, 2), (0, 0, 1)])
    assert bad.status == "FAIL"
    assert "[0, 0, 1]" in bad.detail


def test_check_vertex_union(square_table):
    assert check_vertex_union([(0, 1, 2), (0, 2, 3)], square_table).status == "PASS"
    bad = check_vertex_union([(0, 1, 2)], square_table)
    assert bad.status == "FAIL"
    assert "[3]" in bad.detail


def test_check_no_overlap_detects_crossing_triangles():
    table = PointTable.from_coords([(0, 0), (4, 0), (0, 4), (1, 1), (5, 1), (1, 5)])
    assert check_no_overlap([(0, 1, 2), (3, 4, 5)], table).status == "FAIL"


def test_check_no_overlap_shared_edge_passes(square_table):
    assert check_no_overlap([(0, 1, 2), (0, 2, 3)], square_table).status == "PASS"


def test_check_no_overlap_duplicate_triangle(square_table):
    assert check_no_overlap([(0, 1, 2), (0, 2, 1)], square_table).status == "FAIL"


def test_check_no_overlap_crossing_without_inner_vertex():
    # deux triangles en étoile : aucun sommet intérieur, arêtes sécantes
    table = PointTable.from_coords([(0, 0), (6, 0), (3, 5), (0, 3), (6, 3), (3, -2)])
    assert check_no_overlap([(0, 1, 2), (3, 4, 5)], table).status == "FAIL"


def test_check_area_conservation(square_table, split_table):
    assert check_area_conservation([(0, 1, 2), (0, 2, 3)], square_table).status == "PASS"
    assert check_area_conservation(triangulate(split_table).as_triples(), split_table).status == "PASS"
    bad = check_area_conservation([(0, 1, 2)], square_table)
    assert bad.status == "FAIL"
    assert "16" in bad.detail and "32" in bad.detail


def test_check_point_coverage_with_given_points(triangle_table, square_table):
    centroid = RationalPoint(Fraction(4, 3), Fraction(4, 3))
    assert check_point_coverage([(0, 1, 2)], triangle_table, 0, 0, sample_points=[centroid]).status == "PASS"
    # échantillon dans le triangle retiré (0, 2, 3)
    missing = RationalPoint.combination([square_table[0], square_table[2], square_table[3]], [1, 1, 1])
    assert check_point_coverage([(0, 1, 2)], square_table, 0, 0, sample_points=[missing]).status == "FAIL"


def test_check_point_coverage_counts_on_edge_samples(square_table):
    # (2, 2) est sur la diagonale partagée
    assert check_point_coverage([(0, 1, 2), (0, 2, 3)], square_table, 0, 0, sample_points=[Point(2, 2)]).status == "PASS"


def test_sampling_checks_skip_without_samples(square_table):
    assert check_point_coverage([(0, 1, 2), (0, 2, 3)], square_table, 0, 0).status == "SKIPPED"
    assert check_hull_blue([(0, 1, 2), (0, 2, 3)], square_table, 0, 0).status == "SKIPPED"


def test_fan_samples_are_deterministic(square_table):
    a = fan_samples(square_table, 50, 3)
    assert a == fan_samples(square_table, 50, 3)
    assert len(a) == 50
    assert all(0 < q.x < 4 and 0 < q.y < 4 for q in a)


def test_check_hull_blue(triangle_table):
    centroid = RationalPoint(Fraction(4, 3), Fraction(4, 3))
    assert check_hull_blue([(0, 1, 2)], triangle_table, 0, 0, sample_points=[centroid]).status == "PASS"
    assert check_hull_blue([(0, 1, 2)], triangle_table, 0, 0, sample_points=[Point(5, 5)]).status == "FAIL"
    assert check_hull_blue([(0, 1, 2)], triangle_table, 200, 1).status == "PASS"


def test_check_euler_count(triangle_table, square_table, split_table):
    assert check_euler_count([(0, 1, 2)], triangle_table).status == "PASS"
    assert check_euler_count([(0, 1, 2), (0, 2, 3)], square_table).status == "PASS"
    assert check_euler_count(triangulate(split_table).as_triples(), split_table).status == "PASS"
    assert check_euler_count([(0, 1, 2)], square_table).status == "FAIL"


def test_check_hull_equality(square):
    assert check_hull_equality(square).status == "PASS"


def test_check_red_run(triangle, square):
    assert check_red_run(square, [Point(8, 8)]).status == "PASS"
    assert check_red_run(triangle, [Point(5, 5)]).status == "PASS"

    inside = check_red_run(triangle, [Point(1, 1)])
    assert inside.status == "SKIPPED"
    assert "InsidePoint" in inside.detail

    mixed = check_red_run(triangle, [Point(1, 1), Point(5, 5)])
    assert mixed.status == "PASS"
    assert "1 intérieur" in mixed.detail


# ----------------------------
# Rapport
# ----------------------------
def test_report_overall_ignores_skipped():
    report = VerificationReport((CheckResult("a", "PASS"), CheckResult("b", "SKIPPED", "samples=0")))
    assert report.overall
    assert report.summary_lines() == ["a\tPASS\t", "b\tSKIPPED\tsamples=0"]
    assert list(report.to_frame().columns) == ["check", "status", "detail"]

    failing = VerificationReport(report.checks + (CheckResult("c", "FAIL", "x"),))
    assert not failing.overall
    assert failing.failed() == ["c"]


def test_verify_all_square(square_table):
    report = verify_all(square_table, samples=200, seed=0)
    assert report.overall
    assert set(statuses(report).values()) == {"PASS"}
    assert list(statuses(report)) == [
        "sizes", "vertex_union", "no_overlap", "area_conservation", "point_coverage",
        "hull_blue", "euler_count", "hull_equality", "red_run",
    ]


def test_verify_all_random_points():
    report = verify_all(generate_points(50, 7, 10**6), samples=1000, seed=0)
    assert report.overall, report.summary_lines()


def test_verify_all_without_samples(square_table):
    s = statuses(verify_all(square_table, samples=0, seed=0))
    assert s["point_coverage"] == "SKIPPED" and s["hull_blue"] == "SKIPPED"
    assert s["no_overlap"] == "PASS" and s["area_conservation"] == "PASS"


def test_verify_all_rejects_collinear_input():
    with pytest.raises(CollinearTriple):
        verify_all(PointTable.from_coords([(0, 0), (1, 1), (2, 2), (5, 0)]), samples=10, seed=0)


@pytest.mark.parametrize("seed", range(5))
def test_verify_steps_random_points(seed):
    report = verify_steps(generate_points(25, seed, 1000), samples=50, seed=seed)
    assert report.overall, report.summary_lines()


@pytest.mark.parametrize("seed", range(10))
def test_verify_all_many_seeds(seed):
    report = verify_all(generate_points(3 + 7 * seed, seed, 10**6), samples=100, seed=seed)
    assert report.overall, report.summary_lines()


def test_verify_all_hull_fills_coordinate_box():
    # aucun point extérieur tirable : red_run SKIPPED, pas d'exception
    b = 2**30
    table = PointTable.from_coords([(-b, -b), (b, -b), (b, b), (-b, b)])
    report = verify_all(table, samples=10, seed=0)
    assert report.overall, report.summary_lines()
    assert statuses(report)["red_run"] == "SKIPPED"
    assert verify_steps(table, samples=10, seed=0).overall


@pytest.mark.slow
@pytest.mark.parametrize("seed", range(100))
def test_verify_all_hundred_inputs(seed):
    # n de 3 à 200, 1000 échantillons par entrée
    n = 3 + (seed * 197) // 99
    report = verify_all(generate_points(n, seed, 10**6), samples=1000, seed=seed)
    assert report.overall, report.summary_lines()


@pytest.mark.slow
@pytest.mark.parametrize("seed", range(20))
def test_verify_steps_twenty_inputs(seed):
    # n jusqu'à 60, vérification après chaque insertion
    n = 3 + 3 * seed
    report = verify_steps(generate_points(n, seed, 10**6), samples=1000, seed=seed)
    assert report.overall, report.summary_lines()


# ----------------------------
# Documents rejoués
# ----------------------------
def _doc(T):
    return TriangulationDocument.from_triangulation(T, build_hull_loop(T))


def test_verify_document_valid(square):
    report = verify_document(_doc(square), samples=100, seed=0)
    assert report.overall
    assert statuses(report)["canonical_form"] == "PASS"
    assert statuses(report)["stored_hull"] == "PASS"


def test_verify_document_dropped_triangle(square):
    doc = _doc(square)
    broken = TriangulationDocument(doc.points, doc.triangles[:1], doc.hull)
    s = statuses(verify_document(broken, samples=100, seed=0))
    assert s["area_conservation"] == "FAIL"
    assert s["euler_count"] == "FAIL"
    assert s["vertex_union"] == "FAIL"


def test_verify_document_clockwise_triangle(square):
    doc = _doc(square)
    broken = TriangulationDocument(doc.points, ((0, 2, 1), (0, 2, 3)), doc.hull)
    assert statuses(verify_document(broken, samples=10, seed=0))["canonical_form"] == "FAIL"


def test_verify_document_wrong_hull(square):
    doc = _doc(square)
    broken = TriangulationDocument(doc.points, doc.triangles, (0, 3, 2, 1))
    assert statuses(verify_document(broken, samples=10, seed=0))["stored_hull"] == "FAIL"


def test_verify_document_repeated_vertex(square):
    doc = _doc(square)
    broken = TriangulationDocument(doc.points, ((0, 0, 1),) + doc.triangles, doc.hull)
    report = verify_document(broken, samples=10, seed=0)
    assert statuses(report)["sizes"] == "FAIL"
    assert not report.overall
