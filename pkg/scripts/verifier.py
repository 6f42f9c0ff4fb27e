from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Literal, Sequence

import numpy as np
import pandas as pd

from . import config
from .documents import TriangulationDocument
from .errors import InsidePoint, InvariantViolation
from .generation import external_queries
from .hull import (
    CyclicSequence,
    EdgeColor,
    build_hull_loop,
    classify_hull_edges,
    color_changes,
    hull_oracle,
    purple_points,
)
from .predicates import (
    HomogeneousPoint,
    Orientation,
    Point,
    RationalPoint,
    det,
    inside_triangle,
    orient,
    orient_rational,
    segments_cross,
)
from .triangulation import (
    PointTable,
    Triangulation,
    insert_outside,
    triangulate,
    triangulate_steps,
    with_point,
)

# ============================================================
# Vérificateur — propriétés de correction, oracles indépendants
#
# Propriétés vérifiées :
# - sizes            : tous les triangles ont 3 sommets distincts
# - vertex_union     : l'union des triangles est exactement l'entrée
# - no_overlap       : pas de recouvrement entre deux triangles (O(|T|^2))
# - area_conservation: somme des aires doublées = aire doublée de l'enveloppe
# - point_coverage   : échantillons rationnels de l'enveloppe couverts
# - hull_blue        : tout point intérieur voit les arêtes de bord en bleu
# - euler_count      : |T| = 2n - h - 2
# - hull_equality    : boucle de bord = enveloppe par paquet cadeau
# - red_run          : arc rouge contigu, 2 points violets, n_r triangles ajoutés
#
# Les oracles (no_overlap, area_conservation, hull_oracle) travaillent sur
# des triplets bruts et ne passent jamais par la construction.
# ============================================================

Status = Literal["PASS", "FAIL", "SKIPPED"]
Triple = Sequence[int]


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: Status
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.status != "FAIL"


def _result(name: str, failures: list[str], ok_detail: str) -> CheckResult:
    if failures:
        extra = f" (+{len(failures) - 1} autre(s))" if len(failures) > 1 else ""
        return CheckResult(name, "FAIL", failures[0] + extra)
    return CheckResult(name, "PASS", ok_detail)


@dataclass(frozen=True)
class VerificationReport:
    checks: tuple[CheckResult, ...]

    @property
    def overall(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            [(c.name, c.status, c.detail) for c in self.checks],
            columns=["check", "status", "detail"],
        )

    def summary_lines(self) -> list[str]:
        return [f"{c.name}\t{c.status}\t{c.detail}" for c in self.checks]

    def failed(self) -> list[str]:
        return [c.name for c in self.checks if c.status == "FAIL"]


# ----------------------------
# Helpers (triplets bruts)
# ----------------------------
def _is_proper(t: Triple, n: int) -> bool:
    return len(t) == 3 and len(set(t)) == 3 and all(0 <= i < n for i in t)


def _proper(triangles: Iterable[Triple], n: int) -> list[tuple[int, int, int]]:
    return [tuple(t) for t in triangles if _is_proper(t, n)]  # type: ignore[misc]


def _boundary(triangles: Sequence[tuple[int, int, int]]) -> list[tuple[int, int, int]]:
    """(u, v, sommet opposé) pour les paires présentes dans un seul triangle."""
    count: Counter[tuple[int, int]] = Counter()
    opposite: dict[tuple[int, int], int] = {}
    for a, b, c in triangles:
        for u, v, w in ((a, b, c), (b, c, a), (c, a, b)):
            key = (min(u, v), max(u, v))
            count[key] += 1
            opposite[key] = w
    return [(u, v, opposite[(u, v)]) for (u, v), k in sorted(count.items()) if k == 1]


def _doubled_area(points: Sequence[Point]) -> int:
    """Shoelace : deux fois l'aire signée d'un polygone."""
    n = len(points)
    return sum(points[i].x * points[(i + 1) % n].y - points[(i + 1) % n].x * points[i].y for i in range(n))


# ----------------------------
# Checks
# ----------------------------
def check_sizes(triangles: Sequence[Triple]) -> CheckResult:
    failures = [
        f"triangle {list(t)} : {len(set(t))} sommet(s) distinct(s) sur {len(t)}"
        for t in triangles
        if len(t) != 3 or len(set(t)) != 3
    ]
    return _result("sizes", failures, f"{len(triangles)} triangle(s) à 3 sommets")


def check_vertex_union(triangles: Sequence[Triple], table: Sequence[Point]) -> CheckResult:
    used = {i for t in triangles for i in t}
    expected = set(range(len(table)))
    failures = []
    missing = sorted(expected - used)
    extra = sorted(used - expected)
    if missing:
        failures.append(f"points absents des triangles : {missing}")
    if extra:
        failures.append(f"indices hors table : {extra}")
    return _result("vertex_union", failures, f"{len(expected)} point(s) couverts")


def _overlap(A: tuple[int, int, int], B: tuple[int, int, int], P: Sequence[Point]) -> str | None:
    if set(A) == set(B):
        return "triangles identiques"
    pa = [P[i] for i in A]
    pb = [P[i] for i in B]
    for v in A:
        if v not in B and inside_triangle(pb, P[v]):
            return f"sommet {v} intérieur"
    for v in B:
        if v not in A and inside_triangle(pa, P[v]):
            return f"sommet {v} intérieur"
    for i in range(3):
        a1, a2 = A[i], A[(i + 1) % 3]
        for j in range(3):
            b1, b2 = B[j], B[(j + 1) % 3]
            if len({a1, a2, b1, b2}) < 4:
                continue
            if segments_cross(P[a1], P[a2], P[b1], P[b2]):
                return f"arêtes ({a1}, {a2}) et ({b1}, {b2}) sécantes"
    return None


def check_no_overlap(triangles: Sequence[Triple], table: Sequence[Point]) -> CheckResult:
    tris = _proper(triangles, len(table))
    if len(tris) < 2:
        return CheckResult("no_overlap", "PASS", f"{len(tris)} triangle(s)")

    # préfiltre exact par boîtes englobantes (int64, pas de produit)
    xs = np.array([[table[i].x for i in t] for t in tris], dtype=np.int64)
    ys = np.array([[table[i].y for i in t] for t in tris], dtype=np.int64)
    minx, maxx = xs.min(axis=1), xs.max(axis=1)
    miny, maxy = ys.min(axis=1), ys.max(axis=1)

    failures: list[str] = []
    pairs = 0
    for i in range(len(tris) - 1):
        j = np.arange(i + 1, len(tris))
        mask = (minx[i] < maxx[j]) & (minx[j] < maxx[i]) & (miny[i] < maxy[j]) & (miny[j] < maxy[i])
        for k in j[mask].tolist():
            pairs += 1
            why = _overlap(tris[i], tris[k], table)
            if why is not None:
                failures.append(f"{list(tris[i])} / {list(tris[k])} : {why}")
    return _result("no_overlap", failures, f"{pairs} paire(s) candidates testées")


def check_area_conservation(triangles: Sequence[Triple], table: Sequence[Point]) -> CheckResult:
    tris = _proper(triangles, len(table))
    total = sum(abs(det(table[a], table[b], table[c])) for a, b, c in tris)
    hull = [table[i] for i in hull_oracle(table).vertices()]
    expected = _doubled_area(hull)
    failures = []
    if total != expected:
        failures.append(f"aire doublée des triangles {total} != enveloppe {expected}")
    return _result("area_conservation", failures, f"aire doublée {total}")


def fan_samples(table: Sequence[Point], samples: int, seed: int) -> list[RationalPoint]:
    """
    Combinaisons convexes à poids entiers dans [1, SAMPLE_WEIGHT_MAX] de
    triangles de l'éventail de l'enveloppe (h0, h_k, h_{k+1}).
    """
    if samples <= 0:
        return []
    hull = hull_oracle(table).vertices()
    rng = np.random.default_rng(seed)
    fans = rng.integers(1, len(hull) - 1, size=samples).tolist()
    weights = rng.integers(1, config.SAMPLE_WEIGHT_MAX + 1, size=(samples, 3)).tolist()
    return [
        RationalPoint.combination((table[hull[0]], table[hull[k]], table[hull[k + 1]]), w)
        for k, w in zip(fans, weights)
    ]


def _covers(tri: Sequence[Point], q: RationalPoint) -> bool:
    """q dans ou sur le triangle (orientation quelconque)."""
    o = orient(*tri)
    return all(
        orient_rational(tri[i], tri[(i + 1) % 3], q) in (o, Orientation.COLLINEAR)
        for i in range(3)
    )


def _sample_points(
    table: Sequence[Point],
    samples: int,
    seed: int,
    sample_points: Sequence[RationalPoint | Point] | None,
) -> list[RationalPoint] | None:
    if sample_points is not None:
        return [p if isinstance(p, RationalPoint) else p.as_rational() for p in sample_points]
    if samples <= 0:
        return None
    return fan_samples(table, samples, seed)


def check_point_coverage(
    triangles: Sequence[Triple],
    table: Sequence[Point],
    samples: int,
    seed: int,
    sample_points: Sequence[RationalPoint | Point] | None = None,
) -> CheckResult:
    qs = _sample_points(table, samples, seed, sample_points)
    if qs is None:
        return CheckResult("point_coverage", "SKIPPED", "samples=0")

    tris = _proper(triangles, len(table))
    pts = [tuple(table[i] for i in t) for t in tris]
    xs = np.array([[p.x for p in t] for t in pts], dtype=np.int64).reshape(-1, 3)
    ys = np.array([[p.y for p in t] for t in pts], dtype=np.int64).reshape(-1, 3)
    minx, maxx = xs.min(axis=1, initial=0), xs.max(axis=1, initial=0)
    miny, maxy = ys.min(axis=1, initial=0), ys.max(axis=1, initial=0)

    failures = []
    for q in qs:
        X, Y, W = HomogeneousPoint.of(q)
        if W <= 2**32 and len(pts):
            # boîte englobante en coordonnées homogènes : min*W <= X <= max*W
            mask = (minx * W <= X) & (X <= maxx * W) & (miny * W <= Y) & (Y <= maxy * W)
            candidates = np.flatnonzero(mask).tolist()
        else:
            candidates = list(range(len(pts)))
        if not any(_covers(pts[k], q) for k in candidates):
            failures.append(f"échantillon ({q.x}, {q.y}) hors de tout triangle")
    return _result("point_coverage", failures, f"{len(qs)} échantillon(s) couverts")


def check_hull_blue(
    triangles: Sequence[Triple],
    table: Sequence[Point],
    samples: int,
    seed: int,
    sample_points: Sequence[RationalPoint | Point] | None = None,
) -> CheckResult:
    qs = _sample_points(table, samples, seed, sample_points)
    if qs is None:
        return CheckResult("hull_blue", "SKIPPED", "samples=0")

    boundary = [
        (table[u], table[v], orient(table[u], table[v], table[c]))
        for u, v, c in _boundary(_proper(triangles, len(table)))
    ]
    failures = []
    for q in qs:
        for a, b, side in boundary:
            # bleu : sommet opposé et échantillon du même côté
            if orient_rational(a, b, q) is not side:
                failures.append(f"arête ({a.x},{a.y})-({b.x},{b.y}) rouge pour ({q.x}, {q.y})")
                break
    return _result("hull_blue", failures, f"{len(qs)} échantillon(s) x {len(boundary)} arête(s) de bord")


def check_euler_count(triangles: Sequence[Triple], table: Sequence[Point]) -> CheckResult:
    n = len(table)
    h = len(hull_oracle(table))
    expected = 2 * n - h - 2
    failures = []
    if len(triangles) != expected:
        failures.append(f"|T|={len(triangles)} != 2n-h-2={expected} (n={n}, h={h})")
    return _result("euler_count", failures, f"|T|={expected} (n={n}, h={h})")


def check_hull_equality(T: Triangulation) -> CheckResult:
    built = build_hull_loop(T)
    oracle = hull_oracle(T.table)
    failures = []
    if built.cycle != oracle.cycle:
        failures.append(f"bord {list(built.vertices())} != enveloppe {list(oracle.vertices())}")
    return _result("hull_equality", failures, f"cycle de longueur {len(oracle)}")


def check_red_run(T: Triangulation, external_points: Sequence[Point]) -> CheckResult:
    if not external_points:
        return CheckResult("red_run", "SKIPPED", "aucun point de requête extérieur")

    loop = build_hull_loop(T)
    failures: list[str] = []
    tested = skipped = 0
    for q in external_points:
        try:
            colors = classify_hull_edges(loop, T, q)
        except InsidePoint:
            skipped += 1
            continue
        tested += 1
        changes = color_changes(colors)
        try:
            report = purple_points(loop, T, q)
            extended, d = with_point(T, q)
            grown = insert_outside(extended, d)
            new_loop = build_hull_loop(grown)
        except InvariantViolation as e:
            failures.append(f"{q} : {e}")
            continue

        added = len(grown) - len(T)
        if changes != 2:
            failures.append(f"{q} : {changes} changement(s) de couleur")
        elif report.n_r < 1 or colors.count(EdgeColor.RED) != report.n_r:
            failures.append(f"{q} : n_r={report.n_r} incohérent")
        elif added != report.n_r:
            failures.append(f"{q} : {added} triangle(s) ajouté(s) pour n_r={report.n_r}")
        elif new_loop.f(report.p1) != d or new_loop.f(d) != report.p2:
            failures.append(f"{q} : nouveau bord sans [p1, d] puis [d, p2]")

    detail = f"{tested} point(s) extérieur(s) testé(s)"
    if skipped:
        detail += f", {skipped} intérieur(s) ignoré(s) (InsidePoint)"
    if not tested and not failures:
        return CheckResult("red_run", "SKIPPED", detail)
    return _result("red_run", failures, detail)


# ----------------------------
# Agrégation
# ----------------------------
def _triangle_checks(
    triples: Sequence[Triple],
    table: Sequence[Point],
    samples: int,
    seed: int,
) -> list[CheckResult]:
    return [
        check_sizes(triples),
        check_vertex_union(triples, table),
        check_no_overlap(triples, table),
        check_area_conservation(triples, table),
        check_point_coverage(triples, table, samples, seed),
        check_hull_blue(triples, table, samples, seed),
        check_euler_count(triples, table),
    ]


def _checks_for(T: Triangulation, samples: int, seed: int, queries: Sequence[Point]) -> list[CheckResult]:
    return _triangle_checks(T.as_triples(), T.table, samples, seed) + [
        check_hull_equality(T),
        check_red_run(T, queries),
    ]


def verify_all(
    table: PointTable,
    samples: int = config.DEFAULT_SAMPLES,
    seed: int = config.DEFAULT_SEED,
    queries: Sequence[Point] | None = None,
) -> VerificationReport:
    T = triangulate(table)
    if queries is None:
        queries = external_queries(
            table, config.RED_RUN_QUERIES, seed, budget=config.QUERY_RETRY_BUDGET, strict=False
        )
    return VerificationReport(tuple(_checks_for(T, samples, seed, queries)))


def verify_steps(
    table: PointTable,
    samples: int = config.DEFAULT_SAMPLES,
    seed: int = config.DEFAULT_SEED,
    queries_per_step: int = 3,
) -> VerificationReport:
    """Forme "invariant de boucle" : toutes les vérifications après chaque insertion."""
    step_samples = min(samples, config.PER_STEP_SAMPLE_CAP)
    first_failure: dict[str, CheckResult] = {}
    statuses: dict[str, set[str]] = {}
    steps = 0
    for step in triangulate_steps(table):
        steps += 1
        k = step.index + 1
        prefix = table.prefix(k)
        T = Triangulation(prefix, step.triangulation.triangles)
        queries = external_queries(
            prefix, queries_per_step, seed + k, budget=config.QUERY_RETRY_BUDGET, strict=False
        )
        for c in _checks_for(T, step_samples, seed + k, queries):
            statuses.setdefault(c.name, set()).add(c.status)
            if c.status == "FAIL" and c.name not in first_failure:
                first_failure[c.name] = CheckResult(c.name, "FAIL", f"étape {step.index} : {c.detail}")

    checks = []
    for name, seen in statuses.items():
        if name in first_failure:
            checks.append(first_failure[name])
        elif seen == {"SKIPPED"}:
            checks.append(CheckResult(name, "SKIPPED", f"{steps} étape(s)"))
        else:
            checks.append(CheckResult(name, "PASS", f"{steps} étape(s)"))
    return VerificationReport(tuple(checks))


def check_canonical_form(doc: TriangulationDocument) -> CheckResult:
    table = doc.table()
    failures = []
    for t in doc.triangles:
        if not _is_proper(t, len(table)):
            continue
        a, b, c = t
        if a != min(t) or orient(table[a], table[b], table[c]) is not Orientation.COUNTERCLOCKWISE:
            failures.append(f"triangle {list(t)} non canonique (CCW, plus petit indice en tête)")
    if list(doc.triangles) != sorted(doc.triangles):
        failures.append("liste de triangles non triée")
    return _result("canonical_form", failures, f"{len(doc.triangles)} triangle(s) canoniques")


def check_stored_hull(doc: TriangulationDocument) -> CheckResult:
    oracle = hull_oracle(doc.table())
    failures = []
    if len(set(doc.hull)) != len(doc.hull):
        failures.append(f"bord stocké avec répétitions : {list(doc.hull)}")
    elif CyclicSequence(doc.hull) != oracle.cycle or doc.hull != oracle.vertices():
        failures.append(f"bord stocké {list(doc.hull)} != enveloppe {list(oracle.vertices())}")
    return _result("stored_hull", failures, f"cycle de longueur {len(oracle)}")


def verify_document(
    doc: TriangulationDocument,
    samples: int = config.DEFAULT_SAMPLES,
    seed: int = config.DEFAULT_SEED,
) -> VerificationReport:
    """Rejoue un document (éventuellement corrompu) à travers les vérifications."""
    table = doc.table()
    table.validate()
    checks = [check_canonical_form(doc)]
    checks += _triangle_checks(doc.triangles, table, samples, seed)
    checks.append(check_stored_hull(doc))
    return VerificationReport(tuple(checks))
