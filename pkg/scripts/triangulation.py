from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator, Literal, NamedTuple

from .errors import (
    CollinearTriple,
    DuplicatePoint,
    MultipleContainers,
    NoRedEdge,
    NotBoundary,
    PreconditionViolated,
    TooFewPoints,
)
from .predicates import Point, PointLike, inside_triangle, separated
from .triangle import Idx3, OrientedTriangle, three_points, vertex

# ============================================================
# Triangulation incrémentale naïve
#
# Algorithme :
# - les trois premiers points (ordre d'entrée) forment le triangle initial
# - puis, point par point :
#   - s'il est dans un triangle : on retire ce triangle et on ajoute
#     les trois triangles (point + arêtes du triangle retiré)
#   - sinon : on ajoute un triangle par arête de bord rouge
#
# Représentation :
# - une triangulation = ensemble (frozenset) de triangles orientés
#   sur une table de points partagée ; chaque insertion retourne
#   une nouvelle valeur (pas de mutation)
# - localisation par balayage linéaire : O(|T|) par point, O(n^2) au total
# ============================================================


@dataclass(frozen=True)
class PointTable:
    points: tuple[Point, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "points", tuple(self.points))

    @classmethod
    def from_coords(cls, coords: Iterable[tuple[int, int]]) -> PointTable:
        return cls(tuple(Point(x, y) for x, y in coords))

    def __len__(self) -> int:
        return len(self.points)

    def __getitem__(self, i: int) -> Point:
        return self.points[i]

    def __iter__(self) -> Iterator[Point]:
        return iter(self.points)

    def prefix(self, k: int) -> PointTable:
        return PointTable(self.points[:k])

    def appended(self, p: Point) -> tuple[PointTable, int]:
        """Ajoute un point (contrôle de doublon seulement)."""
        for i, q in enumerate(self.points):
            if q == p:
                raise DuplicatePoint(i, len(self.points))
        return PointTable(self.points + (p,)), len(self.points)

    def validate(self) -> None:
        """
        Points deux à deux distincts et en position générale.
        Détection en O(n^2) : directions réduites depuis chaque point.
        """
        seen: dict[Point, int] = {}
        for j, p in enumerate(self.points):
            if p in seen:
                raise DuplicatePoint(seen[p], j)
            seen[p] = j

        pts = self.points
        for i in range(len(pts)):
            directions: dict[tuple[int, int], int] = {}
            for j in range(i + 1, len(pts)):
                key = reduced_direction(pts[i], pts[j])
                if key in directions:
                    raise CollinearTriple(i, directions[key], j)
                directions[key] = j


def reduced_direction(p: Point, q: Point) -> tuple[int, int]:
    """Direction de p vers q, réduite et orientée (sans signe)."""
    dx, dy = q.x - p.x, q.y - p.y
    g = math.gcd(dx, dy)
    dx, dy = dx // g, dy // g
    if dx < 0 or (dx == 0 and dy < 0):
        dx, dy = -dx, -dy
    return dx, dy


class Edge(NamedTuple):
    u: int
    v: int

    @classmethod
    def of(cls, a: int, b: int) -> Edge:
        if a == b:
            raise PreconditionViolated(f"Arête dégénérée ({a}, {a})")
        return cls(a, b) if a < b else cls(b, a)


@dataclass(frozen=True)
class Triangulation:
    table: PointTable
    triangles: frozenset[OrientedTriangle]

    def __len__(self) -> int:
        return len(self.triangles)

    def sorted_triangles(self) -> list[OrientedTriangle]:
        return sorted(self.triangles)

    def as_triples(self) -> list[tuple[int, int, int]]:
        return [t.ids for t in self.sorted_triangles()]

    def vertices(self) -> frozenset[int]:
        return frozenset(i for t in self.triangles for i in t.ids)


class InsertionStep(NamedTuple):
    index: int
    kind: Literal["seed", "inside", "outside"]
    added: int
    triangulation: Triangulation


def _pair(t: OrientedTriangle, i: Idx3) -> tuple[int, int]:
    return vertex(t, i + 1), vertex(t, i - 1)


def _incidence(T: Triangulation) -> dict[Edge, list[tuple[OrientedTriangle, int]]]:
    """arête -> [(triangle, sommet opposé)]"""
    inc: dict[Edge, list[tuple[OrientedTriangle, int]]] = {}
    for t in T.sorted_triangles():
        for i in Idx3.all():
            inc.setdefault(Edge.of(*_pair(t, i)), []).append((t, vertex(t, i)))
    return inc


def _as_point(T: Triangulation, d: int | PointLike) -> PointLike:
    return T.table[d] if isinstance(d, int) else d


def edges(T: Triangulation) -> Counter[Edge]:
    """Toutes les paires de sommets des triangles, avec leur nombre d'incidences."""
    return Counter({e: len(ts) for e, ts in _incidence(T).items()})


def boundary_edges(T: Triangulation) -> frozenset[Edge]:
    return frozenset(e for e, ts in _incidence(T).items() if len(ts) == 1)


def boundary_with_opposite(T: Triangulation) -> dict[Edge, int]:
    """arête de bord -> sommet opposé dans son unique triangle"""
    return {e: owners[0][1] for e, owners in sorted(_incidence(T).items()) if len(owners) == 1}


def _is_red(T: Triangulation, e: Edge, c: int, q: PointLike) -> bool:
    P = T.table
    return separated(P[e.u], P[e.v], P[c], q)


def edge_is_red(T: Triangulation, e: Edge, d: int | PointLike) -> bool:
    """
    L'arête de bord e est rouge vis-à-vis de d si le sommet opposé de
    son unique triangle est séparé de d.
    """
    e = Edge.of(*e)
    owners = _incidence(T).get(e, [])
    if len(owners) != 1:
        raise NotBoundary(f"{tuple(e)} n'est pas une arête de bord ({len(owners)} triangle(s))")
    _, c = owners[0]
    return _is_red(T, e, c, _as_point(T, d))


def red_boundary_edges(T: Triangulation, d: int | PointLike) -> list[Edge]:
    q = _as_point(T, d)
    return [
        e
        for e, owners in sorted(_incidence(T).items())
        if len(owners) == 1 and _is_red(T, e, owners[0][1], q)
    ]


def find_containing(T: Triangulation, d: int | PointLike) -> OrientedTriangle | None:
    q = _as_point(T, d)
    found = [t for t in T.sorted_triangles() if inside_triangle(t.points(T.table), q)]
    if len(found) > 1:
        raise MultipleContainers(
            f"Point {q} dans plusieurs triangles : {[t.ids for t in found]}"
        )
    return found[0] if found else None


def insert_inside(T: Triangulation, t: OrientedTriangle, d: int) -> Triangulation:
    if t not in T.triangles:
        raise PreconditionViolated(f"Triangle {t.ids} absent de la triangulation")
    if not inside_triangle(t.points(T.table), T.table[d]):
        raise PreconditionViolated(f"Point {d} hors du triangle {t.ids}")
    split = {three_points({vertex(t, i), vertex(t, i + 1), d}, T.table) for i in Idx3.all()}
    return Triangulation(T.table, (T.triangles - {t}) | split)


def insert_outside(T: Triangulation, d: int) -> Triangulation:
    reds = red_boundary_edges(T, d)
    if not reds:
        # impossible pour un point extérieur en position générale
        raise NoRedEdge(f"Aucune arête de bord rouge pour le point {d} ({T.table[d]})")
    fan = {three_points({e.u, e.v, d}, T.table) for e in reds}
    return Triangulation(T.table, T.triangles | fan)


def with_point(T: Triangulation, p: Point) -> tuple[Triangulation, int]:
    """Étend la table d'un point de requête (pour insert_outside)."""
    table, d = T.table.appended(p)
    return Triangulation(table, T.triangles), d


def triangulate_steps(table: PointTable) -> Iterator[InsertionStep]:
    """Trace de l'algorithme : graine puis une étape par point inséré."""
    if len(table) < 3:
        raise TooFewPoints(f"Au moins 3 points requis, reçu {len(table)}")
    table.validate()

    T = Triangulation(table, frozenset({three_points({0, 1, 2}, table)}))
    yield InsertionStep(2, "seed", 1, T)

    for d in range(3, len(table)):
        before = len(T)
        t = find_containing(T, d)
        if t is not None:
            T = insert_inside(T, t, d)
            kind: Literal["inside", "outside"] = "inside"
        else:
            T = insert_outside(T, d)
            kind = "outside"
        yield InsertionStep(d, kind, len(T) - before, T)


def triangulate(table: PointTable) -> Triangulation:
    T: Triangulation | None = None
    for step in triangulate_steps(table):
        T = step.triangulation
    assert T is not None
    return T
