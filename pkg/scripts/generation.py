from __future__ import annotations

import numpy as np

from . import config
from .errors import CoordinateOutOfRange, GenerationExhausted, TooFewPoints
from .hull import hull_oracle
from .predicates import Orientation, Point, orient
from .triangulation import PointTable, reduced_direction

# ============================================================
# Génération de points en position générale (rejet incrémental)
#
# - generate_points : n points distincts, aucun triplet aligné ;
#   un candidat est rejeté s'il est aligné avec une paire existante
#   (deux directions réduites identiques depuis le candidat)
# - external_queries : points de requête hors de l'enveloppe,
#   alignés avec aucune paire de la table (pour check_red_run)
#
# Déterministe par (n, seed, bound) : numpy default_rng + tirages par lots.
# ============================================================

_BATCH = 256


def _fits_general_position(candidate: Point, points: list[Point]) -> bool:
    seen: set[tuple[int, int]] = set()
    for p in points:
        if p == candidate:
            return False
        key = reduced_direction(candidate, p)
        if key in seen:
            return False
        seen.add(key)
    return True


def generate_points(n: int, seed: int, bound: int) -> PointTable:
    if n < 3:
        raise TooFewPoints(f"n >= 3 requis, reçu {n}")
    if bound < 1 or bound > config.COORD_BOUND:
        raise CoordinateOutOfRange(f"Borne invalide : {bound} (attendu 1..2^30)")
    # au plus deux points par colonne sans triplet aligné ; les configurations
    # extrémales (2 par colonne) sont hors de portée du tirage glouton
    side = 2 * bound + 1
    if n >= 2 * side:
        raise GenerationExhausted(
            f"Densité trop élevée : n={n} sur une grille {side}x{side} "
            f"(heuristique : n < {2 * side} requis)"
        )

    rng = np.random.default_rng(seed)
    points: list[Point] = []
    rejected = 0
    while len(points) < n:
        for x, y in rng.integers(-bound, bound + 1, size=(_BATCH, 2)).tolist():
            candidate = Point(x, y)
            if _fits_general_position(candidate, points):
                points.append(candidate)
                if len(points) == n:
                    break
            else:
                rejected += 1
                if rejected >= config.GEN_RETRY_BUDGET:
                    raise GenerationExhausted(
                        f"Budget de {config.GEN_RETRY_BUDGET} rejets épuisé "
                        f"({len(points)}/{n} points placés)"
                    )
    return PointTable(tuple(points))


def external_queries(
    table: PointTable,
    count: int,
    seed: int,
    budget: int = config.GEN_RETRY_BUDGET,
    strict: bool = True,
) -> list[Point]:
    """
    Points strictement hors de l'enveloppe, en position générale avec la table.

    Budget de rejets épuisé : GenerationExhausted si strict, sinon les
    points trouvés jusque-là (liste vide quand l'enveloppe remplit la
    boîte de tirage bornée à 2^30).
    """
    if count <= 0:
        return []
    loop = hull_oracle(table)
    xs = [p.x for p in table]
    ys = [p.y for p in table]
    span = max(max(xs) - min(xs), max(ys) - min(ys), 1)
    lo_x = max(min(xs) - span, -config.COORD_BOUND)
    hi_x = min(max(xs) + span, config.COORD_BOUND)
    lo_y = max(min(ys) - span, -config.COORD_BOUND)
    hi_y = min(max(ys) + span, config.COORD_BOUND)

    hull_edges = [(table[x], table[y]) for x, y in loop.directed_edges()]
    points = list(table)
    rng = np.random.default_rng(seed)
    queries: list[Point] = []
    rejected = 0
    while len(queries) < count:
        cx = rng.integers(lo_x, hi_x + 1, size=_BATCH).tolist()
        cy = rng.integers(lo_y, hi_y + 1, size=_BATCH).tolist()
        for x, y in zip(cx, cy):
            q = Point(x, y)
            inside = all(orient(a, b, q) is Orientation.COUNTERCLOCKWISE for a, b in hull_edges)
            if not inside and q not in queries and _fits_general_position(q, points):
                queries.append(q)
                if len(queries) == count:
                    break
            else:
                rejected += 1
                if rejected >= budget:
                    if not strict:
                        return queries
                    raise GenerationExhausted(
                        f"Budget de rejets épuisé pour les points de requête ({len(queries)}/{count})"
                    )
    return queries
