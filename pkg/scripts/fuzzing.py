from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cmp_to_key
from typing import Callable, Iterator, Sequence

import numpy as np
import pandas as pd

from . import config
from .errors import CoordinateOutOfRange, GenerationExhausted, PreconditionViolated
from .predicates import (
    AXIOMS,
    AxiomOutcome,
    Orientation,
    Point,
    HomogeneousPoint,
    check_left_of_segment_lemma,
    orient,
)

# ============================================================
# Fuzzing des axiomes d'orientation + lemme "à gauche du segment"
#
# Chaque essai tire 5 points distincts sans triplet aligné dans
# [-bound, bound]^2 (rejet vectorisé numpy), puis évalue :
# - axiomes 1..3 sur (a, b, c)
# - axiome 4 sur (a, b, c) orienté CCW + d
# - axiome 5 et symétrique pivot b, prémisses "orientées" quand c, d, e
#   sont du même côté de (a, b) : tri angulaire autour du pivot
# - lemme : 4 variantes cycliques (aucun sommet partagé, c = a, c = b,
#   t = (a, b, e)), f combinaison convexe à poids dans [1, 97]
#   portée en coordonnées homogènes entières
#
# Compteurs par propriété : tested / vacuous (prémisse fausse) / violated.
# ============================================================

PROPERTIES = ("axiom1", "axiom2", "axiom3", "axiom4", "axiom5", "axiom5_pivot_b", "left_of_segment")

_TRIPLES = list(itertools.combinations(range(5), 3))


@dataclass
class FuzzReport:
    trials: int
    counts: pd.DataFrame

    @property
    def violations(self) -> int:
        return int(self.counts["violated"].sum())

    def summary_lines(self) -> list[str]:
        return [
            f"{row.property}\ttested={row.tested}\tvacuous={row.vacuous}\tviolated={row.violated}"
            for row in self.counts.itertuples(index=False)
        ]


def _check_bound(bound: int) -> None:
    if bound < 1 or bound > config.COORD_BOUND:
        raise CoordinateOutOfRange(f"Borne invalide : {bound} (attendu 1..2^30)")


def _general_position_mask(batch: np.ndarray) -> np.ndarray:
    """Aucun triplet aligné (un doublon annule aussi le déterminant)."""
    ok = np.ones(batch.shape[0], dtype=bool)
    for i, j, k in _TRIPLES:
        a, b, c = batch[:, i], batch[:, j], batch[:, k]
        d = (b[:, 0] - a[:, 0]) * (c[:, 1] - a[:, 1]) - (b[:, 1] - a[:, 1]) * (c[:, 0] - a[:, 0])
        ok &= d != 0
    return ok


def general_position_tuples(
    rng: np.random.Generator,
    bound: int,
) -> Iterator[tuple[tuple[Point, ...], list[int]]]:
    """Flux infini de (5 points en position générale, 3 poids de combinaison)."""
    _check_bound(bound)
    # au-delà de 2^20 les déterminants débordent int64 : entiers Python
    dtype = np.int64 if bound <= 2**20 else object

    rejected = 0
    while True:
        raw = rng.integers(-bound, bound + 1, size=(config.FUZZ_BATCH, 5, 2))
        weights = rng.integers(1, config.SAMPLE_WEIGHT_MAX + 1, size=(config.FUZZ_BATCH, 3))
        batch = raw.astype(dtype)
        mask = _general_position_mask(batch)
        rejected += int((~mask).sum())
        for row, w in zip(raw[mask].tolist(), weights[mask].tolist()):
            yield tuple(Point(x, y) for x, y in row), w
        if rejected >= config.GEN_RETRY_BUDGET:
            raise GenerationExhausted(f"Budget de {config.GEN_RETRY_BUDGET} rejets épuisé (bound={bound})")


# ----------------------------
# Orientation des prémisses
# ----------------------------
def _all_left(a: Point, b: Point, pts: Sequence[Point]) -> tuple[Point, Point] | None:
    """(a, b) ou (b, a) tel que tous les points soient à gauche, sinon None."""
    sides = {orient(a, b, p) for p in pts}
    if sides == {Orientation.COUNTERCLOCKWISE}:
        return a, b
    if sides == {Orientation.CLOCKWISE}:
        return b, a
    return None


def _angular(pivot: Point, pts: Sequence[Point]) -> list[Point]:
    # points d'un même demi-plan : orient(pivot, x, y) est un ordre total
    def cmp(x: Point, y: Point) -> int:
        return -1 if orient(pivot, x, y) is Orientation.COUNTERCLOCKWISE else 1

    return sorted(pts, key=cmp_to_key(cmp))


def _axiom_instances(pts: tuple[Point, ...]) -> dict[str, tuple[Point, ...]]:
    a, b, c, d, e = pts
    out: dict[str, tuple[Point, ...]] = {
        "axiom1": (a, b, c),
        "axiom2": (a, b, c),
        "axiom3": (a, b, c),
    }
    ccw = (a, b, c) if orient(a, b, c) is Orientation.COUNTERCLOCKWISE else (a, c, b)
    out["axiom4"] = ccw + (d,)

    side = _all_left(a, b, (c, d, e))
    if side is None:
        out["axiom5"] = pts
        out["axiom5_pivot_b"] = pts
    else:
        p, q = side
        fan = _angular(p, (c, d, e))
        out["axiom5"] = (p, q, *fan)
        # pivot b : c, d, e à gauche de (b, a), même ordre angulaire
        out["axiom5_pivot_b"] = (q, p, *fan)
    return out


def _lemma_instance(
    pts: tuple[Point, ...],
    weights: list[int],
    variant: int,
) -> tuple[Point, Point, tuple[Point, Point, Point], HomogeneousPoint] | None:
    a, b, c, d, e = pts
    if variant == 0:
        t_free: tuple[Point, ...] = (c, d, e)
    elif variant == 1:
        t_free = (d, e)
    elif variant == 2:
        t_free = (d, e)
    else:
        t_free = (e,)

    side = _all_left(a, b, t_free)
    if side is None:
        return None
    p, q = side
    if variant == 0:
        t = (c, d, e)
    elif variant == 1:
        t = (p, d, e)
    elif variant == 2:
        t = (q, d, e)
    else:
        t = (p, q, e)
    return p, q, t, HomogeneousPoint.combination(t, weights)


# ----------------------------
# Driver
# ----------------------------
def fuzz_axioms(trials: int, seed: int, bound: int) -> FuzzReport:
    if trials < 0:
        raise PreconditionViolated(f"trials >= 0 requis, reçu {trials}")
    _check_bound(bound)
    counts = {name: {"tested": 0, "vacuous": 0, "violated": 0} for name in PROPERTIES}

    if trials:
        rng = np.random.default_rng(seed)
        stream = general_position_tuples(rng, bound)
        for trial in range(trials):
            pts, weights = next(stream)
            for name, args in _axiom_instances(pts).items():
                arity, fn = AXIOMS[name]
                _tally(counts[name], fn(*args[:arity]))

            inst = _lemma_instance(pts, weights, trial % 4)
            c = counts["left_of_segment"]
            c["tested"] += 1
            if inst is None:
                c["vacuous"] += 1
            elif not check_left_of_segment_lemma(*inst):
                c["violated"] += 1

    df = pd.DataFrame(
        [(name, v["tested"], v["vacuous"], v["violated"]) for name, v in counts.items()],
        columns=["property", "tested", "vacuous", "violated"],
    )
    return FuzzReport(trials, df)


def _tally(c: dict[str, int], outcome: AxiomOutcome) -> None:
    c["tested"] += 1
    if not outcome.premise:
        c["vacuous"] += 1
    elif not outcome.conclusion:
        c["violated"] += 1


def exhaustive_grid(
    size: int,
    arity: int,
    check: Callable[..., AxiomOutcome],
) -> tuple[int, int]:
    """
    Tous les k-uplets ordonnés de points distincts de [0, size]^2 sans
    triplet aligné. Retourne (nombre testé, nombre de violations).
    """
    grid = [Point(x, y) for x in range(size + 1) for y in range(size + 1)]
    n = len(grid)
    collinear = {
        (i, j, k)
        for i, j, k in itertools.permutations(range(n), 3)
        if orient(grid[i], grid[j], grid[k]) is Orientation.COLLINEAR
    }
    tested = violated = 0
    for combo in itertools.combinations(range(n), arity):
        if any(t in collinear for t in itertools.combinations(combo, 3)):
            continue
        for perm in itertools.permutations(combo):
            tested += 1
            if not check(*(grid[i] for i in perm)).holds:
                violated += 1
    return tested, violated
