from __future__ import annotations

import operator
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import lcm
from typing import Callable, NamedTuple, Sequence, Union

from . import config
from .errors import CoordinateOutOfRange, DegenerateInput, PreconditionViolated

# ============================================================
# Prédicats géométriques exacts
#
# Objectif :
# - orientation exacte de trois points (signe d'un déterminant 2x2)
# - séparation par une arête, point dans un triangle
# - formes exécutables des 5 axiomes de Knuth, du symétrique
#   "pivot b" de l'axiome 5 et du lemme "à gauche du segment"
#
# Arithmétique :
# - Point : entiers Python (précision illimitée), |x|,|y| <= 2^30
# - RationalPoint : Fraction (forme irréductible, dénominateur > 0)
# Aucun flottant n'intervient dans une décision.
# ============================================================


@dataclass(frozen=True, slots=True)
class Point:
    x: int
    y: int

    def __post_init__(self) -> None:
        try:
            x = operator.index(self.x)
            y = operator.index(self.y)
        except TypeError as e:
            raise CoordinateOutOfRange(f"Coordonnées non entières : ({self.x!r}, {self.y!r})") from e
        if abs(x) > config.COORD_BOUND or abs(y) > config.COORD_BOUND:
            raise CoordinateOutOfRange(
                f"Coordonnée hors borne 2^30 : ({x}, {y})"
            )
        # normalise les entiers numpy en int Python
        object.__setattr__(self, "x", int(x))
        object.__setattr__(self, "y", int(y))

    def translated(self, dx: int, dy: int) -> Point:
        return Point(self.x + dx, self.y + dy)

    def scaled(self, k: int) -> Point:
        return Point(self.x * k, self.y * k)

    def as_rational(self) -> RationalPoint:
        return RationalPoint(Fraction(self.x), Fraction(self.y))


@dataclass(frozen=True, slots=True)
class RationalPoint:
    x: Fraction
    y: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "x", Fraction(self.x))
        object.__setattr__(self, "y", Fraction(self.y))

    @classmethod
    def combination(cls, points: Sequence[Point], weights: Sequence[int]) -> RationalPoint:
        """Combinaison convexe sum(w_i * p_i) / sum(w_i), poids entiers > 0."""
        total = sum(weights)
        if total <= 0 or any(w <= 0 for w in weights):
            raise PreconditionViolated(f"Poids non strictement positifs : {list(weights)}")
        sx = sum(w * p.x for w, p in zip(weights, points))
        sy = sum(w * p.y for w, p in zip(weights, points))
        return cls(Fraction(sx, total), Fraction(sy, total))

    def is_integral(self) -> bool:
        return self.x.denominator == 1 and self.y.denominator == 1


PointLike = Union[Point, RationalPoint]


class Orientation(Enum):
    COUNTERCLOCKWISE = 1
    CLOCKWISE = -1
    COLLINEAR = 0


# index = signe + 1
_BY_SIGN = (Orientation.CLOCKWISE, Orientation.COLLINEAR, Orientation.COUNTERCLOCKWISE)


def det(a: PointLike, b: PointLike, c: PointLike) -> int | Fraction:
    """Double de l'aire signée de (a, b, c)."""
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)


def orient(a: Point, b: Point, c: Point) -> Orientation:
    d = det(a, b, c)
    return _BY_SIGN[(d > 0) - (d < 0) + 1]


def orient_rational(a: PointLike, b: PointLike, c: PointLike) -> Orientation:
    # Fraction normalise déjà ; seul le signe du déterminant est consommé
    d = det(a, b, c)
    return _BY_SIGN[(d > 0) - (d < 0) + 1]


def _strict(a: PointLike, b: PointLike, c: PointLike) -> Orientation:
    o = orient_rational(a, b, c)
    if o is Orientation.COLLINEAR:
        raise DegenerateInput(f"Points alignés : {a}, {b}, {c}")
    return o


def separated(a: PointLike, b: PointLike, c: PointLike, d: PointLike) -> bool:
    """c et d sont de part et d'autre de la droite (a, b)."""
    return _strict(a, b, c) is not _strict(a, b, d)


def inside_triangle(t: Sequence[PointLike], d: PointLike) -> bool:
    """
    d est strictement dans le triangle t (orientation quelconque) :
    aucun sommet de t n'est séparé de d par l'arête opposée.

    Une séparation stricte suffit à conclure "dehors" ; DegenerateInput
    n'est levée que si la réponse dépend d'un triplet aligné.
    """
    if len(t) != 3:
        raise PreconditionViolated(f"Triangle à {len(t)} sommets")
    degenerate = False
    for i in range(3):
        a, b, c = t[(i + 1) % 3], t[(i + 2) % 3], t[i]
        oc = _strict(a, b, c)
        od = orient_rational(a, b, d)
        if od is Orientation.COLLINEAR:
            degenerate = True
        elif od is not oc:
            return False
    if degenerate:
        raise DegenerateInput(f"Point {d} aligné avec une arête de {tuple(t)}")
    return True


def segments_cross(p1: PointLike, p2: PointLike, q1: PointLike, q2: PointLike) -> bool:
    """
    Intersection propre : chaque segment sépare strictement les extrémités
    de l'autre. Les quatre extrémités doivent être distinctes.
    """
    return separated(p1, p2, q1, q2) and separated(q1, q2, p1, p2)


# ----------------------------
# Coordonnées homogènes entières
# ----------------------------
class HomogeneousPoint(NamedTuple):
    """Point rationnel (X / W, Y / W) porté par des entiers, W > 0 (non réduit)."""

    X: int
    Y: int
    W: int

    @classmethod
    def of(cls, p: PointLike | HomogeneousPoint) -> HomogeneousPoint:
        if isinstance(p, HomogeneousPoint):
            return p
        if isinstance(p, Point):
            return cls(p.x, p.y, 1)
        w = lcm(p.x.denominator, p.y.denominator)
        return cls(p.x.numerator * (w // p.x.denominator), p.y.numerator * (w // p.y.denominator), w)

    @classmethod
    def combination(cls, points: Sequence[Point], weights: Sequence[int]) -> HomogeneousPoint:
        """Même combinaison convexe que RationalPoint.combination, sans Fraction."""
        if any(w <= 0 for w in weights):
            raise PreconditionViolated(f"Poids non strictement positifs : {list(weights)}")
        return cls(
            sum(w * p.x for w, p in zip(weights, points)),
            sum(w * p.y for w, p in zip(weights, points)),
            sum(weights),
        )


def orient_homogeneous(a: Point, b: Point, h: HomogeneousPoint) -> Orientation:
    # det(a, b, h) multiplié par W > 0 : même signe
    d = (b.x - a.x) * (h.Y - a.y * h.W) - (b.y - a.y) * (h.X - a.x * h.W)
    return _BY_SIGN[(d > 0) - (d < 0) + 1]


# ----------------------------
# Axiomes de Knuth (formes exécutables)
# ----------------------------
class AxiomOutcome(NamedTuple):
    premise: bool
    conclusion: bool

    @property
    def holds(self) -> bool:
        return (not self.premise) or self.conclusion


def _require_distinct(points: Sequence[PointLike]) -> None:
    if len(set(points)) != len(points):
        raise DegenerateInput(f"Points non distincts : {list(points)}")


def _left(a: Point, b: Point, c: Point) -> bool:
    # "abc" : on tourne à gauche en suivant a -> b -> c
    d = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)
    if d == 0:
        raise DegenerateInput(f"Points alignés : {a}, {b}, {c}")
    return d > 0


# Évaluateurs sans contrôle de distinction : le fuzzer les appelle sur des
# tuples déjà filtrés (distincts, sans triplet aligné).
def _axiom1(a: Point, b: Point, c: Point) -> AxiomOutcome:
    return AxiomOutcome(_left(a, b, c), _left(b, c, a))


def _axiom2(a: Point, b: Point, c: Point) -> AxiomOutcome:
    return AxiomOutcome(_left(a, b, c), not _left(b, a, c))


def _axiom3(a: Point, b: Point, c: Point) -> AxiomOutcome:
    abc, bac = _left(a, b, c), _left(b, a, c)
    return AxiomOutcome(True, abc or bac)


def _axiom4(a: Point, b: Point, c: Point, d: Point) -> AxiomOutcome:
    premise = all([_left(a, b, d), _left(b, c, d), _left(c, a, d)])
    return AxiomOutcome(premise, _left(a, b, c))


def _axiom5(a: Point, b: Point, c: Point, d: Point, e: Point) -> AxiomOutcome:
    premise = all([_left(a, b, c), _left(a, b, d), _left(a, b, e), _left(a, c, d), _left(a, d, e)])
    return AxiomOutcome(premise, _left(a, c, e))


def _axiom5_pivot_b(a: Point, b: Point, c: Point, d: Point, e: Point) -> AxiomOutcome:
    # même énoncé, pivot b au lieu de a
    premise = all([_left(b, a, c), _left(b, a, d), _left(b, a, e), _left(b, c, d), _left(b, d, e)])
    return AxiomOutcome(premise, _left(b, c, e))


def axiom1_outcome(a: Point, b: Point, c: Point) -> AxiomOutcome:
    _require_distinct((a, b, c))
    return _axiom1(a, b, c)


def axiom2_outcome(a: Point, b: Point, c: Point) -> AxiomOutcome:
    _require_distinct((a, b, c))
    return _axiom2(a, b, c)


def axiom3_outcome(a: Point, b: Point, c: Point) -> AxiomOutcome:
    _require_distinct((a, b, c))
    return _axiom3(a, b, c)


def axiom4_outcome(a: Point, b: Point, c: Point, d: Point) -> AxiomOutcome:
    _require_distinct((a, b, c, d))
    return _axiom4(a, b, c, d)


def axiom5_outcome(a: Point, b: Point, c: Point, d: Point, e: Point) -> AxiomOutcome:
    _require_distinct((a, b, c, d, e))
    return _axiom5(a, b, c, d, e)


def axiom5_pivot_b_outcome(a: Point, b: Point, c: Point, d: Point, e: Point) -> AxiomOutcome:
    _require_distinct((a, b, c, d, e))
    return _axiom5_pivot_b(a, b, c, d, e)


def check_axiom1(a: Point, b: Point, c: Point) -> bool:
    return axiom1_outcome(a, b, c).holds


def check_axiom2(a: Point, b: Point, c: Point) -> bool:
    return axiom2_outcome(a, b, c).holds


def check_axiom3(a: Point, b: Point, c: Point) -> bool:
    return axiom3_outcome(a, b, c).holds


def check_axiom4(a: Point, b: Point, c: Point, d: Point) -> bool:
    return axiom4_outcome(a, b, c, d).holds


def check_axiom5(a: Point, b: Point, c: Point, d: Point, e: Point) -> bool:
    return axiom5_outcome(a, b, c, d, e).holds


def check_axiom5_pivot_b(a: Point, b: Point, c: Point, d: Point, e: Point) -> bool:
    return axiom5_pivot_b_outcome(a, b, c, d, e).holds


# nom -> (arité, évaluateur sur points distincts)
AXIOMS: dict[str, tuple[int, Callable[..., AxiomOutcome]]] = {
    "axiom1": (3, _axiom1),
    "axiom2": (3, _axiom2),
    "axiom3": (3, _axiom3),
    "axiom4": (4, _axiom4),
    "axiom5": (5, _axiom5),
    "axiom5_pivot_b": (5, _axiom5_pivot_b),
}


def check_left_of_segment_lemma(
    a: Point,
    b: Point,
    t: Sequence[Point],
    f: RationalPoint | HomogeneousPoint,
) -> bool:
    """
    Si tous les sommets du triangle t sont à gauche de [a, b] (les sommets
    égaux à a ou b sont exemptés), tout point f strictement intérieur à t
    est aussi à gauche de [a, b].

    f est évalué en coordonnées homogènes entières. Retourne
    orient(a, b, f) == CCW ; doit valoir True dès que les préconditions tiennent.
    """
    if a == b:
        raise DegenerateInput(f"Segment dégénéré [{a}, {b}]")
    if len(t) != 3:
        raise PreconditionViolated(f"Triangle à {len(t)} sommets")
    for v in t:
        if v == a or v == b:
            continue
        if orient(a, b, v) is not Orientation.COUNTERCLOCKWISE:
            raise PreconditionViolated(f"Sommet {v} pas à gauche de [{a}, {b}]")

    h = HomogeneousPoint.of(f)
    o = _strict(t[0], t[1], t[2])
    for i in range(3):
        if orient_homogeneous(t[i], t[(i + 1) % 3], h) is not o:
            raise PreconditionViolated(f"{f} n'est pas strictement intérieur à {tuple(t)}")

    return orient_homogeneous(a, b, h) is Orientation.COUNTERCLOCKWISE
