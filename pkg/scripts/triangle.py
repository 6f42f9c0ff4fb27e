from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DegenerateInput, WrongCardinality
from .predicates import Orientation, Point, orient

# ============================================================
# Triangles orientés indexés par Z/3
#
# - Idx3 : entiers modulo 3 (éléments notés 0, 1, -1)
# - OrientedTriangle : trois identifiants de points, (t_i, t_{i+1}, t_{i-1})
#   tourne à gauche pour tout i ; forme canonique = plus petit id en 0
# - three_points : oriente un ensemble quelconque de 3 points
# ============================================================


@dataclass(frozen=True, slots=True)
class Idx3:
    value: int

    def __post_init__(self) -> None:
        if isinstance(self.value, bool) or not isinstance(self.value, int):
            raise TypeError(f"Idx3 attend un entier, reçu {self.value!r}")
        object.__setattr__(self, "value", self.value % 3)

    def __add__(self, other: Idx3 | int) -> Idx3:
        return Idx3(self.value + _raw(other))

    __radd__ = __add__

    def __sub__(self, other: Idx3 | int) -> Idx3:
        return Idx3(self.value - _raw(other))

    def __neg__(self) -> Idx3:
        return Idx3(-self.value)

    def __index__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"Idx3({(0, 1, -1)[self.value]})"

    @staticmethod
    def all() -> tuple[Idx3, Idx3, Idx3]:
        return (ZERO, ONE, MINUS_ONE)


def _raw(i: Idx3 | int) -> int:
    return i.value if isinstance(i, Idx3) else int(i)


ZERO = Idx3(0)
ONE = Idx3(1)
MINUS_ONE = Idx3(-1)


@dataclass(frozen=True, slots=True, order=True)
class OrientedTriangle:
    ids: tuple[int, int, int]

    def __post_init__(self) -> None:
        ids = tuple(int(i) for i in self.ids)
        if len(ids) != 3 or len(set(ids)) != 3:
            raise WrongCardinality(f"Un triangle exige 3 sommets distincts, reçu {ids}")
        # rotation (préserve l'orientation) : plus petit identifiant en tête
        k = ids.index(min(ids))
        object.__setattr__(self, "ids", ids[k:] + ids[:k])

    def __iter__(self):
        return iter(self.ids)

    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.ids)

    def points(self, table: Sequence[Point]) -> tuple[Point, Point, Point]:
        a, b, c = self.ids
        return (table[a], table[b], table[c])

    def is_ccw(self, table: Sequence[Point]) -> bool:
        return orient(*self.points(table)) is Orientation.COUNTERCLOCKWISE


def three_points(s: Iterable[int], table: Sequence[Point]) -> OrientedTriangle:
    """
    Oriente un ensemble de 3 identifiants : retourne le triangle dont
    l'image de (0, 1, -1) tourne à gauche. Injectif, image = s.
    """
    ids = sorted(set(int(i) for i in s))
    if len(ids) != 3:
        raise WrongCardinality(f"three_points exige exactement 3 points, reçu {len(ids)}")
    a, b, c = ids
    o = orient(table[a], table[b], table[c])
    if o is Orientation.COLLINEAR:
        raise DegenerateInput(f"Points alignés : indices {a}, {b}, {c}")
    if o is Orientation.COUNTERCLOCKWISE:
        return OrientedTriangle((a, b, c))
    return OrientedTriangle((a, c, b))


def vertex(t: OrientedTriangle, i: Idx3) -> int:
    """t_i"""
    if not isinstance(i, Idx3):
        raise TypeError(f"Indice de sommet attendu de type Idx3, reçu {i!r}")
    return t.ids[i.value]


def edge_opposite(t: OrientedTriangle, i: Idx3) -> tuple[int, int]:
    return (vertex(t, i + 1), vertex(t, i - 1))
