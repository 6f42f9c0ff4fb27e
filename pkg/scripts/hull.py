from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator, Sequence

from .errors import (
    ContiguityViolation,
    DegenerateInput,
    InsidePoint,
    MalformedBoundary,
    TooFewPoints,
)
from .predicates import Orientation, Point, PointLike, orient
from .triangulation import (
    Edge,
    Triangulation,
    boundary_with_opposite,
    find_containing,
    red_boundary_edges,
)

# ============================================================
# Bord de l'enveloppe convexe vu comme une boucle
#
# - HullLoop : fonction successeur f sur les sommets du bord,
#   [x, f(x)] est une arête de bord, tous les autres points à gauche,
#   f est un unique cycle de longueur n (f^n = id)
# - classification rouge / bleu des arêtes du bord vis-à-vis d'un point
# - points violets p1, p2 et longueur n_r de l'arc rouge
# - hull_oracle : enveloppe par paquet cadeau (Jarvis), indépendante
#   de toute triangulation (oracle du vérificateur)
#
# Toute l'arithmétique modulo n passe par CyclicSequence.
# ============================================================


@dataclass(frozen=True)
class CyclicSequence:
    """Séquence cyclique stockée sous forme canonique (plus petit élément en tête)."""

    items: tuple[int, ...]
    _index: dict[int, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        items = tuple(int(i) for i in self.items)
        if len(set(items)) != len(items):
            raise MalformedBoundary(f"Séquence cyclique avec répétitions : {items}")
        if items:
            k = items.index(min(items))
            items = items[k:] + items[:k]
        object.__setattr__(self, "items", items)
        object.__setattr__(self, "_index", {x: k for k, x in enumerate(items)})

    def __len__(self) -> int:
        return len(self.items)

    def __iter__(self) -> Iterator[int]:
        return iter(self.items)

    def __contains__(self, x: object) -> bool:
        return x in self._index

    def index(self, x: int) -> int:
        try:
            return self._index[x]
        except KeyError:
            raise KeyError(f"{x} n'appartient pas au cycle {self.items}") from None

    def at(self, k: int) -> int:
        return self.items[k % len(self.items)]

    def shift(self, x: int, k: int = 1) -> int:
        return self.at(self.index(x) + k)


class EdgeColor(Enum):
    RED = "RED"
    BLUE = "BLUE"


@dataclass(frozen=True)
class HullLoop:
    cycle: CyclicSequence

    def __len__(self) -> int:
        return len(self.cycle)

    @property
    def start(self) -> int:
        return self.cycle.at(0)

    def f(self, x: int) -> int:
        return self.cycle.shift(x, 1)

    def f_pow(self, x: int, k: int) -> int:
        return self.cycle.shift(x, k)

    def orbit(self, x: int) -> list[int]:
        return [self.f_pow(x, k) for k in range(len(self))]

    def directed_edges(self, start: int | None = None) -> list[tuple[int, int]]:
        x0 = self.start if start is None else start
        return [(x, self.f(x)) for x in self.orbit(x0)]

    def vertices(self) -> tuple[int, ...]:
        return self.cycle.items


@dataclass(frozen=True)
class PurpleReport:
    p1: int
    p2: int
    n_r: int


def build_hull_loop(T: Triangulation) -> HullLoop:
    """
    Oriente chaque arête de bord (a, b) pour que le sommet opposé soit
    à gauche, puis chaîne les arêtes orientées en un cycle.
    """
    P = T.table
    succ: dict[int, int] = {}
    for e, c in boundary_with_opposite(T).items():
        a, b = (e.u, e.v) if orient(P[e.u], P[e.v], P[c]) is Orientation.COUNTERCLOCKWISE else (e.v, e.u)
        if a in succ:
            raise MalformedBoundary(f"Sommet {a} avec deux successeurs : {succ[a]} et {b}")
        succ[a] = b

    if len(succ) < 3:
        raise MalformedBoundary(f"Bord à {len(succ)} arête(s)")

    x0 = min(succ)
    loop = [x0]
    x = succ[x0]
    while x != x0:
        if x not in succ or len(loop) > len(succ):
            raise MalformedBoundary(f"Arêtes de bord non chaînées en un cycle à partir de {x0}")
        loop.append(x)
        x = succ[x]
    if len(loop) != len(succ):
        raise MalformedBoundary(f"Bord en plusieurs cycles : {len(loop)} / {len(succ)} arêtes")

    L = HullLoop(CyclicSequence(tuple(loop)))

    # tous les autres sommets strictement à gauche de [x, f(x)]
    vertices = sorted(T.vertices())
    for x, y in L.directed_edges():
        for p in vertices:
            if p in (x, y):
                continue
            if orient(P[x], P[y], P[p]) is not Orientation.COUNTERCLOCKWISE:
                raise MalformedBoundary(f"Point {p} pas à gauche de l'arête de bord ({x}, {y})")
    return L


def classify_hull_edges(
    L: HullLoop,
    T: Triangulation,
    d: PointLike,
    start: int | None = None,
) -> list[EdgeColor]:
    """Couleur de [f^k(x0), f^{k+1}(x0)] pour k = 0..n-1."""
    t = find_containing(T, d)
    if t is not None:
        raise InsidePoint(f"Point {d} dans le triangle {t.ids}", triangle=t.ids)
    red = set(red_boundary_edges(T, d))
    return [
        EdgeColor.RED if Edge.of(x, y) in red else EdgeColor.BLUE
        for x, y in L.directed_edges(start)
    ]


def color_changes(colors: Sequence[EdgeColor]) -> int:
    return sum(1 for k in range(len(colors)) if colors[k - 1] is not colors[k])


def purple_points(L: HullLoop, T: Triangulation, d: PointLike) -> PurpleReport:
    colors = classify_hull_edges(L, T, d)
    n = len(L)
    p1 = [L.f_pow(L.start, k) for k in range(n)
          if colors[k] is EdgeColor.RED and colors[k - 1] is EdgeColor.BLUE]
    p2 = [L.f_pow(L.start, k) for k in range(n)
          if colors[k] is EdgeColor.BLUE and colors[k - 1] is EdgeColor.RED]
    if len(p1) != 1 or len(p2) != 1:
        raise ContiguityViolation(
            f"Arêtes rouges non contiguës pour {d} : {[c.value for c in colors]}"
        )

    n_r = colors.count(EdgeColor.RED)
    report = PurpleReport(p1[0], p2[0], n_r)
    if L.f_pow(report.p1, n_r) != report.p2:
        raise ContiguityViolation(f"f^{n_r}(p1) != p2 pour {d}")
    return report


def hull_oracle(table: Sequence[Point]) -> HullLoop:
    """Enveloppe convexe CCW par paquet cadeau (Jarvis), orient exact."""
    n = len(table)
    if n < 3:
        raise TooFewPoints(f"Au moins 3 points requis, reçu {n}")

    start = min(range(n), key=lambda i: (table[i].y, table[i].x))
    hull = [start]
    current = start
    while True:
        cand = (current + 1) % n
        for r in range(n):
            if r in (current, cand):
                continue
            o = orient(table[current], table[cand], table[r])
            if o is Orientation.COLLINEAR:
                raise DegenerateInput(f"Points alignés : indices {current}, {cand}, {r}")
            if o is Orientation.CLOCKWISE:
                cand = r
        if cand == start:
            break
        hull.append(cand)
        current = cand
        if len(hull) > n:
            raise MalformedBoundary("Paquet cadeau sans retour au point de départ")
    return HullLoop(CyclicSequence(tuple(hull)))
