from __future__ import annotations

import io
import json
import re
from dataclasses import dataclass
from pathlib import Path

import pandas as pd

from . import config
from .errors import PointFileError
from .hull import HullLoop
from .triangulation import PointTable, Triangulation

# ============================================================
# Formats de fichiers
#
# PointFile (entrée) :
# - une ligne "x y" par point (entiers signés décimaux)
# - lignes "#" = commentaires, lignes vides ignorées
# - PointId = rang de la ligne parmi les lignes utiles
#
# TriangulationDocument (sortie, JSON indent=2) :
# - points    : [[x, y], ...]
# - triangles : [[i, j, k], ...] CCW, plus petit indice en tête, triés
# - hull      : [i, ...] CCW, à partir du plus petit indice
# ============================================================

_INT_RE = re.compile(r"^[+-]?\d+$")


def _read_text(path: Path) -> str:
    if not path.exists():
        raise FileNotFoundError(f"Fichier introuvable : {path}")
    try:
        return path.read_text(encoding="utf-8")
    except UnicodeDecodeError as e:
        raise PointFileError(f"{path} : encodage UTF-8 invalide (octet {e.start})") from e


def read_point_file(path: Path | str) -> PointTable:
    path = Path(path)
    text = _read_text(path)

    try:
        df = pd.read_csv(
            io.StringIO(text),
            sep=r"\s+",
            comment="#",
            header=None,
            dtype=str,
            na_filter=False,
            skip_blank_lines=True,
        )
    except pd.errors.EmptyDataError:
        return PointTable(())
    except pd.errors.ParserError as e:
        raise PointFileError(f"Fichier de points mal formé ({path}) : {e}") from e

    if df.shape[1] != 2:
        raise PointFileError(f"{path} : 2 colonnes attendues (x y), {df.shape[1]} trouvées")

    coords: list[tuple[int, int]] = []
    for i, (x, y) in enumerate(df.itertuples(index=False, name=None)):
        if not all(isinstance(v, str) and _INT_RE.match(v) for v in (x, y)):
            raise PointFileError(f"{path} : point {i} illisible : {x!r} {y!r}")
        coords.append((int(x), int(y)))
    return PointTable.from_coords(coords)


def write_point_file(path: Path | str, table: PointTable, header: str | None = None) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    df = pd.DataFrame([(p.x, p.y) for p in table], columns=["x", "y"])
    with open(path, "w", encoding="utf-8", newline="") as f:
        if header:
            for line in header.splitlines():
                f.write(f"# {line}\n")
        df.to_csv(f, sep=" ", header=False, index=False, lineterminator="\n")


@dataclass(frozen=True)
class TriangulationDocument:
    points: tuple[tuple[int, int], ...]
    triangles: tuple[tuple[int, ...], ...]
    hull: tuple[int, ...]

    @classmethod
    def from_triangulation(cls, T: Triangulation, loop: HullLoop) -> TriangulationDocument:
        return cls(
            points=tuple((p.x, p.y) for p in T.table),
            triangles=tuple(T.as_triples()),
            hull=loop.vertices(),
        )

    def table(self) -> PointTable:
        return PointTable.from_coords(self.points)

    def to_dict(self) -> dict[str, list]:
        return {
            "points": [list(p) for p in self.points],
            "triangles": [list(t) for t in self.triangles],
            "hull": list(self.hull),
        }

    @classmethod
    def from_dict(cls, data: object) -> TriangulationDocument:
        if not isinstance(data, dict) or set(data) != {"points", "triangles", "hull"}:
            raise PointFileError("Document : clés attendues points, triangles, hull")

        points = tuple(tuple(_int_list(p, "points", size=2)) for p in _list(data["points"], "points"))
        n = len(points)
        triangles = tuple(
            tuple(_int_list(t, "triangles", upper=n)) for t in _list(data["triangles"], "triangles")
        )
        hull = tuple(_int_list(data["hull"], "hull", upper=n))
        for x, y in points:
            if abs(x) > config.COORD_BOUND or abs(y) > config.COORD_BOUND:
                raise PointFileError(f"Document : coordonnée hors borne ({x}, {y})")
        return cls(points, triangles, hull)  # type: ignore[arg-type]

    def render(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False) + "\n"

    @classmethod
    def parse(cls, text: str) -> TriangulationDocument:
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise PointFileError(f"Document JSON invalide : {e}") from e
        return cls.from_dict(data)


def _list(value: object, ctx: str) -> list:
    if not isinstance(value, list):
        raise PointFileError(f"Document : '{ctx}' doit être une liste")
    return value


def _int_list(value: object, ctx: str, size: int | None = None, upper: int | None = None) -> list[int]:
    items = _list(value, ctx)
    if any(isinstance(v, bool) or not isinstance(v, int) for v in items):
        raise PointFileError(f"Document : '{ctx}' contient une valeur non entière : {items}")
    if size is not None and len(items) != size:
        raise PointFileError(f"Document : '{ctx}' attend {size} valeurs, reçu {items}")
    if upper is not None and any(not 0 <= v < upper for v in items):
        raise PointFileError(f"Document : indice hors bornes dans '{ctx}' : {items}")
    return items


def write_document(path: Path | str, doc: TriangulationDocument) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="") as f:
        f.write(doc.render())


def read_document(path: Path | str) -> TriangulationDocument:
    return TriangulationDocument.parse(_read_text(Path(path)))
