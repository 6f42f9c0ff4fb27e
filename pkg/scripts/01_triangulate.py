from __future__ import annotations

from . import config
from .cli import cmd_triangulate

# ============================================================
# Étape 1 — Triangulation incrémentale
#
# Entrée :
# - config.FILE_POINTS
#
# Sorties :
# - config.FILE_DOCUMENT (JSON canonique : points, triangles, hull)
# - config.FILE_SVG
# ============================================================


def main() -> None:
    print("=== Étape 1 : Triangulation ===")
    if not config.FILE_POINTS.exists():
        raise FileNotFoundError(f"Fichier manquant : {config.FILE_POINTS} (lancer l'étape 0)")
    config.ensure_dirs()
    cmd_triangulate(config.FILE_POINTS, config.FILE_DOCUMENT, svg=config.FILE_SVG, trace=True)
    print("✅ Triangulation exportée.")


if __name__ == "__main__":
    main()
