from __future__ import annotations

from . import config
from .documents import read_document, read_point_file
from .render import render_insertion_steps, render_triangulation
from .triangulation import triangulate_steps

# ============================================================
# Étape 8 — Dataviz (figures PNG)
#
# Entrées :
# - config.FILE_DOCUMENT, config.FILE_POINTS
#
# Sorties :
# - config.FILE_FIGURE_TRIANGULATION (triangulation finale)
# - config.FILE_FIGURE_STEPS (petits multiples des insertions)
# ============================================================


def main() -> None:
    print("=== Étape 8 : Dataviz ===")
    for path in (config.FILE_DOCUMENT, config.FILE_POINTS):
        if not path.exists():
            raise FileNotFoundError(f"Fichier manquant : {path}")

    render_triangulation(read_document(config.FILE_DOCUMENT), config.FILE_FIGURE_TRIANGULATION)
    print(f"- {config.FILE_FIGURE_TRIANGULATION}")

    steps = list(triangulate_steps(read_point_file(config.FILE_POINTS)))
    render_insertion_steps(steps, config.FILE_FIGURE_STEPS)
    print(f"- {config.FILE_FIGURE_STEPS}")
    print("✅ Figures exportées.")


if __name__ == "__main__":
    main()
