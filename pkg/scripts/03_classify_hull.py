from __future__ import annotations

from . import config
from .cli import cmd_classify
from .documents import read_point_file
from .generation import external_queries

# ============================================================
# Étape 3 — Classification du bord vis-à-vis d'un point extérieur
#
# Point de requête : premier point extérieur tiré avec RANDOM_STATE
# (hors enveloppe, aligné avec aucune paire de points)
#
# Sortie :
# - config.FILE_CLASSIFY_SVG (bord rouge / bleu, points violets)
# ============================================================


def main() -> None:
    print("=== Étape 3 : Classification rouge / bleu ===")
    table = read_point_file(config.FILE_POINTS)
    q = external_queries(table, 1, config.RANDOM_STATE)[0]
    print(f"[INFO] Point de requête : ({q.x}, {q.y})")
    cmd_classify(config.FILE_POINTS, (q.x, q.y), svg=config.FILE_CLASSIFY_SVG)
    print("✅ Classification terminée.")


if __name__ == "__main__":
    main()
