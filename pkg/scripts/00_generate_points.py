from __future__ import annotations

from . import config
from .cli import cmd_gen

# ============================================================
# Étape 0 — Génération d'un jeu de points en position générale
#
# Sortie :
# - config.FILE_POINTS (PIPELINE_N points, seed RANDOM_STATE,
#   coordonnées dans [-DEFAULT_GEN_BOUND, DEFAULT_GEN_BOUND])
# ============================================================


def main() -> None:
    print("=== Étape 0 : Génération des points ===")
    config.ensure_dirs()
    cmd_gen(config.PIPELINE_N, config.RANDOM_STATE, config.DEFAULT_GEN_BOUND, config.FILE_POINTS)
    print("✅ Points générés.")


if __name__ == "__main__":
    main()
