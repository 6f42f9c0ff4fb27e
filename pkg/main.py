from __future__ import annotations

import importlib
import sys

from scripts import cli
from scripts.errors import exit_code_for

# ============================================================
# Main — CLI + pipeline de démonstration (triangulation naïve)
#
# Sous-commandes (voir scripts/cli.py) :
#   python main.py gen --n 50 --seed 7 --bound 1000000 --output pts.txt
#   python main.py triangulate --input pts.txt --output tri.json --svg tri.svg
#   python main.py verify --input pts.txt --samples 1000 --seed 0
#   python main.py classify --input pts.txt --point 5 5
#   python main.py fuzz-axioms --trials 100000 --seed 42 --bound 1000
#
# Sans argument (ou "pipeline") : étapes de démonstration
# 00_generate_points.py       -> data/raw/points_demo.txt
# 01_triangulate.py           -> data/processed/triangulation_demo.json + SVG
# 02_verify.py                -> data/out/verification_report.csv
# 03_classify_hull.py         -> data/out/classification_demo.svg
# 04_fuzz_axioms.py           -> data/out/fuzz_axioms.csv
# 08_dataviz_triangulation.py -> data/out/fig_*.png
# ============================================================

PIPELINE = (
    "00_generate_points",
    "01_triangulate",
    "02_verify",
    "03_classify_hull",
    "04_fuzz_axioms",
    "08_dataviz_triangulation",
)


def run_step(module_name: str) -> None:
    """
    Charge dynamiquement un module scripts.<module_name> puis exécute :
    - main() si présent
    - sinon run() si présent
    """
    mod = importlib.import_module(f"scripts.{module_name}")

    if hasattr(mod, "main"):
        mod.main()
        return
    if hasattr(mod, "run"):
        mod.run()
        return

    raise AttributeError(f"{module_name}.py doit exposer main() ou run().")


def run_pipeline() -> int:
    print(">>> DÉMARRAGE PIPELINE TRIANGULATION NAÏVE <<<")
    try:
        for step in PIPELINE:
            run_step(step)
        print("\n>>> TRAITEMENT TERMINÉ. Résultats dans data/out <<<")
        return 0
    except Exception as e:
        print(f"\n❌ ERREUR : {e}", file=sys.stderr)
        return exit_code_for(e)


if __name__ == "__main__":
    argv = sys.argv[1:]
    if not argv or argv == ["pipeline"]:
        sys.exit(run_pipeline())
    sys.exit(cli.main(argv))
