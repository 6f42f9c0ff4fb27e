from __future__ import annotations

from pathlib import Path

# ============================================================
# Config — Naive-Triangulation (triangulation incrémentale + vérification)
#
# Structure :
# - data/raw       : fichiers de points générés (gen)
# - data/ref       : jeux de points de référence (carré, triangle, ...)
# - data/processed : documents de triangulation (JSON canonique)
# - data/out       : figures SVG/PNG, rapports CSV
# ============================================================

# --- Base dir (racine du projet) ---
BASE_DIR = Path(__file__).resolve().parent.parent

# --- Répertoires ---
DATA_DIR = BASE_DIR / "data"
RAW_DIR = DATA_DIR / "raw"
REF_DIR = DATA_DIR / "ref"
PROCESSED_DIR = DATA_DIR / "processed"
OUT_DIR = DATA_DIR / "out"


def ensure_dirs() -> None:
    """Crée les dossiers de données si absents."""
    for d in [RAW_DIR, REF_DIR, PROCESSED_DIR, OUT_DIR]:
        d.mkdir(parents=True, exist_ok=True)


# --- Fichiers du pipeline de démonstration ---
FILE_POINTS = RAW_DIR / "points_demo.txt"
FILE_DOCUMENT = PROCESSED_DIR / "triangulation_demo.json"
FILE_SVG = OUT_DIR / "triangulation_demo.svg"
FILE_REPORT = OUT_DIR / "verification_report.csv"
FILE_CLASSIFY_SVG = OUT_DIR / "classification_demo.svg"
FILE_FUZZ = OUT_DIR / "fuzz_axioms.csv"
FILE_FIGURE_TRIANGULATION = OUT_DIR / "fig_triangulation.png"
FILE_FIGURE_STEPS = OUT_DIR / "fig_insertion_steps.png"

# ----------------------------
# Arithmétique exacte
# ----------------------------
# |x|, |y| <= 2^30 : le déterminant d'orientation tient sur 64 bits signés + 1 bit de garde
COORD_BOUND = 2**30

# Poids entiers des combinaisons convexes (échantillons rationnels)
SAMPLE_WEIGHT_MAX = 97

# ----------------------------
# Génération
# ----------------------------
GEN_RETRY_BUDGET = 10**6
DEFAULT_GEN_BOUND = 10**6

# ----------------------------
# Vérification
# ----------------------------
DEFAULT_SAMPLES = 1000
DEFAULT_SEED = 0
RED_RUN_QUERIES = 20
# rejets tolérés avant de vérifier red_run avec moins de requêtes
QUERY_RETRY_BUDGET = 10_000
PER_STEP_SAMPLE_CAP = 100

# ----------------------------
# Fuzzing des axiomes
# ----------------------------
DEFAULT_TRIALS = 100_000
DEFAULT_FUZZ_BOUND = 1000
FUZZ_BATCH = 4096

# ----------------------------
# Figures
# ----------------------------
SVG_SIZE = 800
SVG_MARGIN = 0.05
SVG_HASHSALT = "naive-triangulation"

# ----------------------------
# Pipeline de démonstration
# ----------------------------
RANDOM_STATE = 42
PIPELINE_N = 50
PIPELINE_TRIALS = 10_000
