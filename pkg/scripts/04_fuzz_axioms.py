from __future__ import annotations

from . import config
from .cli import cmd_fuzz_axioms
from .errors import EXIT_OK, InvariantViolation

# ============================================================
# Étape 4 — Fuzzing des axiomes d'orientation
#
# Sortie :
# - config.FILE_FUZZ (property, tested, vacuous, violated)
# ============================================================


def main() -> None:
    print("=== Étape 4 : Fuzzing des axiomes ===")
    code = cmd_fuzz_axioms(
        config.PIPELINE_TRIALS, config.RANDOM_STATE, config.DEFAULT_FUZZ_BOUND, report=config.FILE_FUZZ
    )
    if code != EXIT_OK:
        raise InvariantViolation(f"Axiome violé, voir {config.FILE_FUZZ}")
    print("✅ Aucune violation.")


if __name__ == "__main__":
    main()
