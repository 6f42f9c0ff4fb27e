from __future__ import annotations

from . import config
from .cli import cmd_verify
from .errors import EXIT_OK, InvariantViolation

# ============================================================
# Étape 2 — Vérification
#
# - verify_all sur le jeu de points (DEFAULT_SAMPLES échantillons)
# - rejeu du document produit à l'étape 1 (--check-document)
#
# Sortie :
# - config.FILE_REPORT (check, status, detail)
# ============================================================


def main() -> None:
    print("=== Étape 2 : Vérification ===")
    code = cmd_verify(config.FILE_POINTS, config.DEFAULT_SAMPLES, config.RANDOM_STATE, report=config.FILE_REPORT)
    if code != EXIT_OK:
        raise InvariantViolation(f"Vérification en échec (code {code}), voir {config.FILE_REPORT}")

    print("[INFO] Rejeu du document exporté")
    code = cmd_verify(config.FILE_DOCUMENT, config.DEFAULT_SAMPLES, config.RANDOM_STATE, check_document=True)
    if code != EXIT_OK:
        raise InvariantViolation(f"Document {config.FILE_DOCUMENT} rejeté (code {code})")
    print("✅ Toutes les propriétés sont vérifiées.")


if __name__ == "__main__":
    main()
