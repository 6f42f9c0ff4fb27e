from __future__ import annotations

# ============================================================
# Erreurs — hiérarchie + codes de sortie CLI
#
# - PointFileError        -> 1 (lecture / parsing)
# - InputValidationError  -> 2 (entrée invalide : doublons, alignements, ...)
# - InvariantViolation    -> 3 (théorème violé : bug d'implémentation)
# ============================================================

EXIT_OK = 0
EXIT_IO = 1
EXIT_VALIDATION = 2
EXIT_INTERNAL = 3


class PointFileError(ValueError):
    """Fichier de points ou document illisible."""


class InputValidationError(ValueError):
    """Entrée refusée (hypothèse de position générale, cardinalité, ...)."""


class DegenerateInput(InputValidationError):
    """Trois points alignés là où la décision en dépend."""


class PreconditionViolated(InputValidationError):
    pass


class WrongCardinality(InputValidationError):
    pass


class NotBoundary(InputValidationError):
    pass


class TooFewPoints(InputValidationError):
    pass


class CoordinateOutOfRange(InputValidationError):
    pass


class InsidePoint(InputValidationError):
    """Le point de requête est dans un triangle : pas de points violets."""

    def __init__(self, message: str, triangle: tuple[int, int, int] | None = None) -> None:
        super().__init__(message)
        self.triangle = triangle


class GenerationExhausted(InputValidationError):
    pass


class DuplicatePoint(InputValidationError):
    def __init__(self, i: int, j: int) -> None:
        super().__init__(f"Points dupliqués : indices {i} et {j}")
        self.indices = (i, j)


class CollinearTriple(InputValidationError):
    def __init__(self, i: int, j: int, k: int) -> None:
        i, j, k = sorted((i, j, k))
        super().__init__(f"Points alignés : indices {i}, {j}, {k}")
        self.indices = (i, j, k)


class InvariantViolation(RuntimeError):
    """Un invariant géométrique prouvé ne tient pas : l'implémentation est fausse."""


class NoRedEdge(InvariantViolation):
    pass


class MultipleContainers(InvariantViolation):
    pass


class ContiguityViolation(InvariantViolation):
    pass


class MalformedBoundary(InvariantViolation):
    pass


def exit_code_for(exc: BaseException) -> int:
    if isinstance(exc, InvariantViolation):
        return EXIT_INTERNAL
    if isinstance(exc, InputValidationError):
        return EXIT_VALIDATION
    if isinstance(exc, (PointFileError, OSError)):
        return EXIT_IO
    return EXIT_INTERNAL
