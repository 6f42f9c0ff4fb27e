from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from . import config
from .documents import TriangulationDocument, read_document, read_point_file, write_document, write_point_file
from .errors import EXIT_IO, EXIT_OK, InsidePoint, PreconditionViolated, exit_code_for
from .fuzzing import fuzz_axioms
from .generation import generate_points
from .hull import build_hull_loop, classify_hull_edges, purple_points
from .predicates import Point
from .render import render_classification, render_triangulation
from .triangulation import triangulate, triangulate_steps
from .verifier import VerificationReport, verify_all, verify_document, verify_steps

# ============================================================
# CLI — sous-commandes
#
# gen          : fichier de points aléatoires en position générale
# triangulate  : document JSON canonique (+ SVG, + trace des insertions)
# verify       : rapport de vérification (une ligne par propriété)
# classify     : arêtes du bord RED/BLUE + points violets
# fuzz-axioms  : axiomes d'orientation + lemme sur tirages aléatoires
#
# Codes de sortie :
# 0 OK | 1 E/S, parsing, vérification en échec | 2 entrée invalide | 3 invariant interne
# ============================================================


def log(msg: str) -> None:
    print(msg, flush=True)


def cmd_gen(n: int, seed: int, bound: int, output: Path) -> int:
    table = generate_points(n, seed, bound)
    write_point_file(output, table, header=f"gen n={n} seed={seed} bound={bound}")
    log(f"[OUT] {output} ({len(table)} points)")
    return EXIT_OK


def cmd_triangulate(input: Path, output: Path, svg: Path | None = None, trace: bool = False) -> int:
    log(f"[IN] {input}")
    table = read_point_file(input)

    T = None
    for step in triangulate_steps(table):
        T = step.triangulation
        if trace:
            log(f"step {step.index}\t{step.kind}\t+{step.added}\t|T|={len(T)}")
    assert T is not None

    doc = TriangulationDocument.from_triangulation(T, build_hull_loop(T))
    write_document(output, doc)
    log(f"[OUT] {output} ({len(doc.triangles)} triangles, bord de {len(doc.hull)} sommets)")
    if svg is not None:
        render_triangulation(doc, svg)
        log(f"[OUT] {svg}")
    return EXIT_OK


def _print_report(report: VerificationReport) -> None:
    log("[INFO] Rapport de vérification :")
    log(report.to_frame().to_string(index=False))
    log("")
    for line in report.summary_lines():
        print(line)
    print(f"overall\t{'PASS' if report.overall else 'FAIL'}")


def cmd_verify(
    input: Path,
    samples: int = config.DEFAULT_SAMPLES,
    seed: int = config.DEFAULT_SEED,
    per_step: bool = False,
    check_document: bool = False,
    report: Path | None = None,
) -> int:
    if samples < 0:
        raise PreconditionViolated(f"--samples >= 0 requis, reçu {samples}")
    log(f"[IN] {input}")
    if check_document:
        result = verify_document(read_document(input), samples, seed)
    else:
        table = read_point_file(input)
        result = verify_steps(table, samples, seed) if per_step else verify_all(table, samples, seed)

    _print_report(result)
    if report is not None:
        report.parent.mkdir(parents=True, exist_ok=True)
        result.to_frame().to_csv(report, index=False, encoding="utf-8")
        log(f"[OUT] {report}")
    if not result.overall:
        print(f"❌ Vérification en échec : {', '.join(result.failed())}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


def cmd_classify(input: Path, point: Sequence[int], svg: Path | None = None) -> int:
    T = triangulate(read_point_file(input))
    loop = build_hull_loop(T)
    q = Point(*point)
    try:
        colors = classify_hull_edges(loop, T, q)
    except InsidePoint as e:
        i, j, k = e.triangle or ()
        print(f"INSIDE: triangle {i},{j},{k}")
        return EXIT_OK

    for (x, y), c in zip(loop.directed_edges(), colors):
        print(f"{x} -> {y} {c.value}")
    rep = purple_points(loop, T, q)
    print(f"p1={rep.p1} p2={rep.p2} n_r={rep.n_r}")

    if svg is not None:
        doc = TriangulationDocument.from_triangulation(T, loop)
        render_classification(doc, loop, q, colors, rep, svg)
        log(f"[OUT] {svg}")
    return EXIT_OK


def cmd_fuzz_axioms(trials: int, seed: int, bound: int, report: Path | None = None) -> int:
    result = fuzz_axioms(trials, seed, bound)
    for line in result.summary_lines():
        print(line)
    print(f"violations={result.violations}")
    if report is not None:
        report.parent.mkdir(parents=True, exist_ok=True)
        result.counts.to_csv(report, index=False, encoding="utf-8")
        log(f"[OUT] {report}")
    return EXIT_OK if result.violations == 0 else EXIT_IO


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="main.py",
        description="Triangulation incrémentale naïve en arithmétique exacte + vérification.",
        epilog="Sans argument (ou 'pipeline') : pipeline de démonstration complet.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="points aléatoires en position générale")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=config.DEFAULT_SEED)
    p.add_argument("--bound", type=int, default=config.DEFAULT_GEN_BOUND)
    p.add_argument("--output", type=Path, required=True)

    p = sub.add_parser("triangulate", help="triangulation -> document JSON")
    p.add_argument("--input", type=Path, required=True)
    p.add_argument("--output", type=Path, required=True)
    p.add_argument("--svg", type=Path)
    p.add_argument("--trace", action="store_true", help="une ligne par insertion")

    p = sub.add_parser("verify", help="vérification des propriétés de correction")
    p.add_argument("--input", type=Path, required=True)
    p.add_argument("--samples", type=int, default=config.DEFAULT_SAMPLES)
    p.add_argument("--seed", type=int, default=config.DEFAULT_SEED)
    p.add_argument("--per-step", action="store_true", help="vérifie après chaque insertion")
    p.add_argument("--check-document", action="store_true", help="--input est un document JSON")
    p.add_argument("--report", type=Path, help="export CSV du rapport")

    p = sub.add_parser("classify", help="arêtes du bord RED/BLUE vis-à-vis d'un point")
    p.add_argument("--input", type=Path, required=True)
    p.add_argument("--point", type=int, nargs=2, metavar=("X", "Y"), required=True)
    p.add_argument("--svg", type=Path)

    p = sub.add_parser("fuzz-axioms", help="axiomes d'orientation sur tirages aléatoires")
    p.add_argument("--trials", type=int, default=config.DEFAULT_TRIALS)
    p.add_argument("--seed", type=int, default=config.DEFAULT_SEED)
    p.add_argument("--bound", type=int, default=config.DEFAULT_FUZZ_BOUND)
    p.add_argument("--report", type=Path, help="export CSV des compteurs")

    return ap


def dispatch(args: argparse.Namespace) -> int:
    if args.command == "gen":
        return cmd_gen(args.n, args.seed, args.bound, args.output)
    if args.command == "triangulate":
        return cmd_triangulate(args.input, args.output, args.svg, args.trace)
    if args.command == "verify":
        return cmd_verify(args.input, args.samples, args.seed, args.per_step, args.check_document, args.report)
    if args.command == "classify":
        return cmd_classify(args.input, args.point, args.svg)
    if args.command == "fuzz-axioms":
        return cmd_fuzz_axioms(args.trials, args.seed, args.bound, args.report)
    raise ValueError(f"Commande inconnue : {args.command}")


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        # argparse : 2 pour une erreur d'usage, 0 pour --help
        return int(e.code or 0)

    try:
        return dispatch(args)
    except Exception as e:
        code = exit_code_for(e)
        print(f"❌ ERREUR ({type(e).__name__}) : {e}", file=sys.stderr)
        return code
