from __future__ import annotations

from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.collections import LineCollection  # noqa: E402

from . import config  # noqa: E402
from .documents import TriangulationDocument  # noqa: E402
from .hull import EdgeColor, HullLoop, PurpleReport  # noqa: E402
from .predicates import Point  # noqa: E402
from .triangulation import InsertionStep  # noqa: E402

# ============================================================
# Figures (matplotlib, backend Agg)
#
# - render_triangulation   : arêtes bleues, bord en gras, sommets numérotés
# - render_classification  : bord rouge / bleu, point de requête, points violets
# - render_insertion_steps : petits multiples PNG, une vignette par insertion
#
# SVG stable octet par octet :
# - svg.hashsalt fixé, pas de date dans les métadonnées
# - texte conservé en <text> (svg.fonttype = "none")
# - viewport SVG_SIZE x SVG_SIZE, marge SVG_MARGIN, axe y retourné
# ============================================================

_SVG_RC = {
    "svg.hashsalt": config.SVG_HASHSALT,
    "svg.fonttype": "none",
    "font.size": 9,
    "axes.grid": False,
}


def set_plot_style() -> None:
    plt.rcParams.update({
        "figure.dpi": 120,
        "savefig.dpi": 220,
        "font.size": 11,
        "axes.titlesize": 13,
        "axes.grid": False,
        "axes.spines.top": False,
        "axes.spines.right": False,
        "axes.titlepad": 8,
    })


class Viewport:
    """Application affine coordonnées entières -> pixels (y vers le bas)."""

    def __init__(self, points: Sequence[Point | tuple[int, int]], size: int = config.SVG_SIZE) -> None:
        xs = [p[0] if isinstance(p, tuple) else p.x for p in points]
        ys = [p[1] if isinstance(p, tuple) else p.y for p in points]
        self.size = size
        self.min_x, self.max_y = min(xs), max(ys)
        span = max(max(xs) - min(xs), max(ys) - min(ys), 1)
        self.margin = config.SVG_MARGIN * size
        self.scale = (size - 2 * self.margin) / span

    def __call__(self, x: int, y: int) -> tuple[float, float]:
        return (
            self.margin + (x - self.min_x) * self.scale,
            self.margin + (self.max_y - y) * self.scale,
        )


def _canvas(size: int = config.SVG_SIZE):
    fig = plt.figure(figsize=(size / 72, size / 72), dpi=72)
    ax = fig.add_axes((0, 0, 1, 1))
    ax.set_xlim(0, size)
    ax.set_ylim(size, 0)
    ax.set_aspect("equal")
    ax.axis("off")
    return fig, ax


def _save(fig, path: Path) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    if path.suffix.lower() == ".svg":
        fig.savefig(path, format="svg", metadata={"Date": None})
    else:
        fig.savefig(path, metadata={"Software": None})
    plt.close(fig)


def _draw_mesh(ax, doc: TriangulationDocument, vp: Viewport, labels: bool = True) -> None:
    P = [vp(x, y) for x, y in doc.points]
    segments = sorted({
        (min(t[k], t[(k + 1) % 3]), max(t[k], t[(k + 1) % 3]))
        for t in doc.triangles
        for k in range(3)
    })
    ax.add_collection(LineCollection([(P[u], P[v]) for u, v in segments], colors="tab:blue", linewidths=1.0))
    ax.scatter([p[0] for p in P], [p[1] for p in P], s=12, color="black", zorder=3)
    if labels:
        for i, (x, y) in enumerate(P):
            ax.annotate(str(i), (x, y), xytext=(4, -4), textcoords="offset points", fontsize=8)


def render_triangulation(doc: TriangulationDocument, path: Path | str) -> None:
    path = Path(path)
    vp = Viewport(doc.points)
    with plt.rc_context(_SVG_RC):
        fig, ax = _canvas()
        _draw_mesh(ax, doc, vp)
        P = [vp(x, y) for x, y in doc.points]
        hull = list(doc.hull)
        ax.add_collection(LineCollection(
            [(P[u], P[v]) for u, v in zip(hull, hull[1:] + hull[:1])],
            colors="black", linewidths=2.5, zorder=2,
        ))
        _save(fig, path)


def render_classification(
    doc: TriangulationDocument,
    loop: HullLoop,
    query: Point,
    colors: Sequence[EdgeColor],
    report: PurpleReport | None,
    path: Path | str,
) -> None:
    path = Path(path)
    vp = Viewport(list(doc.points) + [(query.x, query.y)])
    with plt.rc_context(_SVG_RC):
        fig, ax = _canvas()
        _draw_mesh(ax, doc, vp)
        P = [vp(x, y) for x, y in doc.points]
        edges = loop.directed_edges()
        ax.add_collection(LineCollection(
            [(P[u], P[v]) for u, v in edges],
            colors=["tab:red" if c is EdgeColor.RED else "tab:blue" for c in colors],
            linewidths=2.5, zorder=2,
        ))
        qx, qy = vp(query.x, query.y)
        ax.scatter([qx], [qy], s=40, marker="x", color="black", zorder=4)
        if report is not None:
            for p in (report.p1, report.p2):
                ax.scatter([P[p][0]], [P[p][1]], s=70, color="purple", zorder=4)
        _save(fig, path)


def render_insertion_steps(
    steps: Sequence[InsertionStep],
    path: Path | str,
    max_panels: int = 12,
) -> None:
    """Petits multiples : triangulation après chaque insertion (PNG)."""
    path = Path(path)
    if not steps:
        return
    if len(steps) > max_panels:
        # premières insertions + état final
        steps = list(steps[: max_panels - 1]) + [steps[-1]]

    set_plot_style()
    table = steps[-1].triangulation.table
    vp = Viewport(list(table))
    cols = min(4, len(steps))
    rows = (len(steps) + cols - 1) // cols
    fig, axes = plt.subplots(rows, cols, figsize=(3.2 * cols, 3.2 * rows), squeeze=False)

    for ax in axes.flat:
        ax.axis("off")
    for ax, step in zip(axes.flat, steps):
        T = step.triangulation
        P = {i: vp(table[i].x, table[i].y) for i in T.vertices()}
        segs = sorted({tuple(sorted((t.ids[k], t.ids[(k + 1) % 3]))) for t in T.triangles for k in range(3)})
        ax.add_collection(LineCollection([(P[u], P[v]) for u, v in segs], colors="tab:blue", linewidths=0.8))
        ax.scatter([p[0] for p in P.values()], [p[1] for p in P.values()], s=6, color="black")
        d = table[step.index]
        ax.scatter(*vp(d.x, d.y), s=30, color="tab:red", zorder=3)
        ax.set_xlim(0, vp.size)
        ax.set_ylim(vp.size, 0)
        ax.set_aspect("equal")
        ax.set_title(f"point {step.index} ({step.kind}, +{step.added})")

    fig.tight_layout()
    _save(fig, path)
