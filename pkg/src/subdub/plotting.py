"""Matplotlib renderings of a graph and one of its Hamiltonian cycles.

Vertices sit on a circle, in cycle order when a cycle is given so that the
cycle is the outer polygon. Cycle edges are thick black, complement edges
thin, and when the complement splits into several cycles each gets its own
colour. Twin vertices are light blue and subdivision vertices salmon.
"""

from __future__ import annotations

import logging
import math
from collections import defaultdict
from pathlib import Path

from matplotlib.backends.backend_agg import FigureCanvasAgg
from matplotlib.figure import Figure
from matplotlib.patches import Arc, FancyArrowPatch

from .multigraph import MultiGraph, edge_components
from .subdouble import SdGraph, Twin

logger = logging.getLogger(__name__)

CYCLE_EDGE_KWARGS = dict(color="black", linewidth=2.6, zorder=2)
OTHER_EDGE_KWARGS = dict(linewidth=0.9, zorder=1)
VERTEX_KWARGS = dict(s=170, edgecolors="black", linewidths=0.8, zorder=3)
LABEL_KWARGS = dict(fontsize=7, ha="center", va="center", zorder=4)
COMPONENT_COLORS = ("tab:blue", "tab:red", "tab:green", "tab:orange", "tab:purple", "tab:brown")
TWIN_COLOR = "lightblue"
SUBDIVISION_COLOR = "salmon"


def circle_layout(n: int, order=None) -> dict[int, tuple[float, float]]:
    order = list(order) if order is not None else list(range(n))
    return {
        v: (math.cos(math.pi / 2 - 2 * math.pi * i / n), math.sin(math.pi / 2 - 2 * math.pi * i / n))
        for i, v in enumerate(order)
    }


def _edge_colors(g: MultiGraph, cycle) -> dict[int, str]:
    if cycle is None:
        return {}
    rest = set(range(g.m)) - set(cycle.edges)
    colors = {}
    for i, comp in enumerate(edge_components(g, rest)):
        for e in rest:
            if g.edges[e][0] in comp:
                colors[e] = COMPONENT_COLORS[i % len(COMPONENT_COLORS)]
    return colors


def draw(g: MultiGraph, ax, cycle=None, sd: SdGraph | None = None, labels: bool = True):
    """Draw ``g`` onto an existing axes and return the layout used."""
    pos = circle_layout(g.n, cycle.order if cycle is not None else None)
    colors = _edge_colors(g, cycle)
    bundles: dict[tuple[int, int], list[int]] = defaultdict(list)
    for e, (u, v) in enumerate(g.edges):
        bundles[(min(u, v), max(u, v))].append(e)

    for (u, v), es in bundles.items():
        for k, e in enumerate(es):
            on_cycle = cycle is not None and e in cycle.edges
            kw = dict(CYCLE_EDGE_KWARGS) if on_cycle else dict(OTHER_EDGE_KWARGS, color=colors.get(e, "gray"))
            if u == v:
                x, y = pos[u]
                r = 0.09 * (k + 1)
                ax.add_patch(Arc((x * (1 + r), y * (1 + r)), 2 * r, 2 * r, **kw))
                continue
            # spread parallel edges symmetrically around the straight chord
            bend = 0.0 if len(es) == 1 else (k - (len(es) - 1) / 2) * 0.25
            ax.add_patch(
                FancyArrowPatch(
                    pos[u], pos[v], arrowstyle="-", connectionstyle=f"arc3,rad={bend}", shrinkA=0, shrinkB=0, **kw
                )
            )

    xs = [pos[v][0] for v in range(g.n)]
    ys = [pos[v][1] for v in range(g.n)]
    if sd is not None:
        fill = [TWIN_COLOR if isinstance(lab, Twin) else SUBDIVISION_COLOR for lab in sd.labels]
    else:
        fill = ["white"] * g.n
    ax.scatter(xs, ys, c=fill, **VERTEX_KWARGS)
    if labels:
        for v in range(g.n):
            ax.text(*pos[v], str(v), **LABEL_KWARGS)
    ax.set_aspect("equal")
    ax.set_xlim(-1.35, 1.35)
    ax.set_ylim(-1.35, 1.35)
    ax.axis("off")
    return pos


def save_figure(path: str | Path, g: MultiGraph, cycle=None, sd: SdGraph | None = None, title: str | None = None) -> Path:
    """Render to ``path``; the format follows the file extension (png, pdf, svg, ...)."""
    fig = Figure(figsize=(5, 5))
    FigureCanvasAgg(fig)
    ax = fig.add_subplot(1, 1, 1)
    draw(g, ax, cycle=cycle, sd=sd)
    if title:
        ax.set_title(title, fontsize=10)
    path = Path(path)
    fig.savefig(path, dpi=150, bbox_inches="tight")
    logger.debug("wrote figure %s", path)
    return path


def save_decomposition_panels(path: str | Path, g: MultiGraph, pairs, sd: SdGraph | None = None, limit: int = 4) -> Path:
    """Side-by-side panels, one per decomposition ``(cycle, complement)``."""
    pairs = list(pairs)[:limit]
    fig = Figure(figsize=(4 * max(len(pairs), 1), 4))
    FigureCanvasAgg(fig)
    for i, (h, _) in enumerate(pairs or [(None, None)]):
        ax = fig.add_subplot(1, max(len(pairs), 1), i + 1)
        draw(g, ax, cycle=h, sd=sd, labels=g.n <= 30)
        if h is not None:
            ax.set_title(f"decomposition {i}", fontsize=9)
    path = Path(path)
    fig.savefig(path, dpi=120, bbox_inches="tight")
    return path
