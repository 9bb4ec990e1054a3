"""Matplotlib renderings of graphs and ideal lattices, written straight to files."""

from __future__ import annotations

import math

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.patches import FancyArrowPatch  # noqa: E402

from .graph import Graph, regular_vertices  # noqa: E402
from .ideals import IdealLattice  # noqa: E402


def _figure(width=6.0, height=None):
    golden = (math.sqrt(5) - 1.0) / 2.0
    fig, ax = plt.subplots(figsize=(width, height or width * golden), facecolor="w")
    ax.set_axis_off()
    return fig, ax


def plot_graph(g: Graph, path, A=frozenset(), title: str | None = None) -> None:
    """Circular layout; bundles dashed and labelled ``name_i``, loops as rings.

    Vertices in ``A`` are filled, other regular vertices hollow, singular
    vertices grey.
    """
    fig, ax = _figure()
    n = max(len(g.vertices), 1)
    pos = {v: (math.cos(2 * math.pi * i / n + math.pi / 2), math.sin(2 * math.pi * i / n + math.pi / 2))
           for i, v in enumerate(g.vertices)}
    reg = regular_vertices(g)
    for v, (x, y) in pos.items():
        face = "black" if v in A else ("white" if v in reg else "lightgrey")
        ax.scatter([x], [y], s=500, c=face, edgecolors="black", zorder=3)
        ax.annotate(v, (x, y), color="red" if v in A else "black", ha="center", va="center",
                    fontsize=11, zorder=4)
    seen: dict[tuple[str, str], int] = {}
    for d in g.edges:
        label = f"{d.name}_i" if d.infinite else d.name
        style = "--" if d.infinite else "-"
        k = seen.get((d.src, d.rng), 0)
        seen[(d.src, d.rng)] = k + 1
        (x0, y0), (x1, y1) = pos[d.src], pos[d.rng]
        if d.src == d.rng:
            r = 0.16 + 0.06 * k
            ring = plt.Circle((x0 * (1 + r), y0 * (1 + r)), r, fill=False, ls=style)
            ax.add_patch(ring)
            ax.annotate(label, (x0 * (1 + 2.2 * r), y0 * (1 + 2.2 * r)), ha="center", fontsize=9)
            continue
        rad = 0.15 * (k + 1) * (1 if d.src < d.rng else -1)
        arrow = FancyArrowPatch((x0, y0), (x1, y1), arrowstyle="-|>", mutation_scale=14, ls=style,
                                connectionstyle=f"arc3,rad={rad}", shrinkA=14, shrinkB=14)
        ax.add_patch(arrow)
        mx, my = (x0 + x1) / 2, (y0 + y1) / 2
        ax.annotate(label, (mx - rad * (y1 - y0), my + rad * (x1 - x0)), ha="center", fontsize=9)
    ax.set_xlim(-1.6, 1.6)
    ax.set_ylim(-1.4, 1.4)
    ax.set_aspect("equal")
    if title:
        ax.set_title(title)
    fig.savefig(path, bbox_inches="tight")
    plt.close(fig)


def _ranks(lat: IdealLattice) -> list[int]:
    n = len(lat.codes)
    rank = [0] * n
    for i in sorted(range(n), key=lambda i: len(lat.below[i])):
        lower = [lo for lo, hi in lat.covers if hi == i]
        rank[i] = 1 + max((rank[lo] for lo in lower), default=-1)
    return rank


def plot_hasse(lat: IdealLattice, path, title: str | None = None) -> None:
    """Hasse diagram of the lattice, bottom (zero ideal) at the bottom."""
    rank = _ranks(lat)
    layers: dict[int, list[int]] = {}
    for i, r in enumerate(rank):
        layers.setdefault(r, []).append(i)
    width = max(len(v) for v in layers.values()) if layers else 1
    fig, ax = _figure(width=max(4.0, 2.6 * width), height=1.2 + 1.1 * len(layers))
    pos = {}
    for r, members in layers.items():
        for k, i in enumerate(members):
            pos[i] = (k - (len(members) - 1) / 2, r)
    for lo, hi in lat.covers:
        (x0, y0), (x1, y1) = pos[lo], pos[hi]
        ax.plot([x0, x1], [y0, y1], color="black", lw=1, zorder=1)
    for i, c in enumerate(lat.codes):
        x, y = pos[i]
        ax.annotate(c.label(), (x, y), ha="center", va="center", fontsize=9, zorder=2,
                    bbox=dict(boxstyle="round", fc="white", ec="black"))
    ax.set_xlim(-width / 2 - 0.2, width / 2 + 0.2)
    ax.set_ylim(-0.6, max(layers, default=0) + 0.6)
    if title:
        ax.set_title(title)
    fig.savefig(path, bbox_inches="tight")
    plt.close(fig)
