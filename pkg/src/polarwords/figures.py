"""Matplotlib renderings of the reports, written straight to image files.

matplotlib is imported inside the functions so the core library stays
import-light; callers that never render pay nothing.  The Agg backend is
forced because these are batch drawings, never interactive windows.
"""

from __future__ import annotations

import math

from .polarspace import PolarGeometry, StrataReport


def _pyplot():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def _ring(count: int, radius: float) -> list[tuple[float, float]]:
    return [
        (radius * math.cos(2 * math.pi * i / count - math.pi / 2),
         radius * math.sin(2 * math.pi * i / count - math.pi / 2))
        for i in range(count)
    ]


def render_incidence(geometry: PolarGeometry, path: str) -> None:
    """Two-ring drawing of the point-line graph: points outside, lines inside,
    one segment per incidence."""
    plt = _pyplot()
    fig, ax = plt.subplots(figsize=(6.4, 6.4))
    points = _ring(len(geometry.points), 1.0)
    lines = _ring(len(geometry.lines), 0.55)
    for j, triple in enumerate(geometry.incidence):
        lx, ly = lines[j]
        for i in triple:
            px, py = points[i]
            ax.plot([lx, px], [ly, py], color="0.75", linewidth=0.8, zorder=1)
    ax.scatter(*zip(*points), s=36, marker="o", color="tab:blue", zorder=2)
    ax.scatter(*zip(*lines), s=20, marker="s", color="tab:red", zorder=2)
    if len(geometry.points) <= 20:
        for i, (px, py) in enumerate(points):
            ax.annotate(str(i), (px * 1.09, py * 1.09), ha="center", va="center", fontsize=8)
    ax.set_aspect("equal")
    ax.axis("off")
    ax.set_title(
        f"rank {geometry.n}: {len(geometry.points)} points, {len(geometry.lines)} lines"
    )
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)


def render_case_counts(n: int, counts: tuple[int, ...], path: str) -> None:
    """Bar chart of the per-class sizes at one length."""
    plt = _pyplot()
    fig, ax = plt.subplots(figsize=(6.4, 4.0))
    xs = range(1, len(counts) + 1)
    ax.bar(xs, counts, color="tab:blue")
    for x, c in zip(xs, counts):
        ax.annotate(str(c), (x, c), ha="center", va="bottom", fontsize=8)
    ax.set_xticks(list(xs))
    ax.set_xlabel("class")
    ax.set_ylabel("count")
    ax.set_title(f"length {n}: {sum(counts)} words by class")
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)


def render_strata(report: StrataReport, path: str) -> None:
    """Stratum sizes around the base point, annotated with component counts."""
    plt = _pyplot()
    fig, ax = plt.subplots(figsize=(6.4, 4.0))
    sizes = [len(s) for s in report.strata]
    xs = range(len(sizes))
    ax.bar(xs, sizes, color="tab:green")
    for x, (size, comps) in enumerate(zip(sizes, report.components)):
        ax.annotate(
            f"{size} pts / {len(comps)} comp",
            (x, size),
            ha="center",
            va="bottom",
            fontsize=8,
        )
    ax.set_xticks(list(xs))
    ax.set_xlabel("distance from base point")
    ax.set_ylabel("points")
    ax.set_title(f"rank {report.n}, base point {report.base_index}")
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)
