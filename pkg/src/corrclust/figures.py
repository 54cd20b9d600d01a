"""Render the delimited outputs as figures saved next to the CSVs."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .agreement import DistanceStats
from .formats import StatsRow, sibling_path


def _save(fig, path: Path) -> Path:
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)
    return path


def render_schedule_figures(rows: list[StatsRow], csv_path) -> list[Path]:
    """Cluster counts, sparsification counters, and timings versus the
    threshold, one PNG apiece next to ``csv_path``."""
    if not rows:
        return []
    eps = [r.eps for r in rows]
    written = []

    fig, ax = plt.subplots(figsize=(6, 4))
    ax.plot(eps, [r.clusters for r in rows], marker="o", color="tab:blue")
    ax.set_xlabel("threshold")
    ax.set_ylabel("clusters")
    ax.grid(True, alpha=0.3)
    written.append(_save(fig, sibling_path(csv_path, "_clusters.png")))

    fig, ax = plt.subplots(figsize=(6, 4))
    ax.plot(eps, [r.agree_edges for r in rows], marker="o", label="agreeing edges")
    ax.plot(eps, [r.light_vertices for r in rows], marker="s", label="light vertices")
    ax.set_xlabel("threshold")
    ax.set_ylabel("count")
    ax.legend()
    ax.grid(True, alpha=0.3)
    written.append(_save(fig, sibling_path(csv_path, "_sparsify.png")))

    timed = [(r.eps, r.cc_ms, r.icc_ms) for r in rows
             if r.cc_ms is not None or r.icc_ms is not None]
    if timed:
        fig, ax = plt.subplots(figsize=(6, 4))
        cc = [(e, t) for e, t, _ in timed if t is not None]
        icc = [(e, t) for e, _, t in timed if t is not None]
        if cc:
            ax.plot([e for e, _ in cc], [t for _, t in cc], marker="o",
                    label="baseline")
        if icc:
            ax.plot([e for e, _ in icc], [t for _, t in icc], marker="s",
                    label="indexed")
        ax.set_xlabel("threshold")
        ax.set_ylabel("time (ms)")
        ax.legend()
        ax.grid(True, alpha=0.3)
        written.append(_save(fig, sibling_path(csv_path, "_times.png")))
    return written


def render_histogram_figure(values: list[float], stats: DistanceStats,
                            csv_path) -> Path | None:
    """Distance distribution (exact values, no binning) as one PNG."""
    if not values:
        return None
    xs: list[float] = []
    ys: list[int] = []
    for v in values:
        if xs and xs[-1] == v:
            ys[-1] += 1
        else:
            xs.append(v)
            ys.append(1)
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.plot(xs, ys, marker=".", linestyle="none", markersize=3)
    ax.set_xlabel("disagreement value")
    ax.set_ylabel("frequency")
    ax.set_title(f"{len(values)} edges, {stats.distinct} distinct values")
    ax.grid(True, alpha=0.3)
    return _save(fig, sibling_path(csv_path, "_distribution.png"))
