"""Render CCDF and discovery-curve figures to files.

Kept separate from the analytics aggregation: everything here consumes
already-computed series and only touches matplotlib.
"""

from __future__ import annotations

from pathlib import Path
from typing import Mapping, Sequence, Union

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .analytics import CCDFSeries

PathLike = Union[str, Path]


def plot_ccdf(
    series_by_label: Mapping[str, CCDFSeries],
    path: PathLike,
    *,
    xlabel: str,
    logx: bool = False,
    title: str | None = None,
) -> Path:
    """One descending step curve per labelled series, log-scaled fractions."""
    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    for label in sorted(series_by_label):
        series = series_by_label[label]
        xs = [v for v, _ in series]
        ys = [f for _, f in series]
        ax.step(xs, ys, where="post", label=label)
    ax.set_yscale("log")
    if logx:
        ax.set_xscale("log")
    ax.set_xlabel(xlabel)
    ax.set_ylabel("fraction ≥ value")
    if title:
        ax.set_title(title)
    ax.grid(True, which="both", alpha=0.3)
    ax.legend()
    fig.tight_layout()
    out = Path(path)
    fig.savefig(out, dpi=150)
    plt.close(fig)
    return out


def plot_discovery(
    curves_by_label: Mapping[str, Sequence[tuple[int, int, int]]],
    path: PathLike,
    *,
    title: str | None = None,
) -> Path:
    """Two panels over loop iterations: cumulative maximal-clique count and
    the running maximum of the nodes*duration size metric."""
    fig, (left, right) = plt.subplots(1, 2, figsize=(10.0, 4.0))
    for label in sorted(curves_by_label):
        curve = curves_by_label[label]
        iters = [i for i, _, _ in curve]
        counts = [c for _, c, _ in curve]
        metric = [m for _, _, m in curve]
        left.step(iters, counts, where="post", label=label)
        right.step(iters, metric, where="post", label=label)
    left.set_xlabel("iterations")
    left.set_ylabel("maximal cliques found")
    right.set_xlabel("iterations")
    right.set_ylabel("max nodes × duration")
    for ax in (left, right):
        ax.grid(True, alpha=0.3)
        ax.legend()
    if title:
        fig.suptitle(title)
    fig.tight_layout()
    out = Path(path)
    fig.savefig(out, dpi=150)
    plt.close(fig)
    return out
