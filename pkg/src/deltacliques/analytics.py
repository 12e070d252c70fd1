"""Summary statistics and distribution exports for enumeration runs."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from typing import IO, Iterable, Mapping, Sequence, Union

from .engine import Telemetry
from .stream import DeltaClique

# ascending (threshold, fraction of population >= threshold) steps
CCDFSeries = list[tuple[float, float]]


@dataclass
class SummaryRow:
    """One table row per run: counts, extremes, and engine counters."""

    delta: int
    result_count: int
    max_nodes: int
    max_duration: int
    runtime_seconds: float
    iterations: int
    states_seen: int
    empty_result: bool = False


def summarize(
    delta: int, cliques: Sequence[DeltaClique], telemetry: Telemetry
) -> SummaryRow:
    """Aggregate a completed (non-truncated) run.  An empty result yields a
    zero row flagged with empty_result."""
    if not cliques:
        return SummaryRow(
            delta=delta,
            result_count=0,
            max_nodes=0,
            max_duration=0,
            runtime_seconds=telemetry.wall_time,
            iterations=telemetry.iterations,
            states_seen=telemetry.states_seen,
            empty_result=True,
        )
    return SummaryRow(
        delta=delta,
        result_count=len(cliques),
        max_nodes=max(len(c.nodes) for c in cliques),
        max_duration=max(c.duration for c in cliques),
        runtime_seconds=telemetry.wall_time,
        iterations=telemetry.iterations,
        states_seen=telemetry.states_seen,
    )


def clique_sizes(cliques: Iterable[DeltaClique]) -> list[int]:
    return [len(c.nodes) for c in cliques]


def clique_durations(cliques: Iterable[DeltaClique]) -> list[int]:
    return [c.duration for c in cliques]


def ccdf(values: Sequence[float]) -> CCDFSeries:
    """Complementary cumulative distribution at each distinct observed value.

    For each distinct v ascending, the fraction of entries >= v.  The first
    fraction is always 1.0; fractions are non-increasing and in (0, 1].
    """
    if not values:
        raise ValueError("ccdf of an empty population")
    ordered = sorted(values)
    n = len(ordered)
    series: CCDFSeries = []
    for i, v in enumerate(ordered):
        if i == 0 or v != ordered[i - 1]:
            series.append((v, (n - i) / n))
    return series


def discovery_curve(telemetry: Telemetry) -> list[tuple[int, int, int]]:
    """(iteration, cumulative maximal count, running max of nodes*duration)
    steps recorded during the run.  Requires discovery logging to have been
    enabled."""
    if telemetry.discovery_log is None:
        raise ValueError("discovery logging was not enabled for this run")
    return telemetry.discovery_log


def class_homogeneity(
    node_sets: Iterable[Iterable[int]], classes: Mapping[int, str]
) -> float:
    """Fraction of node sets whose members all carry the same class label."""
    total = 0
    homogeneous = 0
    for nodes in node_sets:
        labels = set()
        for node in nodes:
            if node not in classes:
                raise ValueError(f"node {node} has no class label")
            labels.add(classes[node])
        total += 1
        if len(labels) == 1:
            homogeneous += 1
    if total == 0:
        raise ValueError("no node sets given")
    return homogeneous / total


def write_ccdf(series: CCDFSeries, out: IO[str]) -> None:
    """Two-column tab-separated export with a `value<TAB>ccdf` header."""
    out.write("value\tccdf\n")
    for value, fraction in series:
        out.write(f"{value}\t{fraction}\n")


def write_discovery_log(log: Sequence[tuple[int, int, int]], out: IO[str]) -> None:
    """Three-column tab-separated export: iteration, count, size metric."""
    for iteration, count, metric in log:
        out.write(f"{iteration}\t{count}\t{metric}\n")


def write_summary(rows: Union[SummaryRow, Sequence[SummaryRow]], out: IO[str]) -> None:
    """One JSON object per row, one row per line."""
    if isinstance(rows, SummaryRow):
        rows = [rows]
    for row in rows:
        out.write(json.dumps(asdict(row), sort_keys=True) + "\n")
