"""Brute-force enumerators used to cross-check the search engine.

Deliberately naive: every node subset is paired with every candidate
interval boundary, the clique predicate is evaluated directly, and
maximality falls out of pairwise containment filtering.  Correctness over
speed; the size guard keeps the cost honest.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Optional

from .stream import (
    DeltaClique,
    LinkStream,
    StaticGraph,
    _check_delta,
    _timeline_covers,
    effective_span,
)

NODE_GUARD = 8
LINK_GUARD = 30


class OracleSizeError(ValueError):
    """Refusal to brute-force a stream beyond the size guard."""


def contains(outer: DeltaClique, inner: DeltaClique) -> bool:
    """Containment in both dimensions: node subset and nested interval.
    Reflexive; maximality checks must exclude equality themselves."""
    return (
        outer.b <= inner.b
        and inner.e <= outer.e
        and set(inner.nodes).issubset(outer.nodes)
    )


def _boundary_candidates(
    times: Iterable[int], delta: int, lo: int, hi: int, pad: int
) -> list[int]:
    values: set[int] = set()
    for t in times:
        values.add(t)
        values.add(t - delta)
        values.add(t + delta)
    values.add(lo)
    values.add(hi)
    if pad:
        for v in list(values):
            for k in range(1, pad + 1):
                values.add(v - k)
                values.add(v + k)
    return sorted({min(max(v, lo), hi) for v in values})


def _interval_frontier(intervals: Iterable[tuple[int, int]]) -> list[tuple[int, int]]:
    # drop intervals nested inside another one (same node set)
    frontier: list[tuple[int, int]] = []
    best_end: Optional[int] = None
    for b, e in sorted(set(intervals), key=lambda p: (p[0], -p[1])):
        if best_end is None or e > best_end:
            frontier.append((b, e))
            best_end = e
    return frontier


def brute_force_maximal(
    stream: LinkStream,
    delta: int,
    *,
    node_guard: int = NODE_GUARD,
    link_guard: int = LINK_GUARD,
    boundary_pad: int = 0,
) -> list[DeltaClique]:
    """Enumerate all maximal delta-cliques by exhaustive candidate scan.

    Every node subset of size >= 2 is combined with every pair of boundary
    candidates drawn from {span edges} | {link times} | {link times +- delta}
    (clamped to the span); survivors of the clique predicate are filtered to
    the containment-maximal antichain.  `boundary_pad` widens the candidate
    grids by that many ticks in each direction, which exists purely so tests
    can show the grid is already sufficient.  Output sorted by (b, e, nodes).
    """
    _check_delta(delta)
    if stream.node_count > node_guard or stream.link_count > link_guard:
        raise OracleSizeError(
            f"stream has {stream.node_count} nodes / {stream.link_count} links; "
            f"guard is {node_guard} nodes / {link_guard} links"
        )
    span = effective_span(stream, delta)
    times = sorted({t for t, _, _ in stream.links})
    starts = _boundary_candidates(times, delta, span.b, span.e, boundary_pad)
    ends = starts  # same grid after clamping; kept symmetric on purpose

    timelines = stream.pair_timelines
    nodes = range(stream.node_count)
    found_by_set: dict[tuple[int, ...], list[tuple[int, int]]] = {}
    for size in range(2, stream.node_count + 1):
        for subset in combinations(nodes, size):
            pair_times = [timelines.get(p) for p in combinations(subset, 2)]
            if any(tl is None for tl in pair_times):
                continue
            hits: list[tuple[int, int]] = []
            for b in starts:
                for e in ends:
                    if e < b:
                        continue
                    if all(_timeline_covers(tl, b, e, delta) for tl in pair_times):
                        hits.append((b, e))
            if hits:
                found_by_set[subset] = _interval_frontier(hits)

    survivors = [
        DeltaClique(subset, b, e)
        for subset, intervals in found_by_set.items()
        for b, e in intervals
    ]
    maximal = [
        c
        for c in survivors
        if not any(o != c and contains(o, c) for o in survivors)
    ]
    maximal.sort(key=DeltaClique.sort_key)
    return maximal


def _pivot_expand(
    adjacency: list[set[int]],
    current: set[int],
    candidates: set[int],
    excluded: set[int],
    out: list[tuple[int, ...]],
) -> None:
    if not candidates and not excluded:
        out.append(tuple(sorted(current)))
        return
    pivot = max(candidates | excluded, key=lambda u: len(candidates & adjacency[u]))
    for v in sorted(candidates - adjacency[pivot]):
        _pivot_expand(
            adjacency,
            current | {v},
            candidates & adjacency[v],
            excluded & adjacency[v],
            out,
        )
        candidates.remove(v)
        excluded.add(v)


def static_maximal_cliques(graph: StaticGraph) -> list[tuple[int, ...]]:
    """All maximal cliques of an undirected graph, via pivoted expansion.

    Returns sorted node tuples in lexicographic order.  Isolated vertices
    form singleton maximal cliques and are included.
    """
    if graph.node_count == 0:
        return []
    adjacency = [set(ns) for ns in graph.neighbors]
    out: list[tuple[int, ...]] = []
    _pivot_expand(adjacency, set(), set(range(graph.node_count)), set(), out)
    out.sort()
    return out
