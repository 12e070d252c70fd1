"""Configuration-space search enumerating all maximal delta-cliques.

The search grows trivial one-link cliques three ways: by adding a node that
keeps the clique property on the same interval, by moving the interval
start as far left as the links certify, and symmetrically for the end.  A
state whose three extension attempts all fail is maximal.  A memo set keyed
on the canonical (nodes, b, e) form guarantees each clique is expanded at
most once, whatever the exploration order.
"""

from __future__ import annotations

import bisect
import time
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Deque, Iterable, Optional

from .stream import (
    DeltaClique,
    LinkStream,
    TimeInterval,
    _check_delta,
    _timeline_covers,
    effective_span,
    is_delta_clique,
)

BFS = "bfs"
DFS = "dfs"

CliqueKey = tuple[tuple[int, ...], int, int]


@dataclass(frozen=True)
class EngineConfig:
    """Exploration controls.

    Every field except `max_states` leaves the result set unchanged;
    `max_states` aborts the run with TruncationError instead of returning
    an incomplete answer.  `fault_skip_right_extension` deliberately breaks
    the search and exists only so the oracle comparison can be shown to
    catch a defective engine.
    """

    order: str = DFS
    use_interval_narrowing: bool = True
    use_candidate_sets: bool = True
    max_states: Optional[int] = None
    log_discovery: bool = False
    validate_states: bool = False
    fault_skip_right_extension: bool = False

    def __post_init__(self) -> None:
        if self.order not in (BFS, DFS):
            raise ValueError(f"order must be '{BFS}' or '{DFS}', got {self.order!r}")
        if self.max_states is not None and self.max_states < 1:
            raise ValueError("max_states must be positive")


@dataclass(frozen=True)
class SearchState:
    """A queued clique plus the node pool its extensions may draw from.

    `candidates` is None when the pool is every node outside the clique
    (always the case for seeds, and for all states when candidate-set
    inheritance is disabled).
    """

    clique: DeltaClique
    candidates: Optional[tuple[int, ...]] = None


@dataclass
class Telemetry:
    """Counters from one enumeration run."""

    iterations: int = 0
    states_seen: int = 0
    maximal_found: int = 0
    discovery_log: Optional[list[tuple[int, int, int]]] = None
    wall_time: float = 0.0


class TruncationError(RuntimeError):
    """The state cap was hit; results are withheld because completeness is broken."""

    def __init__(self, max_states: int, telemetry: Telemetry) -> None:
        super().__init__(
            f"search truncated: more than {max_states} states generated"
        )
        self.max_states = max_states
        self.telemetry = telemetry


def canonical_key(clique: DeltaClique) -> CliqueKey:
    """Injective key over (sorted node set, b, e); equal cliques, equal keys."""
    return (clique.nodes, clique.b, clique.e)


def seed_states(stream: LinkStream) -> tuple[Deque[SearchState], set[CliqueKey]]:
    """One trivial clique ({u,v}, [t,t]) per distinct link, queued and memoized."""
    queue: Deque[SearchState] = deque()
    memo: set[CliqueKey] = set()
    for t, u, v in stream.links:
        clique = DeltaClique((u, v), t, t)
        memo.add(canonical_key(clique))
        queue.append(SearchState(clique))
    return queue, memo


def _candidate_pool(stream: LinkStream, state: SearchState) -> Iterable[int]:
    if state.candidates is not None:
        return state.candidates
    members = set(state.clique.nodes)
    return (v for v in range(stream.node_count) if v not in members)


def _passing_nodes(stream: LinkStream, state: SearchState, delta: int) -> list[int]:
    """Pool nodes whose addition keeps the clique property on the same interval.

    Only the pairs involving the new node are tested: the queued clique
    already covers its own pairs.
    """
    clique = state.clique
    nodes = clique.nodes
    b, e = clique.b, clique.e
    timelines = stream.pair_timelines
    passing: list[int] = []
    for v in _candidate_pool(stream, state):
        for u in nodes:
            timeline = timelines.get((u, v) if u < v else (v, u))
            if timeline is None or not _timeline_covers(timeline, b, e, delta):
                break
        else:
            passing.append(v)
    return passing


def node_extensions(
    stream: LinkStream, state: SearchState, delta: int
) -> list[DeltaClique]:
    """All cliques obtained by adding one pool node on the same interval.

    An empty list means no node extension exists, which is one of the three
    conditions for the state to be maximal.
    """
    _check_delta(delta)
    clique = state.clique
    return [
        DeltaClique(clique.nodes + (v,), clique.b, clique.e)
        for v in _passing_nodes(stream, state, delta)
    ]


def left_extension(
    stream: LinkStream,
    clique: DeltaClique,
    delta: int,
    span: TimeInterval,
    *,
    narrow: bool = True,
) -> int:
    """Earliest certified start for the clique's interval, clamped to the span.

    Takes the latest first-occurrence time f over the clique's pairs at or
    after b and returns max(f - delta, span.b).  Equals b exactly when no
    strictly earlier start is certified (including clamp-to-equality).
    With `narrow`, the occurrence search is bounded by min(e, b + delta),
    which is where f must fall for any valid clique.
    """
    b, e = clique.b, clique.e
    bound = min(e, b + delta) if narrow else e
    latest_first: Optional[int] = None
    timelines = stream.pair_timelines
    for pair in combinations(clique.nodes, 2):
        timeline = timelines.get(pair)
        if timeline is None:
            raise ValueError(f"pair {pair} never interacts")
        i = bisect.bisect_left(timeline, b)
        if i == len(timeline) or timeline[i] > bound:
            raise ValueError(
                f"pair {pair} breaks the clique property on [{b}, {e}]"
            )
        t = timeline[i]
        if latest_first is None or t > latest_first:
            latest_first = t
    assert latest_first is not None
    return max(latest_first - delta, span.b)


def right_extension(
    stream: LinkStream,
    clique: DeltaClique,
    delta: int,
    span: TimeInterval,
    *,
    narrow: bool = True,
) -> int:
    """Mirror of left_extension: min(l + delta, span.e) for the earliest
    last-occurrence time l over the clique's pairs at or before e."""
    b, e = clique.b, clique.e
    bound = max(b, e - delta) if narrow else b
    earliest_last: Optional[int] = None
    timelines = stream.pair_timelines
    for pair in combinations(clique.nodes, 2):
        timeline = timelines.get(pair)
        if timeline is None:
            raise ValueError(f"pair {pair} never interacts")
        i = bisect.bisect_right(timeline, e)
        if i == 0 or timeline[i - 1] < bound:
            raise ValueError(
                f"pair {pair} breaks the clique property on [{b}, {e}]"
            )
        t = timeline[i - 1]
        if earliest_last is None or t < earliest_last:
            earliest_last = t
    assert earliest_last is not None
    return min(earliest_last + delta, span.e)


def enumerate_maximal(
    stream: LinkStream, delta: int, config: Optional[EngineConfig] = None
) -> tuple[list[DeltaClique], Telemetry]:
    """Enumerate every maximal delta-clique of the stream.

    Returns the result sorted by (b, e, node ids) plus run telemetry.
    Raises TruncationError if config.max_states is exceeded.
    """
    if config is None:
        config = EngineConfig()
    _check_delta(delta)
    span = effective_span(stream, delta)
    started = time.perf_counter()

    queue, memo = seed_states(stream)
    results: list[DeltaClique] = []
    log: Optional[list[tuple[int, int, int]]] = [] if config.log_discovery else None
    iterations = 0
    best_metric = 0
    cap = config.max_states
    narrow = config.use_interval_narrowing
    inherit = config.use_candidate_sets
    take = queue.pop if config.order == DFS else queue.popleft

    def snapshot() -> Telemetry:
        return Telemetry(
            iterations=iterations,
            states_seen=len(memo),
            maximal_found=len(results),
            discovery_log=log,
            wall_time=time.perf_counter() - started,
        )

    def push(state: SearchState) -> None:
        memo.add(canonical_key(state.clique))
        if config.validate_states and not is_delta_clique(stream, state.clique, delta):
            raise AssertionError(f"queued a non-clique state: {state.clique}")
        queue.append(state)
        if cap is not None and len(memo) > cap:
            raise TruncationError(cap, snapshot())

    if cap is not None and len(memo) > cap:
        raise TruncationError(cap, snapshot())

    while queue:
        state = take()
        iterations += 1
        clique = state.clique
        b, e = clique.b, clique.e
        is_max = True

        passing = _passing_nodes(stream, state, delta)
        if passing:
            is_max = False
            # Restricting children to the passing set is only sound once the
            # interval is at least delta long: below that, a node with no
            # link inside [b, e] can still qualify after the interval grows,
            # so the parent's wider pool must be kept.
            settled = (e - b) >= delta
            for v in passing:
                grown = DeltaClique(clique.nodes + (v,), b, e)
                if canonical_key(grown) not in memo:
                    if not inherit:
                        pool = None
                    elif settled:
                        pool = tuple(w for w in passing if w != v)
                    elif state.candidates is None:
                        pool = None
                    else:
                        pool = tuple(w for w in state.candidates if w != v)
                    push(SearchState(grown, pool))

        new_b = left_extension(stream, clique, delta, span, narrow=narrow)
        if new_b != b:
            is_max = False
            widened = DeltaClique(clique.nodes, new_b, e)
            if canonical_key(widened) not in memo:
                push(SearchState(widened, state.candidates))

        if not config.fault_skip_right_extension:
            new_e = right_extension(stream, clique, delta, span, narrow=narrow)
            if new_e != e:
                is_max = False
                widened = DeltaClique(clique.nodes, b, new_e)
                if canonical_key(widened) not in memo:
                    push(SearchState(widened, state.candidates))

        if is_max:
            results.append(clique)
            if log is not None:
                metric = len(clique.nodes) * (e - b)
                if metric > best_metric:
                    best_metric = metric
                log.append((iterations, len(results), best_metric))

    results.sort(key=DeltaClique.sort_key)
    return results, snapshot()
