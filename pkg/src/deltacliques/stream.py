"""Link-stream data model: parsing, occurrence queries, coverage predicates.

A link stream is a finite set of undirected, timestamped links (t, u, v)
over a time span.  Timestamps are integer ticks and all arithmetic on them
is exact; fractional input times must land on integer ticks after scaling.
Node labels are interned to dense integer ids in order of first appearance,
and every derived structure (link list, per-pair timelines) is kept sorted
so that downstream enumeration is fully deterministic.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Optional, Sequence, Union


class StreamFormatError(ValueError):
    """Malformed stream input: bad line syntax, self-loops, span violations."""

    def __init__(self, message: str, line_no: Optional[int] = None) -> None:
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)
        self.line_no = line_no


@dataclass(frozen=True)
class TimeInterval:
    """Closed tick interval [b, e]."""

    b: int
    e: int

    def __post_init__(self) -> None:
        if self.b > self.e:
            raise ValueError(f"interval start {self.b} exceeds end {self.e}")

    @property
    def duration(self) -> int:
        return self.e - self.b

    def contains(self, other: "TimeInterval") -> bool:
        return self.b <= other.b and other.e <= self.e


@dataclass(frozen=True)
class DeltaClique:
    """A node set plus the closed interval on which it is mutually active.

    Nodes are normalized to ascending order at construction, so two cliques
    compare equal exactly when node sets and intervals coincide.
    """

    nodes: tuple[int, ...]
    b: int
    e: int

    def __post_init__(self) -> None:
        nodes = tuple(sorted(self.nodes))
        if len(nodes) < 2:
            raise ValueError("a clique needs at least two nodes")
        if any(nodes[i] == nodes[i + 1] for i in range(len(nodes) - 1)):
            raise ValueError(f"duplicate node in {nodes}")
        if self.b > self.e:
            raise ValueError(f"interval start {self.b} exceeds end {self.e}")
        object.__setattr__(self, "nodes", nodes)

    @property
    def interval(self) -> TimeInterval:
        return TimeInterval(self.b, self.e)

    @property
    def duration(self) -> int:
        return self.e - self.b

    def sort_key(self) -> tuple[int, int, tuple[int, ...]]:
        return (self.b, self.e, self.nodes)


@dataclass(frozen=True)
class StaticGraph:
    """Undirected simple graph over dense integer vertices."""

    node_count: int
    neighbors: tuple[tuple[int, ...], ...]

    @classmethod
    def from_edges(cls, node_count: int, edges: Iterable[tuple[int, int]]) -> "StaticGraph":
        adjacency: list[set[int]] = [set() for _ in range(node_count)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adjacency[u].add(v)
            adjacency[v].add(u)
        return cls(node_count, tuple(tuple(sorted(s)) for s in adjacency))

    @property
    def edge_count(self) -> int:
        return sum(len(ns) for ns in self.neighbors) // 2

    def has_edge(self, u: int, v: int) -> bool:
        ns = self.neighbors[u]
        i = bisect.bisect_left(ns, v)
        return i < len(ns) and ns[i] == v


SpanLike = Union[TimeInterval, tuple[int, int], None]

# internal record: (ticks, label_u, label_v, class_u or None, class_v or None)
_RawLink = tuple[int, str, str, Optional[str], Optional[str]]


class LinkStream:
    """Immutable, deduplicated set of undirected links with per-pair timelines.

    Construct via :func:`parse_link_stream` or :meth:`from_triples`.  Safe
    for concurrent read-only use; nothing here mutates after __init__.
    """

    __slots__ = (
        "links",
        "labels",
        "pair_timelines",
        "node_classes",
        "explicit_span",
        "duplicates_collapsed",
        "t_min",
        "t_max",
        "_label_ids",
    )

    def __init__(
        self,
        links: tuple[tuple[int, int, int], ...],
        labels: tuple[str, ...],
        node_classes: dict[int, str],
        explicit_span: Optional[TimeInterval],
        duplicates_collapsed: int,
    ) -> None:
        self.links = links
        self.labels = labels
        self._label_ids = {label: i for i, label in enumerate(labels)}
        self.node_classes = node_classes
        self.explicit_span = explicit_span
        self.duplicates_collapsed = duplicates_collapsed
        timelines: dict[tuple[int, int], list[int]] = {}
        for t, u, v in links:
            timelines.setdefault((u, v), []).append(t)
        # links are sorted by time first, so each timeline is already ascending
        self.pair_timelines: dict[tuple[int, int], tuple[int, ...]] = {
            pair: tuple(ts) for pair, ts in timelines.items()
        }
        self.t_min = min(t for t, _, _ in links)
        self.t_max = max(t for t, _, _ in links)

    @property
    def node_count(self) -> int:
        return len(self.labels)

    @property
    def link_count(self) -> int:
        return len(self.links)

    def id_of(self, label: str) -> int:
        return self._label_ids[label]

    def label_of(self, node: int) -> str:
        return self.labels[node]

    def pair_timeline(self, u: int, v: int) -> tuple[int, ...]:
        if u == v:
            raise ValueError(f"self-pair ({u}, {u})")
        key = (u, v) if u < v else (v, u)
        return self.pair_timelines.get(key, ())

    @classmethod
    def from_triples(
        cls,
        triples: Iterable[tuple[int, object, object]],
        explicit_span: SpanLike = None,
    ) -> "LinkStream":
        """Build a stream from (tick, label, label) triples; labels may be any
        objects with a stable str()."""
        raw: list[_RawLink] = []
        for index, (t, u, v) in enumerate(triples, start=1):
            if not isinstance(t, int) or isinstance(t, bool):
                raise StreamFormatError(f"non-integer tick {t!r}", index)
            su, sv = str(u), str(v)
            if su == sv:
                raise StreamFormatError(f"self-loop on node {su!r}", index)
            raw.append((t, su, sv, None, None))
        return _assemble(raw, explicit_span)

    def __repr__(self) -> str:
        return (
            f"LinkStream(nodes={self.node_count}, links={self.link_count}, "
            f"span={self.explicit_span})"
        )


def _normalize_span(span: SpanLike) -> Optional[TimeInterval]:
    if span is None or isinstance(span, TimeInterval):
        return span
    lo, hi = span
    try:
        return TimeInterval(int(lo), int(hi))
    except ValueError as exc:
        raise StreamFormatError(str(exc)) from None


def _assemble(raw: list[_RawLink], explicit_span: SpanLike) -> LinkStream:
    label_ids: dict[str, int] = {}
    labels: list[str] = []
    classes: dict[int, str] = {}
    seen: set[tuple[int, int, int]] = set()
    duplicates = 0

    def intern(label: str) -> int:
        node = label_ids.get(label)
        if node is None:
            node = len(labels)
            label_ids[label] = node
            labels.append(label)
        return node

    for t, lu, lv, cu, cv in raw:
        u, v = intern(lu), intern(lv)
        if cu is not None:
            classes.setdefault(u, cu)
        if cv is not None:
            classes.setdefault(v, cv)
        key = (t, u, v) if u < v else (t, v, u)
        if key in seen:
            duplicates += 1
        else:
            seen.add(key)

    if not seen:
        raise StreamFormatError("stream contains no links")

    span = _normalize_span(explicit_span)
    links = tuple(sorted(seen))
    if span is not None:
        for t, u, v in links:
            if not (span.b <= t <= span.e):
                raise StreamFormatError(
                    f"link ({t}, {labels[u]}, {labels[v]}) lies outside "
                    f"explicit span [{span.b}, {span.e}]"
                )
    return LinkStream(links, tuple(labels), classes, span, duplicates)


def _parse_ticks(field: str, scale: int, line_no: int) -> int:
    try:
        value = Fraction(field)
    except (ValueError, ZeroDivisionError):
        raise StreamFormatError(f"unparsable time {field!r}", line_no) from None
    scaled = value * scale
    if scaled.denominator != 1:
        raise StreamFormatError(
            f"time {field!r} is not an integer tick after scaling by {scale}", line_no
        )
    return int(scaled)


def parse_link_stream(
    text: str,
    *,
    time_scale: int = 1,
    explicit_span: SpanLike = None,
) -> LinkStream:
    """Parse line-oriented `<time> <u> <v> [class_u class_v ...]` text.

    Blank lines and lines starting with '#' are skipped.  Duplicate links
    (including reversed duplicates) collapse to one; the collapsed count is
    kept on the stream.  Times are multiplied by `time_scale` and must land
    on integer ticks.  When two or more extra columns are present the first
    two are taken as class labels for u and v (SocioPatterns layout); a
    single extra column is ignored.

    Raises StreamFormatError on malformed lines, self-loops, non-integral
    times, empty input, or links outside an explicit span.
    """
    if not isinstance(time_scale, int) or isinstance(time_scale, bool) or time_scale < 1:
        raise ValueError(f"time_scale must be a positive integer, got {time_scale!r}")
    raw: list[_RawLink] = []
    for line_no, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        fields = stripped.split()
        if len(fields) < 3:
            raise StreamFormatError(
                f"expected at least 3 fields, got {len(fields)}", line_no
            )
        ticks = _parse_ticks(fields[0], time_scale, line_no)
        u, v = fields[1], fields[2]
        if u == v:
            raise StreamFormatError(f"self-loop on node {u!r}", line_no)
        cu = cv = None
        if len(fields) >= 5:
            cu, cv = fields[3], fields[4]
        raw.append((ticks, u, v, cu, cv))
    return _assemble(raw, explicit_span)


def _check_delta(delta: int) -> None:
    if not isinstance(delta, int) or isinstance(delta, bool) or delta < 0:
        raise ValueError(f"delta must be a non-negative integer, got {delta!r}")


def effective_span(stream: LinkStream, delta: int) -> TimeInterval:
    """The span enumeration works in: the explicit one if set, otherwise the
    link extent padded by delta on both sides."""
    _check_delta(delta)
    if stream.explicit_span is not None:
        return stream.explicit_span
    return TimeInterval(stream.t_min - delta, stream.t_max + delta)


def first_occurrence(stream: LinkStream, u: int, v: int, start: int) -> Optional[int]:
    """Smallest link time of pair (u, v) at or after `start`, or None."""
    timeline = stream.pair_timeline(u, v)
    i = bisect.bisect_left(timeline, start)
    return timeline[i] if i < len(timeline) else None


def last_occurrence(stream: LinkStream, u: int, v: int, end: int) -> Optional[int]:
    """Largest link time of pair (u, v) at or before `end`, or None."""
    timeline = stream.pair_timeline(u, v)
    i = bisect.bisect_right(timeline, end)
    return timeline[i - 1] if i > 0 else None


def _timeline_covers(times: Sequence[int], b: int, e: int, delta: int) -> bool:
    """Finite equivalent of "a link falls in every length-delta window of [b, e]".

    With t1 < ... < tk the pair's link times inside [b, e], coverage holds
    iff k >= 1 and, when e - b > delta, additionally t1 <= b + delta, all
    consecutive gaps are <= delta, and tk >= e - delta.  The scan below
    stops as soon as a time at or past e - delta is reached: any later gap
    starts outside the quantified window range.
    """
    i = bisect.bisect_left(times, b)
    n = len(times)
    if i == n or times[i] > e:
        return False
    if e - b <= delta:
        return True
    t = times[i]
    if t > b + delta:
        return False
    limit = e - delta
    while t < limit:
        i += 1
        if i == n:
            return False
        nxt = times[i]
        if nxt > e or nxt - t > delta:
            return False
        t = nxt
    return True


def pair_covers(
    stream: LinkStream, u: int, v: int, interval: TimeInterval, delta: int
) -> bool:
    """True iff u and v interact at least once in every length-delta window
    of `interval` (continuous window placement, evaluated finitely)."""
    _check_delta(delta)
    timeline = stream.pair_timeline(u, v)
    return _timeline_covers(timeline, interval.b, interval.e, delta)


def is_delta_clique(stream: LinkStream, clique: DeltaClique, delta: int) -> bool:
    """True iff every pair of clique nodes covers the clique interval."""
    _check_delta(delta)
    timelines = stream.pair_timelines
    b, e = clique.b, clique.e
    for u, v in combinations(clique.nodes, 2):
        timeline = timelines.get((u, v))
        if timeline is None or not _timeline_covers(timeline, b, e, delta):
            return False
    return True


def induced_graph(stream: LinkStream) -> StaticGraph:
    """Static graph with one edge per pair that interacts at least once."""
    return StaticGraph.from_edges(stream.node_count, stream.pair_timelines.keys())


def span_bounds(stream: LinkStream, clique: DeltaClique) -> tuple[int, int]:
    """(earliest, latest) link times among the clique's pairs inside its
    interval.  Requires the clique to actually hold on the stream."""
    earliest: Optional[int] = None
    latest: Optional[int] = None
    for u, v in combinations(clique.nodes, 2):
        timeline = stream.pair_timelines.get((u, v))
        if timeline is None:
            raise ValueError(f"pair ({u}, {v}) never interacts")
        i = bisect.bisect_left(timeline, clique.b)
        j = bisect.bisect_right(timeline, clique.e)
        if i >= j:
            raise ValueError(
                f"pair ({u}, {v}) has no link inside [{clique.b}, {clique.e}]"
            )
        earliest = timeline[i] if earliest is None else min(earliest, timeline[i])
        latest = timeline[j - 1] if latest is None else max(latest, timeline[j - 1])
    assert earliest is not None and latest is not None
    return earliest, latest
