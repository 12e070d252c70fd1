"""Maximal delta-clique enumeration and analytics for link streams."""

from .analytics import (
    CCDFSeries,
    SummaryRow,
    ccdf,
    class_homogeneity,
    clique_durations,
    clique_sizes,
    discovery_curve,
    summarize,
    write_ccdf,
    write_discovery_log,
    write_summary,
)
from .engine import (
    EngineConfig,
    SearchState,
    Telemetry,
    TruncationError,
    canonical_key,
    enumerate_maximal,
    left_extension,
    node_extensions,
    right_extension,
    seed_states,
)
from .oracle import (
    OracleSizeError,
    brute_force_maximal,
    contains,
    static_maximal_cliques,
)
from .stream import (
    DeltaClique,
    LinkStream,
    StaticGraph,
    StreamFormatError,
    TimeInterval,
    effective_span,
    first_occurrence,
    induced_graph,
    is_delta_clique,
    last_occurrence,
    pair_covers,
    parse_link_stream,
    span_bounds,
)

__version__ = "0.1.0"

__all__ = [
    "CCDFSeries",
    "DeltaClique",
    "EngineConfig",
    "LinkStream",
    "OracleSizeError",
    "SearchState",
    "StaticGraph",
    "StreamFormatError",
    "SummaryRow",
    "Telemetry",
    "TimeInterval",
    "TruncationError",
    "brute_force_maximal",
    "canonical_key",
    "ccdf",
    "class_homogeneity",
    "clique_durations",
    "clique_sizes",
    "contains",
    "discovery_curve",
    "effective_span",
    "enumerate_maximal",
    "first_occurrence",
    "induced_graph",
    "is_delta_clique",
    "last_occurrence",
    "left_extension",
    "node_extensions",
    "pair_covers",
    "parse_link_stream",
    "right_extension",
    "seed_states",
    "span_bounds",
    "static_maximal_cliques",
    "summarize",
    "write_ccdf",
    "write_discovery_log",
    "write_summary",
    "__version__",
]
