"""Shared test utilities: independent oracles and invariant checkers."""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations

from deltacliques import (
    DeltaClique,
    LinkStream,
    SearchState,
    contains,
    effective_span,
    induced_graph,
    is_delta_clique,
    left_extension,
    node_extensions,
    right_extension,
)
from deltacliques.generators import random_links

FOURLINK_TEXT = "3 a b\n4 b c\n5 a c\n6 a b\n"


def lclique(stream: LinkStream, labels, b: int, e: int) -> DeltaClique:
    """Clique from label strings, e.g. lclique(s, 'abc', 2, 7) or a list."""
    return DeltaClique(tuple(stream.id_of(x) for x in labels), b, e)


def as_labels(stream: LinkStream, cliques) -> set:
    return {(frozenset(stream.labels[i] for i in c.nodes), c.b, c.e) for c in cliques}


def tau_scan_covers(times, b: int, e: int, delta: int) -> bool:
    """Continuous-window coverage evaluated exactly.

    Coverage status can only change where a link enters or leaves the
    sliding window, i.e. at window starts t and t - delta; between two
    consecutive such points the status is constant, so checking every
    critical point plus the midpoints in between decides the whole range.
    """
    domain_end = max(e - delta, b)
    crit = {Fraction(b), Fraction(domain_end)}
    for t in times:
        crit.add(Fraction(t))
        crit.add(Fraction(t - delta))
    points = sorted(p for p in crit if Fraction(b) <= p <= domain_end)
    taus = []
    for i, p in enumerate(points):
        taus.append(p)
        if i + 1 < len(points):
            taus.append((p + points[i + 1]) / 2)
    for tau in taus:
        window_end = min(tau + delta, Fraction(e))
        if not any(tau <= t <= window_end for t in times):
            return False
    return True


def naive_static_maximal(graph) -> set:
    """All-subsets maximal-clique filter; exponential, small graphs only."""
    cliques = []
    for size in range(1, graph.node_count + 1):
        for sub in combinations(range(graph.node_count), size):
            if all(graph.has_edge(u, v) for u, v in combinations(sub, 2)):
                cliques.append(frozenset(sub))
    return {
        tuple(sorted(c))
        for c in cliques
        if not any(c < other for other in cliques)
    }


def random_stream(seed: int, *, max_nodes: int = 5, max_links: int = 12,
                  t_max: int = 20) -> LinkStream:
    """Seeded stream matching the acceptance corpus bounds."""
    rng = random.Random(seed)
    n = rng.randint(2, max_nodes)
    m = rng.randint((n + 1) // 2, max_links)
    return LinkStream.from_triples(random_links(n, m, 0, t_max, seed=seed))


def result_violations(stream: LinkStream, delta: int, result) -> list[str]:
    """Check an enumeration output against every structural invariant.

    Returns human-readable violation strings; empty means the output is
    sound, maximal, an antichain, long enough (default span only), and
    projects onto cliques of the induced graph.
    """
    problems: list[str] = []
    span = effective_span(stream, delta)
    graph = induced_graph(stream)
    default_span = stream.explicit_span is None
    for c in result:
        if not is_delta_clique(stream, c, delta):
            problems.append(f"not a clique: {c}")
            continue
        if node_extensions(stream, SearchState(c), delta):
            problems.append(f"node-extensible: {c}")
        if left_extension(stream, c, delta, span) != c.b:
            problems.append(f"left-extensible: {c}")
        if right_extension(stream, c, delta, span) != c.e:
            problems.append(f"right-extensible: {c}")
        if default_span and c.duration < delta:
            problems.append(f"duration below delta: {c}")
        for u, v in combinations(c.nodes, 2):
            if not graph.has_edge(u, v):
                problems.append(f"not an induced-graph clique: {c}")
                break
    for c1 in result:
        for c2 in result:
            if c1 != c2 and contains(c1, c2):
                problems.append(f"containment among results: {c2} inside {c1}")
    return problems
