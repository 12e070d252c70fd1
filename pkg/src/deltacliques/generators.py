"""Synthetic stream generators: adversarial worst cases and seeded random data."""

from __future__ import annotations

import random
from typing import Optional

Triple = tuple[int, str, str]


def chain_links(link_count: int, spacing: int, pair_count: int = 1) -> list[Triple]:
    """Evenly spaced repeats: each pair interacts at 0, spacing, 2*spacing, ...

    With spacing equal to the enumeration delta this realizes the quadratic
    interval worst case.
    """
    if link_count < 1:
        raise ValueError("link_count must be at least 1")
    if spacing < 1:
        raise ValueError("spacing must be at least 1")
    if pair_count < 1:
        raise ValueError("pair_count must be at least 1")
    links = []
    for p in range(pair_count):
        u, v = f"u{p}", f"v{p}"
        for k in range(link_count):
            links.append((k * spacing, u, v))
    return links


def burst_links(node_count: int) -> list[Triple]:
    """All pairs interact once, at time zero: the exponential subset worst case."""
    if node_count < 2:
        raise ValueError("node_count must be at least 2")
    names = [f"n{i}" for i in range(node_count)]
    return [
        (0, names[i], names[j])
        for i in range(node_count)
        for j in range(i + 1, node_count)
    ]


def random_links(
    node_count: int,
    link_count: int,
    t_min: int,
    t_max: int,
    seed: Optional[int] = 0,
) -> list[Triple]:
    """Seeded uniform links: exactly `link_count` distinct (t, u, v) with every
    node appearing at least once.
    """
    if node_count < 2:
        raise ValueError("node_count must be at least 2")
    if t_max < t_min:
        raise ValueError("empty time range")
    minimum = (node_count + 1) // 2
    if link_count < minimum:
        raise ValueError(
            f"{node_count} nodes need at least {minimum} links to avoid isolates"
        )
    capacity = (t_max - t_min + 1) * node_count * (node_count - 1) // 2
    if link_count > capacity:
        raise ValueError(
            f"{link_count} distinct links cannot fit in {capacity} slots"
        )
    rng = random.Random(seed)
    chosen: set[tuple[int, int, int]] = set()

    def add(u: int, v: int, t: int) -> bool:
        key = (t, u, v) if u < v else (t, v, u)
        if key in chosen:
            return False
        chosen.add(key)
        return True

    # touch every node first, then fill uniformly
    order = list(range(node_count))
    rng.shuffle(order)
    for i in range(0, node_count - 1, 2):
        while not add(order[i], order[i + 1], rng.randint(t_min, t_max)):
            pass
    if node_count % 2:
        lone = order[-1]
        while True:
            other = rng.randrange(node_count - 1)
            if other >= lone:
                other += 1
            if add(lone, other, rng.randint(t_min, t_max)):
                break
    while len(chosen) < link_count:
        u, v = rng.sample(range(node_count), 2)
        add(u, v, rng.randint(t_min, t_max))

    return [(t, f"n{u}", f"n{v}") for t, u, v in sorted(chosen)]


def render_stream(links: list[Triple], comment: Optional[str] = None) -> str:
    """Stream-file text for a link list, sorted for byte-stable output."""
    lines = []
    if comment:
        for part in comment.splitlines():
            lines.append(f"# {part}")
    for t, u, v in sorted(links):
        lines.append(f"{t} {u} {v}")
    return "\n".join(lines) + "\n"
