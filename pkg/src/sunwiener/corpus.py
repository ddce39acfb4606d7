"""Seeded random graphs for cross-check sweeps."""

from __future__ import annotations

import random
from itertools import combinations
from typing import Iterator

from .errors import InvalidParameterError
from .graph import Graph, build_graph

DEFAULT_SEED = 20240917


def random_tree(n: int, rng: random.Random) -> Graph:
    """Uniform-attachment random tree; vertex ``i`` hangs off a random earlier vertex."""
    if n < 1:
        raise InvalidParameterError(f"n must be >= 1, got {n}")
    return build_graph(n, [(rng.randrange(i), i) for i in range(1, n)])


def random_connected(n: int, p: float, rng: random.Random) -> Graph:
    """A random tree plus each remaining pair independently with probability ``p``."""
    tree = random_tree(n, rng)
    edges = set(tree.edges())
    for u, v in combinations(range(n), 2):
        if (u, v) not in edges and rng.random() < p:
            edges.add((u, v))
    return build_graph(n, sorted(edges))


def random_corpus(count: int = 200, max_n: int = 30, seed: int = DEFAULT_SEED) -> Iterator[Graph]:
    """``count`` connected graphs with ``2 <= n <= max_n``; one in five is a tree."""
    rng = random.Random(seed)
    for i in range(count):
        n = rng.randint(2, max_n)
        if i % 5 == 0:
            yield random_tree(n, rng)
        else:
            yield random_connected(n, rng.choice((0.05, 0.1, 0.2, 0.4, 0.7)), rng)


def double_star(a: int, b: int) -> Graph:
    """Two adjacent centres carrying ``a`` and ``b`` leaves; diameter 3 when both are positive."""
    n = a + b + 2
    edges = [(0, 1)]
    edges += [(0, 2 + i) for i in range(a)]
    edges += [(1, 2 + a + j) for j in range(b)]
    return build_graph(n, edges)
