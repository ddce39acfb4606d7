"""Level-synchronous BFS over all sources.

Sources are processed in blocks: the frontiers of a block form the columns of
an ``n x b`` matrix and one sparse product with the adjacency matrix advances
all of them by one hop.  Nothing of size ``n x n`` is ever stored; pair counts
and transmissions are folded into running totals block by block.

Pair counts are taken from each source ``v`` over targets ``u > v`` only, so
every unordered pair is counted exactly once.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from .errors import DisconnectedError, VertexOutOfRangeError, check_int64
from .graph import Graph

# cells of the per-block distance matrix; bounds memory at ~16 MiB of int32
BLOCK_CELLS = 1 << 22


@dataclass(frozen=True)
class DistanceDistribution:
    """``counts[l-1]`` is the number of unordered pairs at distance ``l``."""

    counts: tuple[int, ...]

    @property
    def diameter(self) -> int:
        return len(self.counts)

    def pairs(self) -> int:
        return sum(self.counts)


@dataclass(frozen=True)
class DistanceSummary:
    distribution: DistanceDistribution
    transmissions: tuple[int, ...]
    pair_sum: int  # sum of d(u, v) over u < v, accumulated directly


def _bfs_block(g: Graph, sources: np.ndarray) -> np.ndarray:
    """Distances from each of ``sources`` (rows) to every vertex; -1 if unreachable."""
    n, b = g.n, len(sources)
    cols = np.arange(b)
    dist = np.full((n, b), -1, dtype=np.int32)
    dist[sources, cols] = 0
    frontier = np.zeros((n, b), dtype=np.float32)
    frontier[sources, cols] = 1.0
    adj = g.csr
    level = 0
    while True:
        fresh = (adj @ frontier > 0) & (dist < 0)
        if not fresh.any():
            break
        level += 1
        dist[fresh] = level
        frontier = fresh.astype(np.float32)
    return dist.T


def _raise_unreachable(block: np.ndarray, sources: np.ndarray) -> None:
    row, col = np.argwhere(block < 0)[0]
    raise DisconnectedError(int(sources[row]), int(col))


def bfs_distances(g: Graph, source: int) -> list[int]:
    if not 0 <= source < g.n:
        raise VertexOutOfRangeError(source, g.n)
    src = np.array([source])
    row = _bfs_block(g, src)
    if (row < 0).any():
        _raise_unreachable(row, src)
    return row[0].tolist()


def _blocks(n: int) -> list[np.ndarray]:
    size = max(1, min(n, BLOCK_CELLS // max(n, 1)))
    return [np.arange(lo, min(lo + size, n)) for lo in range(0, n, size)]


@lru_cache(maxsize=16)
def distance_summary(g: Graph) -> DistanceSummary:
    """One all-sources sweep producing every distance aggregate the indices need."""
    n = g.n
    counts = np.zeros(1, dtype=np.int64)
    transmissions: list[int] = []
    pair_sum = 0
    targets = np.arange(n)
    for sources in _blocks(n):
        block = _bfs_block(g, sources)
        if (block < 0).any():
            _raise_unreachable(block, sources)
        transmissions.extend(block.sum(axis=1, dtype=np.int64).tolist())
        upper = block[targets[None, :] > sources[:, None]]
        pair_sum += int(upper.sum(dtype=np.int64))
        hist = np.bincount(upper, minlength=len(counts))
        if len(hist) > len(counts):
            counts = np.pad(counts, (0, len(hist) - len(counts)))
        counts += hist
    check_int64(pair_sum, "sum of distances")
    # counts[0] holds distance 0, which never occurs for u < v
    dist = DistanceDistribution(tuple(check_int64(int(c), "pair count") for c in counts[1:]))
    return DistanceSummary(dist, tuple(transmissions), pair_sum)


def all_distances(g: Graph) -> list[list[int]]:
    """Full distance matrix; intended for small graphs and tests."""
    rows: list[list[int]] = []
    for sources in _blocks(g.n):
        block = _bfs_block(g, sources)
        if (block < 0).any():
            _raise_unreachable(block, sources)
        rows.extend(block.tolist())
    return rows


def distance_distribution(g: Graph) -> DistanceDistribution:
    return distance_summary(g).distribution


def diameter(g: Graph) -> int:
    return distance_summary(g).distribution.diameter


def transmission(g: Graph, v: int) -> int:
    return sum(bfs_distances(g, v))


def transmissions(g: Graph, vertices: Sequence[int] | None = None) -> list[int]:
    every = distance_summary(g).transmissions
    if vertices is None:
        return list(every)
    return [every[v] for v in vertices]
