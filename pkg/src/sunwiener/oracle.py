"""Brute-force reference implementations, used only to cross-check the engine.

Distances come from Floyd-Warshall relaxation over intermediate vertices, which
shares no code with the frontier expansion in :mod:`sunwiener.distances`.
Index oracles enumerate vertex pairs literally.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DisconnectedError
from .graph import Graph

UNREACHABLE = -1
ORACLE_MAX_N = 200


@dataclass(frozen=True, eq=False)
class DistanceMatrix:
    n: int
    entries: np.ndarray  # int64, UNREACHABLE marks pairs with no path

    def __getitem__(self, uv: tuple[int, int]) -> int:
        return int(self.entries[uv])

    def unreachable_pairs(self) -> list[tuple[int, int]]:
        return [(int(u), int(v)) for u, v in np.argwhere(self.entries == UNREACHABLE) if u < v]

    def tolist(self) -> list[list[int]]:
        return self.entries.tolist()


def floyd_warshall(g: Graph) -> DistanceMatrix:
    n = g.n
    inf = n + 1  # longer than any simple path
    d = np.full((n, n), inf, dtype=np.int64)
    for u, v in g.edges():
        d[u, v] = d[v, u] = 1
    np.fill_diagonal(d, 0)
    for w in range(n):
        np.minimum(d, d[:, w, None] + d[None, w, :], out=d)
    d[d >= inf] = UNREACHABLE
    return DistanceMatrix(n, d)


def _pairs(dm: DistanceMatrix):
    for u in range(dm.n):
        for v in range(u + 1, dm.n):
            d = dm[u, v]
            if d == UNREACHABLE:
                raise DisconnectedError(u, v)
            yield d


def wiener_naive(dm: DistanceMatrix) -> int:
    return sum(_pairs(dm))


def polarity_naive(dm: DistanceMatrix) -> int:
    return sum(1 for d in _pairs(dm) if d == 3)


def count_at_distance_naive(dm: DistanceMatrix, dist: int) -> int:
    return sum(1 for d in _pairs(dm) if d == dist)
