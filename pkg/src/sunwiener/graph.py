"""Immutable simple undirected graphs, family generators, and the edge-list format.

Vertices are the integers ``0..n-1``.  Adjacency lists are kept sorted so
every traversal, and every enumeration derived from one, is deterministic.
"""

from __future__ import annotations

import enum
import io
import os
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, Sequence, TextIO

import numpy as np
from scipy import sparse

from .errors import (
    DuplicateEdgeError,
    GraphError,
    InvalidParameterError,
    SelfLoopError,
    VertexOutOfRangeError,
)

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    n: int
    adjacency: tuple[tuple[int, ...], ...]
    m: int = field(init=False)

    def __post_init__(self) -> None:
        total = sum(len(nbrs) for nbrs in self.adjacency)
        object.__setattr__(self, "m", total // 2)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def edges(self) -> Iterator[Edge]:
        """Yield each edge once as ``(u, v)`` with ``u < v``, in lexicographic order."""
        for u, nbrs in enumerate(self.adjacency):
            for v in nbrs:
                if v > u:
                    yield u, v

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Return the isomorphic graph in which vertex ``v`` becomes ``perm[v]``."""
        return build_graph(self.n, [(perm[u], perm[v]) for u, v in self.edges()])

    @cached_property
    def csr(self) -> sparse.csr_matrix:
        indptr = np.zeros(self.n + 1, dtype=np.int64)
        np.cumsum([len(nbrs) for nbrs in self.adjacency], out=indptr[1:])
        indices = np.fromiter(
            (v for nbrs in self.adjacency for v in nbrs), dtype=np.int32, count=2 * self.m
        )
        data = np.ones(2 * self.m, dtype=np.float32)
        return sparse.csr_matrix((data, indices, indptr), shape=(self.n, self.n))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n: int, edges: Iterable[Edge]) -> Graph:
    if n < 0:
        raise InvalidParameterError(f"vertex count must be >= 0, got {n}")
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        for x in (u, v):
            if not 0 <= x < n:
                raise VertexOutOfRangeError(x, n)
        if u == v:
            raise SelfLoopError(u)
        if v in nbrs[u]:
            raise DuplicateEdgeError(u, v)
        nbrs[u].add(v)
        nbrs[v].add(u)
    return Graph(n, tuple(tuple(sorted(s)) for s in nbrs))


def degrees(g: Graph) -> list[int]:
    return [len(nbrs) for nbrs in g.adjacency]


@dataclass(frozen=True)
class SunSpec:
    """Parameter of a k-sun graph and its vertex labelling.

    Clique vertex ``c_i`` gets identifier ``i - 1`` and independent vertex
    ``s_i`` gets ``k + i - 1``, for ``1 <= i <= k``.
    """

    k: int

    def __post_init__(self) -> None:
        if self.k < 3:
            raise InvalidParameterError(f"k must be >= 3, got {self.k}")

    @property
    def n(self) -> int:
        return 2 * self.k

    def clique(self, i: int) -> int:
        self._check_index(i)
        return i - 1

    def independent(self, i: int) -> int:
        self._check_index(i)
        return self.k + i - 1

    def _check_index(self, i: int) -> None:
        if not 1 <= i <= self.k:
            raise InvalidParameterError(f"index {i} outside 1..{self.k}")


def sun(spec: SunSpec | int) -> Graph:
    if not isinstance(spec, SunSpec):
        spec = SunSpec(spec)
    k = spec.k
    edges = list(combinations(range(k), 2))
    for i in range(1, k + 1):
        s = spec.independent(i)
        edges.append((s, spec.clique(i)))
        edges.append((s, spec.clique(i % k + 1)))
    return build_graph(spec.n, edges)


class Family(str, enum.Enum):
    SUN = "sun"
    PATH = "path"
    CYCLE = "cycle"
    COMPLETE = "complete"


_MIN_SIZE = {Family.SUN: 3, Family.PATH: 1, Family.CYCLE: 3, Family.COMPLETE: 1}


def generate(family: Family | str, size: int) -> Graph:
    """Canonically labelled member of a named family.

    ``size`` is ``k`` for suns and the vertex count otherwise.
    """
    family = Family(family)
    if size < _MIN_SIZE[family]:
        name = "k" if family is Family.SUN else "n"
        raise InvalidParameterError(f"{name} must be >= {_MIN_SIZE[family]}")
    if family is Family.SUN:
        return sun(size)
    if family is Family.PATH:
        return build_graph(size, [(i, i + 1) for i in range(size - 1)])
    if family is Family.CYCLE:
        return build_graph(size, [(i, (i + 1) % size) for i in range(size)])
    return build_graph(size, combinations(range(size), 2))


class EdgeListError(GraphError):
    """Malformed edge-list text."""


def parse_edge_list(stream: TextIO | str) -> Graph:
    """Read the ``n m`` header plus ``m`` lines of ``u v``; ``#`` lines are comments."""
    if isinstance(stream, str):
        stream = io.StringIO(stream)
    header: tuple[int, int] | None = None
    edges: list[Edge] = []
    for lineno, raw in enumerate(stream, 1):
        line = raw.rstrip("\r\n")
        if line.startswith("#") or not line.strip():
            continue
        parts = line.split(" ")
        if len(parts) != 2:
            raise EdgeListError(f"line {lineno}: expected two integers, got {line!r}")
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListError(f"line {lineno}: expected two integers, got {line!r}") from None
        if header is None:
            if a < 0 or b < 0:
                raise EdgeListError(f"line {lineno}: negative header value")
            header = (a, b)
        else:
            edges.append((a, b))
    if header is None:
        raise EdgeListError("missing 'n m' header")
    n, m = header
    if len(edges) != m:
        raise EdgeListError(f"header declares {m} edges, found {len(edges)}")
    return build_graph(n, edges)


def read_edge_list(path: str | os.PathLike[str]) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_edge_list(fh)


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def write_edge_list(g: Graph, path: str | os.PathLike[str]) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_edge_list(g))
