from __future__ import annotations

import sys
from itertools import combinations

from hypothesis import settings, strategies as st

from sunwiener.corpus import double_star, random_corpus
from sunwiener.graph import Family, Graph, build_graph, generate, sun

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

RANDOM_CORPUS = list(random_corpus(count=200, max_n=30))
FAMILY_CORPUS = [
    generate(fam, size)
    for fam, lo in ((Family.PATH, 1), (Family.CYCLE, 3), (Family.COMPLETE, 1))
    for size in range(lo, 31)
]
SUN_CORPUS = [sun(k) for k in range(3, 41)]
DOUBLE_STARS = [double_star(a, b) for a in range(1, 6) for b in range(1, 6)]


def corpus() -> list[Graph]:
    return SUN_CORPUS + FAMILY_CORPUS + RANDOM_CORPUS + DOUBLE_STARS


def connected_corpus() -> list[Graph]:
    """Everything with at least one pair of vertices."""
    return [g for g in corpus() if g.n >= 2]


@st.composite
def connected_graphs(draw, min_n: int = 2, max_n: int = 14) -> Graph:
    n = draw(st.integers(min_n, max_n))
    parents = [draw(st.integers(0, i - 1)) for i in range(1, n)]
    edges = {(p, i) for i, p in enumerate(parents, 1)}
    others = [e for e in combinations(range(n), 2) if e not in edges]
    if others:
        edges |= set(draw(st.lists(st.sampled_from(others), unique=True, max_size=len(others))))
    return build_graph(n, sorted(edges))


@st.composite
def graph_and_permutation(draw, max_n: int = 12):
    g = draw(connected_graphs(max_n=max_n))
    perm = draw(st.permutations(range(g.n)))
    return g, perm


def pytest_terminal_summary(terminalreporter):
    acceptance = sys.modules.get("tests.test_acceptance")
    if acceptance is not None and acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in acceptance.RESULTS:
            terminalreporter.write_line(line)
