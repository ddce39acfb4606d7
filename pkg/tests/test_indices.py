from collections import Counter

import pytest
from hypothesis import given

from sunwiener.errors import DisconnectedError
from sunwiener.graph import build_graph, generate, sun
from sunwiener.indices import (
    full_report,
    generalized_wd,
    wiener_pairwise,
    wiener_polarity,
    wiener_transmission,
    zagreb_m1,
    zagreb_m2,
)
from sunwiener.oracle import count_at_distance_naive, floyd_warshall, wiener_naive

from .conftest import connected_corpus, graph_and_permutation

P4, P5 = generate("path", 4), generate("path", 5)
K4 = generate("complete", 4)


@pytest.mark.parametrize("g, w", [(sun(3), 21), (sun(4), 44), (K4, 6)])
def test_wiener_pairwise(g, w):
    assert wiener_pairwise(g) == w


@pytest.mark.parametrize("g, w", [(sun(4), 44), (P4, 10), (generate("complete", 9), 36)])
def test_wiener_transmission(g, w):
    assert wiener_transmission(g) == w


@pytest.mark.parametrize("g, wp", [(sun(3), 0), (sun(5), 5), (P4, 1), (P5, 2)])
def test_wiener_polarity(g, wp):
    assert wiener_polarity(g) == wp


def test_generalized_wd():
    assert generalized_wd(sun(4), 2) == 12
    assert generalized_wd(sun(3), 5) == 0
    with pytest.raises(ValueError):
        generalized_wd(sun(3), 0)


@pytest.mark.parametrize("g, m1, m2", [(sun(4), 116, 230), (K4, 36, 54), (generate("path", 2), 2, 1)])
def test_zagreb(g, m1, m2):
    assert zagreb_m1(g) == m1
    assert zagreb_m2(g) == m2


def test_zagreb_ignores_connectivity():
    g = build_graph(4, [(0, 1), (2, 3)])
    assert (zagreb_m1(g), zagreb_m2(g)) == (4, 2)
    with pytest.raises(DisconnectedError):
        wiener_pairwise(g)


@pytest.mark.parametrize(
    "g, expected",
    [
        (sun(3), dict(wiener=21, wiener_polarity=0, w_d=(9, 6), m1=60, m2=96, diameter=2)),
        (generate("complete", 3), dict(wiener=3, wiener_polarity=0, w_d=(3,), m1=12, m2=12, diameter=1)),
        (sun(4), dict(wiener=44, wiener_polarity=2, w_d=(14, 12, 2), m1=116, m2=230, diameter=3)),
    ],
)
def test_full_report(g, expected):
    r = full_report(g)
    for key, value in expected.items():
        assert getattr(r, key) == value
    assert (r.n, r.m) == (g.n, g.m)
    assert r.to_dict()["w_d"] == list(expected["w_d"])


@pytest.mark.parametrize("g", connected_corpus(), ids=repr)
def test_identities(g):
    r = full_report(g)
    assert r.wiener == wiener_transmission(g) == sum(d * w for d, w in enumerate(r.w_d, 1))
    assert sum(generalized_wd(g, d) for d in range(1, r.diameter + 1)) == g.n * (g.n - 1) // 2
    assert generalized_wd(g, 3) == r.wiener_polarity
    assert r.w_d[0] == g.m
    assert g.n * r.m1 >= 4 * g.m * g.m


@pytest.mark.parametrize("g", connected_corpus()[::7], ids=repr)
def test_against_oracle(g):
    dm = floyd_warshall(g)
    assert wiener_pairwise(g) == wiener_naive(dm)
    assert [generalized_wd(g, d) for d in range(1, 6)] == [
        count_at_distance_naive(dm, d) for d in range(1, 6)
    ]
    deg = Counter(x for e in g.edges() for x in e)
    assert zagreb_m1(g) == sum(c * c for c in deg.values())


@given(graph_and_permutation())
def test_label_invariance(case):
    g, perm = case
    assert full_report(g.relabel(perm)) == full_report(g)
