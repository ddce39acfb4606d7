import random

import pytest
from hypothesis import given

from sunwiener.corpus import double_star, random_tree
from sunwiener.distances import diameter
from sunwiener.graph import generate, sun
from sunwiener.relations import (
    Status,
    check_all,
    check_corollary_wiener,
    check_decomposition,
    check_polarity_bound,
    check_proposition,
)

from .conftest import RANDOM_CORPUS, connected_corpus, graph_and_permutation

P4, P5, C6 = generate("path", 4), generate("path", 5), generate("cycle", 6)


def sides(report):
    return report.lhs, report.rhs, report.status


@pytest.mark.parametrize(
    "g, expected",
    [
        (P4, (1, 1, Status.EQUALITY_HOLDS)),
        (sun(4), (2, -30, Status.VIOLATED)),
        (C6, (3, 3, Status.EQUALITY_HOLDS)),
        # K4: 0 <= 6 - 18 fails
        (generate("complete", 4), (0, -12, Status.VIOLATED)),
        # P5 has diameter 4: 2 <= 10 - 7
        (P5, (2, 3, Status.INEQUALITY_HOLDS)),
    ],
)
def test_polarity_bound(g, expected):
    assert sides(check_polarity_bound(g)) == expected


@pytest.mark.parametrize(
    "g, expected",
    [
        (P4, (10, 10, Status.EQUALITY_HOLDS)),
        (sun(4), (44, 12, Status.VIOLATED)),
        (C6, (27, 27, Status.EQUALITY_HOLDS)),
        (P5, (20, 19, Status.NOT_APPLICABLE)),
    ],
)
def test_corollary_wiener(g, expected):
    assert sides(check_corollary_wiener(g)) == expected


@pytest.mark.parametrize(
    "g, expected",
    [
        (sun(4), (44, 44, Status.EQUALITY_HOLDS)),
        (sun(3), (21, 21, Status.EQUALITY_HOLDS)),
        # W_P(P5) = 2: pairs {0,3} and {1,4}
        (P5, (20, 18, Status.NOT_APPLICABLE)),
    ],
)
def test_proposition(g, expected):
    assert sides(check_proposition(g)) == expected


def test_report_context():
    r = check_proposition(sun(4))
    assert (r.n, r.m, r.diameter) == (8, 14, 3)
    assert r.to_dict() == {"name": "proposition", "lhs": 44, "rhs": 44, "status": "EqualityHolds"}


def test_check_all_sun3():
    reports = check_all(sun(3))
    assert [r.name for r in reports] == [
        "polarity_bound", "corollary_wiener", "proposition", "decomposition"
    ]
    by_name = {r.name: r.status for r in reports}
    assert by_name["proposition"] is Status.EQUALITY_HOLDS
    assert by_name["decomposition"] is Status.EQUALITY_HOLDS


def test_check_all_sun4():
    by_name = {r.name: r.status for r in check_all(sun(4))}
    assert by_name == {
        "polarity_bound": Status.VIOLATED,
        "corollary_wiener": Status.VIOLATED,
        "proposition": Status.EQUALITY_HOLDS,
        "decomposition": Status.EQUALITY_HOLDS,
    }


def test_complete_decomposition():
    assert sides(check_decomposition(generate("complete", 4))) == (6, 6, Status.EQUALITY_HOLDS)


SMALL_DIAMETER = [g for g in connected_corpus() + [sun(k) for k in range(41, 65)] if diameter(g) <= 3]


@pytest.mark.parametrize("g", SMALL_DIAMETER, ids=repr)
def test_proposition_holds_for_diameter_at_most_3(g):
    assert check_proposition(g).status is Status.EQUALITY_HOLDS


@pytest.mark.parametrize("g", connected_corpus(), ids=repr)
def test_decomposition_always_holds(g):
    assert check_decomposition(g).status is Status.EQUALITY_HOLDS


TREES_D3 = [double_star(a, b) for a in range(1, 6) for b in range(1, 6)] + [
    g for g in RANDOM_CORPUS if g.m == g.n - 1 and diameter(g) == 3
]


@pytest.mark.parametrize("g", TREES_D3, ids=repr)
def test_trees_of_diameter_3(g):
    assert check_polarity_bound(g).status is Status.EQUALITY_HOLDS
    assert check_corollary_wiener(g).status is Status.EQUALITY_HOLDS


def test_random_tree_generator_hits_diameter_3():
    rng = random.Random(3)
    assert any(diameter(random_tree(6, rng)) == 3 for _ in range(50))


@given(graph_and_permutation())
def test_label_invariance(case):
    g, perm = case
    assert check_all(g.relabel(perm)) == check_all(g)
    assert check_all(g) == check_all(g)
