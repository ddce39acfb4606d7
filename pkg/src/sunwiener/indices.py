"""Distance- and degree-based topological indices.

All values are exact Python integers.  The two Wiener routes aggregate the
same sweep differently (direct pair sum over ``u < v`` versus half the total
transmission), so comparing them checks the engine rather than itself.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

from .distances import distance_summary
from .errors import check_int64
from .graph import Graph, degrees


@dataclass(frozen=True)
class IndexReport:
    n: int
    m: int
    diameter: int
    wiener: int
    wiener_polarity: int
    w_d: tuple[int, ...]
    m1: int
    m2: int

    def to_dict(self) -> dict:
        d = asdict(self)
        d["w_d"] = list(self.w_d)
        return d


def wiener_pairwise(g: Graph) -> int:
    return distance_summary(g).pair_sum


def wiener_transmission(g: Graph) -> int:
    total = sum(distance_summary(g).transmissions)
    assert total % 2 == 0, "transmission total must be even"
    return total // 2


def generalized_wd(g: Graph, d: int) -> int:
    """Number of unordered pairs at distance exactly ``d`` (0 beyond the diameter)."""
    if d < 1:
        raise ValueError(f"distance must be >= 1, got {d}")
    counts = distance_summary(g).distribution.counts
    return counts[d - 1] if d <= len(counts) else 0


def wiener_polarity(g: Graph) -> int:
    return generalized_wd(g, 3)


def zagreb_m1(g: Graph) -> int:
    return check_int64(sum(x * x for x in degrees(g)), "M1")


def zagreb_m2(g: Graph) -> int:
    deg = degrees(g)
    return check_int64(sum(deg[u] * deg[v] for u, v in g.edges()), "M2")


def full_report(g: Graph) -> IndexReport:
    counts = distance_summary(g).distribution.counts
    return IndexReport(
        n=g.n,
        m=g.m,
        diameter=len(counts),
        wiener=wiener_pairwise(g),
        wiener_polarity=wiener_polarity(g),
        w_d=counts,
        m1=zagreb_m1(g),
        m2=zagreb_m2(g),
    )
