"""Evaluate the Wiener/polarity/Zagreb relations on a concrete graph.

These relations are reported, never assumed.  The M1-based bound and the
M1-based Wiener formula fail on graphs with triangles (every k-sun with
k >= 4 among them), while ``W = n(n-1) + W_P - m`` holds for every connected
graph of diameter at most 3 because ``W = W_1 + 2 W_2 + 3 W_3`` and
``W_1 = m``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .graph import Graph
from .indices import IndexReport, full_report


class Status(str, enum.Enum):
    EQUALITY_HOLDS = "EqualityHolds"
    INEQUALITY_HOLDS = "InequalityHolds"
    VIOLATED = "Violated"
    NOT_APPLICABLE = "NotApplicable"


@dataclass(frozen=True)
class RelationReport:
    name: str
    lhs: int
    rhs: int
    status: Status
    n: int
    m: int
    diameter: int

    def to_dict(self) -> dict:
        return {"name": self.name, "lhs": self.lhs, "rhs": self.rhs, "status": self.status.value}


def _half_m1(r: IndexReport) -> int:
    # sum of deg^2 has the parity of sum of deg = 2m
    assert r.m1 % 2 == 0, f"M1 = {r.m1} is odd"
    return r.m1 // 2


def _equality_status(lhs: int, rhs: int, diameter: int) -> Status:
    if diameter > 3:
        return Status.NOT_APPLICABLE
    return Status.EQUALITY_HOLDS if lhs == rhs else Status.VIOLATED


def _report(name: str, lhs: int, rhs: int, status: Status, r: IndexReport) -> RelationReport:
    return RelationReport(name, lhs, rhs, status, r.n, r.m, r.diameter)


def polarity_bound(r: IndexReport) -> RelationReport:
    """``W_P <= n(n-1)/2 - M1/2``, claimed tight when the diameter is 3."""
    lhs = r.wiener_polarity
    rhs = r.n * (r.n - 1) // 2 - _half_m1(r)
    if lhs > rhs or (r.diameter == 3 and lhs != rhs):
        status = Status.VIOLATED
    elif lhs == rhs:
        status = Status.EQUALITY_HOLDS
    else:
        status = Status.INEQUALITY_HOLDS
    return _report("polarity_bound", lhs, rhs, status, r)


def corollary_wiener(r: IndexReport) -> RelationReport:
    """``W = 3n(n-1)/2 - M1/2 - m`` for diameter at most 3."""
    rhs = 3 * r.n * (r.n - 1) // 2 - _half_m1(r) - r.m
    return _report("corollary_wiener", r.wiener, rhs, _equality_status(r.wiener, rhs, r.diameter), r)


def proposition(r: IndexReport) -> RelationReport:
    """``W = n(n-1) + W_P - m`` for diameter at most 3."""
    rhs = r.n * (r.n - 1) + r.wiener_polarity - r.m
    return _report("proposition", r.wiener, rhs, _equality_status(r.wiener, rhs, r.diameter), r)


def decomposition(r: IndexReport) -> RelationReport:
    """``W = sum_d d * W_d``; no diameter restriction."""
    rhs = sum(d * w for d, w in enumerate(r.w_d, 1))
    status = Status.EQUALITY_HOLDS if r.wiener == rhs else Status.VIOLATED
    return _report("decomposition", r.wiener, rhs, status, r)


def check_polarity_bound(g: Graph) -> RelationReport:
    return polarity_bound(full_report(g))


def check_corollary_wiener(g: Graph) -> RelationReport:
    return corollary_wiener(full_report(g))


def check_proposition(g: Graph) -> RelationReport:
    return proposition(full_report(g))


def check_decomposition(g: Graph) -> RelationReport:
    return decomposition(full_report(g))


def check_all(g: Graph, report: IndexReport | None = None) -> list[RelationReport]:
    r = report if report is not None else full_report(g)
    return [polarity_bound(r), corollary_wiener(r), proposition(r), decomposition(r)]
