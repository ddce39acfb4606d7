"""Constant-time formulas for k-sun graphs.

Every function here is pure integer arithmetic on ``k``; none of them builds
a graph.  Products are range-checked against the signed 64-bit limit so a
caller mirroring these values in fixed-width storage never sees wraparound.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import InvalidParameterError, check_int64
from .graph import SunSpec
from .hosoya import DistancePolynomial


def _k(k: int) -> int:
    if isinstance(k, SunSpec):
        return k.k
    if k < 3:
        raise InvalidParameterError(f"k must be >= 3, got {k}")
    return k


def _prod(k: int, factor: int, what: str) -> int:
    return check_int64(k * factor, what)


def wiener_sun(k: int) -> int:
    k = _k(k)
    return _prod(k, 4 * k - 5, f"W(S_{k})")


def wiener_polarity_sun(k: int) -> int:
    k = _k(k)
    twice = _prod(k, k - 3, f"2 W_P(S_{k})")
    # one of k, k - 3 is even
    assert twice % 2 == 0
    return twice // 2


def hosoya_sun(k: int) -> DistancePolynomial:
    """Coefficients ``[k(k+3)/2, k(k-1), k(k-3)/2]``; the cubic term vanishes at k = 3."""
    k = _k(k)
    edges2 = _prod(k, k + 3, "pairs at distance 1")
    assert edges2 % 2 == 0
    return DistancePolynomial(
        [edges2 // 2, _prod(k, k - 1, "pairs at distance 2"), wiener_polarity_sun(k)]
    )


@dataclass(frozen=True)
class TransmissionSplit:
    u_total: int  # independent vertices
    c_total: int  # clique vertices

    @property
    def total(self) -> int:
        return self.u_total + self.c_total


def transmission_split_sun(k: int) -> TransmissionSplit:
    k = _k(k)
    return TransmissionSplit(
        u_total=_prod(k, 5 * k - 7, "independent transmission"),
        c_total=_prod(k, 3 * k - 3, "clique transmission"),
    )


class Kind(enum.Enum):
    CLIQUE = "c"
    INDEPENDENT = "s"


@dataclass(frozen=True)
class SunVertex:
    kind: Kind
    index: int

    @classmethod
    def c(cls, i: int) -> SunVertex:
        return cls(Kind.CLIQUE, i)

    @classmethod
    def s(cls, i: int) -> SunVertex:
        return cls(Kind.INDEPENDENT, i)

    @classmethod
    def from_id(cls, k: int, v: int) -> SunVertex:
        """Inverse of the :class:`SunSpec` labelling."""
        if not 0 <= v < 2 * k:
            raise InvalidParameterError(f"vertex {v} outside 0..{2 * k - 1}")
        return cls.c(v + 1) if v < k else cls.s(v - k + 1)

    def to_id(self, k: int) -> int:
        spec = SunSpec(k)
        return spec.clique(self.index) if self.kind is Kind.CLIQUE else spec.independent(self.index)

    def __str__(self) -> str:
        return f"{self.kind.value}_{self.index}"


def sun_distance(k: int, a: SunVertex, b: SunVertex) -> int:
    """Hop distance between two vertices of the k-sun, by case analysis alone."""
    k = _k(k)
    for x in (a, b):
        if not 1 <= x.index <= k:
            raise InvalidParameterError(f"{x} outside 1..{k}")
    if a == b:
        return 0
    if a.kind is Kind.CLIQUE and b.kind is Kind.CLIQUE:
        return 1
    if a.kind is Kind.INDEPENDENT and b.kind is Kind.INDEPENDENT:
        gap = (a.index - b.index) % k
        return 2 if gap in (1, k - 1) else 3
    s, c = (a, b) if a.kind is Kind.INDEPENDENT else (b, a)
    # s_i touches c_i and c_{i+1}, wrapping s_k to c_1
    return 1 if c.index in (s.index, s.index % k + 1) else 2
