"""Hosoya (Wiener) polynomial with exact integer coefficients."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable

from .distances import distance_distribution
from .graph import Graph


@dataclass(frozen=True)
class DistancePolynomial:
    """``coeffs[l-1]`` is the coefficient of ``t**l``; there is no constant term.

    Trailing zero coefficients are trimmed on construction.
    """

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int]) -> None:
        cs = [int(c) for c in coeffs]
        if any(c < 0 for c in cs):
            raise ValueError(f"coefficients must be nonnegative: {cs}")
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def degree(self) -> int:
        return len(self.coeffs)

    def __call__(self, t: Rational | int | str) -> Fraction:
        return evaluate(self, t)


def hosoya_polynomial(g: Graph) -> DistancePolynomial:
    return DistancePolynomial(distance_distribution(g).counts)


def evaluate(p: DistancePolynomial, t: Rational | int | str) -> Fraction:
    t = Fraction(t)
    acc = Fraction(0)
    # Horner, then one extra factor of t for the missing constant term
    for c in reversed(p.coeffs):
        acc = acc * t + c
    return acc * t


def wiener_from_polynomial(p: DistancePolynomial) -> int:
    """Derivative of the polynomial at ``t = 1``."""
    return sum(ell * c for ell, c in enumerate(p.coeffs, 1))
