"""Wiener, Wiener polarity, Zagreb and Hosoya invariants, with k-sun closed forms."""

__version__ = "0.1.0"

from .distances import (
    DistanceDistribution,
    bfs_distances,
    diameter,
    distance_distribution,
    transmission,
)
from .errors import (
    DisconnectedError,
    DomainError,
    DuplicateEdgeError,
    GraphError,
    IndexOverflowError,
    InvalidParameterError,
    SelfLoopError,
    VertexOutOfRangeError,
)
from .graph import Family, Graph, SunSpec, build_graph, degrees, generate, sun
from .hosoya import DistancePolynomial, evaluate, hosoya_polynomial, wiener_from_polynomial
from .indices import (
    IndexReport,
    full_report,
    generalized_wd,
    wiener_pairwise,
    wiener_polarity,
    wiener_transmission,
    zagreb_m1,
    zagreb_m2,
)
