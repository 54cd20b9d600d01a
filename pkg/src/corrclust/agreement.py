"""Agreement math computed directly from the graph, with no index.

This is the ground-truth layer: every quantity here is recomputed from
adjacency on each call. Distances are 64-bit floats, always evaluated as
(deg_u + deg_v - 2*common) / max_deg in that order so that repeated
computations are bit-identical.
"""

from __future__ import annotations

import bisect
from collections import Counter
from dataclasses import dataclass

from .graph import GraphError, NotPositiveEdgeError, SignedGraph


def non_agreement(g: SignedGraph, u: int, v: int) -> float:
    """Neighborhood disagreement of the positive edge {u, v}, in [0, 2].

    Equals |N(u) symmetric-difference N(v)| / max(deg(u), deg(v)); computed
    here through the intersection size so that only the smaller
    neighborhood is scanned.
    """
    if not g.has_edge(u, v):
        raise NotPositiveEdgeError(u, v)
    du = g.degree(u)
    dv = g.degree(v)
    common = g.intersection_size(u, v)
    return (du + dv - 2 * common) / (du if du >= dv else dv)


def in_agreement(g: SignedGraph, u: int, v: int, eps: float) -> bool:
    """True iff the endpoints' disagreement is strictly below ``eps``."""
    return non_agreement(g, u, v) < eps


def agree_count(g: SignedGraph, v: int, eps: float) -> int:
    """Number of neighbors of ``v`` in strict agreement at ``eps``.

    The vertex itself is never counted.
    """
    return sum(1 for w in g.neighbors(v) if non_agreement(g, v, w) < eps)


def is_light(g: SignedGraph, v: int, eps: float) -> bool:
    """True iff the agreeing fraction of v's neighborhood is below ``eps``.

    Degree-0 vertices are heavy: the strict comparison 0 < 0 fails, and
    they end up as singleton clusters regardless.
    """
    return agree_count(g, v, eps) < eps * g.degree(v)


@dataclass(frozen=True)
class DistanceStats:
    """Summary of the disagreement multiset over all positive edges."""

    distinct: int
    minimum: float | None
    maximum: float | None
    modes: tuple[tuple[float, int], ...]  # top-2 (value, frequency)


def distance_multiset(g: SignedGraph) -> tuple[list[float], DistanceStats]:
    """All edge disagreements, ascending with repetitions, plus statistics.

    Modes are the two most frequent values, ties broken toward the smaller
    value.
    """
    values = sorted(non_agreement(g, u, v) for u, v in g.edges())
    if not values:
        return values, DistanceStats(0, None, None, ())
    counts = Counter(values)
    top = sorted(counts.items(), key=lambda item: (-item[1], item[0]))[:2]
    stats = DistanceStats(
        distinct=len(counts),
        minimum=values[0],
        maximum=values[-1],
        modes=tuple(top),
    )
    return values, stats


def schedule_from_values(values: list[float], k: int = 21) -> list[float]:
    """Threshold schedule from a sorted disagreement multiset.

    Picks k equally spaced order statistics (with repetitions), dedupes,
    and guarantees the boundary points 0 and 1.99 are present. The result
    is strictly increasing within [0, 2].
    """
    if k < 2:
        raise ValueError(f"schedule size must be at least 2, got {k}")
    if not values:
        raise GraphError("cannot build a schedule without positive edges")
    last = len(values) - 1
    picked = {values[round(i * last / (k - 1))] for i in range(k)}
    picked.add(0.0)
    picked.add(1.99)
    return sorted(picked)


def make_schedule(g: SignedGraph, k: int = 21) -> list[float]:
    """Schedule of clustering thresholds adapted to the graph's distances."""
    values, _ = distance_multiset(g)
    return schedule_from_values(values, k)


def count_below(values: list[float], eps: float) -> int:
    """How many entries of a sorted list are strictly below ``eps``."""
    return bisect.bisect_left(values, eps)
