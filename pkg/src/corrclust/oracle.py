"""Deliberately naive reference implementations.

These trade speed for obviousness and share no logic with the optimized
paths beyond the graph type itself: distances come from a literal
symmetric difference, clustering from edge-by-edge predicates plus BFS,
index checking from a fresh rebuild. Tests and the ``verify`` command
cross-validate everything else against them.
"""

from __future__ import annotations

from collections import deque

from .clustering import Clustering
from .graph import NotPositiveEdgeError, SignedGraph
from .index import AgreementIndex, build_index


def oracle_non_agreement(g: SignedGraph, u: int, v: int) -> float:
    """Disagreement via materialized neighbor sets and a real symmetric
    difference."""
    if not g.has_edge(u, v):
        raise NotPositiveEdgeError(u, v)
    nu = set(g.neighbors(u))
    nv = set(g.neighbors(v))
    return len(nu ^ nv) / max(len(nu), len(nv))


def oracle_cluster(g: SignedGraph, eps: float) -> Clustering:
    """Clustering by first principles: filter every edge, then BFS."""
    vertices = g.vertices()
    dist = {}
    for u, v in g.edges():
        dist[(u, v)] = oracle_non_agreement(g, u, v)

    def light(v: int) -> bool:
        agree = 0
        for w in g.neighbors(v):
            key = (v, w) if v < w else (w, v)
            if dist[key] < eps:
                agree += 1
        return agree < eps * g.degree(v)

    lightness = {v: light(v) for v in vertices}
    adj: dict[int, list[int]] = {v: [] for v in vertices}
    for (u, v), d in dist.items():
        if d < eps and not (lightness[u] and lightness[v]):
            adj[u].append(v)
            adj[v].append(u)

    seen: set[int] = set()
    components = []
    for start in vertices:
        if start in seen:
            continue
        comp = [start]
        seen.add(start)
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    comp.append(y)
                    queue.append(y)
        components.append(comp)
    return Clustering.from_components(components)


def oracle_rebuild_index(g: SignedGraph) -> AgreementIndex:
    """Fresh from-scratch index over the current graph.

    Maintenance is validated by exact comparison against this rebuild.
    """
    return build_index(g)
