"""Clustering engines: direct recomputation and the indexed fast path.

Both produce the same partition: connected components of the graph after
dropping edges out of agreement and edges joining two light vertices.
Cluster labels are canonical (the minimum member id), so equal partitions
compare equal as plain mappings.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable

from .agreement import non_agreement
from .graph import SignedGraph, UnknownVertexError
from .index import AgreementIndex


class DisjointSet:
    """Union-find with union by rank and full path compression."""

    def __init__(self, elements: Iterable[int]):
        self.parent = {x: x for x in elements}
        self.rank = {x: 0 for x in self.parent}

    def find(self, x: int) -> int:
        parent = self.parent
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.rank[ra] < self.rank[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        if self.rank[ra] == self.rank[rb]:
            self.rank[ra] += 1
        return True


@dataclass(frozen=True)
class Clustering:
    """A partition of the vertex set with canonical labels.

    Every vertex maps to the smallest id inside its cluster, so two
    clusterings describe the same partition iff their assignments are
    equal.
    """

    assignment: dict[int, int] = field(default_factory=dict)

    @classmethod
    def from_components(cls, components: Iterable[Iterable[int]]) -> "Clustering":
        assignment = {}
        for comp in components:
            members = list(comp)
            label = min(members)
            for v in members:
                assignment[v] = label
        return cls(assignment)

    @classmethod
    def from_disjoint_set(cls, ds: DisjointSet) -> "Clustering":
        label: dict[int, int] = {}
        for v in ds.parent:
            root = ds.find(v)
            if v < label.get(root, v + 1):
                label[root] = v
        return cls({v: label[ds.find(v)] for v in ds.parent})

    def clusters(self) -> dict[int, list[int]]:
        groups: dict[int, list[int]] = {}
        for v in sorted(self.assignment):
            groups.setdefault(self.assignment[v], []).append(v)
        return groups

    def __len__(self) -> int:
        return len(set(self.assignment.values()))


def same_partition(c1: Clustering, c2: Clustering) -> bool:
    """Exact partition equality; raises if the vertex sets differ."""
    if c1.assignment.keys() != c2.assignment.keys():
        raise ValueError("clusterings cover different vertex sets")
    return c1.assignment == c2.assignment


def sparsified_edges(g: SignedGraph, eps: float) -> list[tuple[int, int]]:
    """Edges surviving the two discard passes, recomputed from scratch.

    An edge survives iff its endpoints agree at ``eps`` and at least one
    endpoint is heavy.
    """
    count = {v: 0 for v in g.vertices()}
    agreeing = []
    for u, v in g.edges():
        if non_agreement(g, u, v) < eps:
            agreeing.append((u, v))
            count[u] += 1
            count[v] += 1
    light = {v: count[v] < eps * g.degree(v) for v in count}
    return [(u, v) for u, v in agreeing if not (light[u] and light[v])]


def cluster_baseline(g: SignedGraph, eps: float) -> Clustering:
    """Full recompute-from-scratch clustering at one threshold."""
    ds = DisjointSet(g.vertices())
    for u, v in sparsified_edges(g, eps):
        ds.union(u, v)
    return Clustering.from_disjoint_set(ds)


def cluster_indexed(idx: AgreementIndex, eps: float) -> Clustering:
    """Indexed clustering query; same partition as the baseline.

    Heaviness is an O(1) rank probe per vertex. Every surviving edge has a
    heavy endpoint, so walking only the agreeing prefixes of heavy
    vertices' orderings touches each surviving edge at least once; light
    orderings are never scanned.
    """
    idx.check_fresh()
    g = idx.graph
    vertices = g.vertices()
    ds = DisjointSet(vertices)
    entries = idx._entries
    ceil = math.ceil
    for v in vertices:
        lst = entries[v]
        q = ceil(eps * len(lst))
        if q > len(lst) or (q > 0 and lst[q - 1][0] >= eps):
            continue  # light
        for d, u in lst:
            if d >= eps:
                break
            ds.union(v, u)
    return Clustering.from_disjoint_set(ds)


def clustering_cost(g: SignedGraph, c: Clustering) -> int:
    """Disagreement count: cut positive edges plus negative pairs kept
    inside clusters."""
    assignment = c.assignment
    for v in g.vertices():
        if v not in assignment:
            raise UnknownVertexError(v)
    cut = 0
    intra_pos: dict[int, int] = {}
    for u, v in g.edges():
        lu, lv = assignment[u], assignment[v]
        if lu != lv:
            cut += 1
        else:
            intra_pos[lu] = intra_pos.get(lu, 0) + 1
    sizes: dict[int, int] = {}
    for v in assignment:
        lbl = assignment[v]
        sizes[lbl] = sizes.get(lbl, 0) + 1
    intra_neg = sum(
        s * (s - 1) // 2 - intra_pos.get(lbl, 0) for lbl, s in sizes.items()
    )
    return cut + intra_neg
