"""Seeded synthetic graphs and update streams for verification runs."""

from __future__ import annotations

import math
from random import Random

from .graph import AddVertex, Flip, RemoveVertex, SignedGraph, UpdateEvent


def random_graph(n: int, density: float, rng: Random) -> SignedGraph:
    """G(n, p) on ids 0..n-1 via geometric edge skipping."""
    if not 0.0 <= density <= 1.0:
        raise ValueError(f"density must be in [0, 1], got {density}")
    edges = []
    if density > 0.0:
        if density >= 1.0:
            edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
        else:
            log_q = math.log(1.0 - density)
            v, w = 1, -1
            while v < n:
                w += 1 + int(math.log(1.0 - rng.random()) / log_q)
                while w >= v and v < n:
                    w -= v
                    v += 1
                if v < n:
                    edges.append((w, v))
    return SignedGraph.from_edges(edges, vertices=range(n))


def clustered_graph(sizes: list[int], noise_edges: int, rng: Random) -> SignedGraph:
    """Disjoint cliques of the given sizes plus random cross edges.

    Produces a spread of disagreement values: small intra-clique
    distances, large noise-edge distances.
    """
    edges = []
    start = 0
    for size in sizes:
        members = range(start, start + size)
        edges.extend((u, v) for u in members for v in range(u + 1, start + size))
        start += size
    n = start
    seen = set(edges)
    added = 0
    while added < noise_edges:
        u = rng.randrange(n)
        v = rng.randrange(n)
        if u == v:
            continue
        edge = (u, v) if u < v else (v, u)
        if edge in seen:
            continue
        seen.add(edge)
        edges.append(edge)
        added += 1
    return SignedGraph.from_edges(edges, vertices=range(n))


class EventFactory:
    """Draws valid update events against the evolving graph.

    Fresh vertex ids grow monotonically so removed ids are never reused.
    """

    def __init__(self, g: SignedGraph, rng: Random, *,
                 flip_frac: float = 0.70, add_frac: float = 0.15,
                 neighbor_density: float = 0.1, min_vertices: int = 3):
        self.g = g
        self.rng = rng
        self.flip_frac = flip_frac
        self.add_frac = add_frac
        self.neighbor_density = neighbor_density
        self.min_vertices = min_vertices
        self._next_id = max(g.vertices(), default=-1) + 1

    def next_event(self) -> UpdateEvent:
        verts = self.g.vertices()
        r = self.rng.random()
        if r >= self.flip_frac + self.add_frac and len(verts) > self.min_vertices:
            return RemoveVertex(self.rng.choice(verts))
        if r >= self.flip_frac or len(verts) < 2:
            x = self._next_id
            self._next_id += 1
            nbrs = tuple(w for w in verts if self.rng.random() < self.neighbor_density)
            return AddVertex(x, nbrs)
        u, v = self.rng.sample(verts, 2)
        return Flip(min(u, v), max(u, v))
