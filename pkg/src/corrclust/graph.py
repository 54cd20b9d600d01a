"""Storage for the positive subgraph of a complete signed graph.

Only positively signed edges are materialized; every absent pair is an
implicit negative edge. Adjacency is kept as sorted lists (the public
contract) plus hash sets for O(1) membership and O(min degree)
intersections.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from typing import Iterable, Iterator


class GraphError(Exception):
    """Base class for signed-graph validation errors."""


class UnknownVertexError(GraphError):
    def __init__(self, vertex):
        super().__init__(f"unknown vertex {vertex}")
        self.vertex = vertex


class DuplicateVertexError(GraphError):
    def __init__(self, vertex):
        super().__init__(f"vertex {vertex} already exists")
        self.vertex = vertex


class NotPositiveEdgeError(GraphError):
    def __init__(self, u, v):
        super().__init__(f"{{{u}, {v}}} is not a positive edge")
        self.edge = (u, v)


class InvalidEventError(GraphError):
    pass


@dataclass(frozen=True)
class Flip:
    """Toggle the sign of the pair {u, v}."""

    u: int
    v: int


@dataclass(frozen=True)
class AddVertex:
    """Insert a fresh vertex together with its positive neighbor set."""

    v: int
    neighbors: tuple[int, ...] = ()


@dataclass(frozen=True)
class RemoveVertex:
    """Delete a vertex and all its incident positive edges."""

    v: int


@dataclass(frozen=True)
class Query:
    """Ask for a clustering at the given agreement threshold (no mutation)."""

    eps: float


UpdateEvent = Flip | AddVertex | RemoveVertex | Query


class SignedGraph:
    """The positive subgraph, mutable through :meth:`apply`.

    Neighborhoods are open: a vertex is never its own neighbor. ``version``
    increments on every mutation so index structures can detect staleness.
    """

    def __init__(self) -> None:
        self._adj: dict[int, list[int]] = {}
        self._sets: dict[int, set[int]] = {}
        self._m = 0
        self.version = 0

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[int, int]],
                   vertices: Iterable[int] = ()) -> "SignedGraph":
        """Build a graph from undirected edge pairs.

        Self-loops and repeated pairs are ignored; ``vertices`` may add
        isolated vertices beyond the edge endpoints.
        """
        g = cls()
        for v in vertices:
            g._ensure_vertex(v)
        for u, v in edges:
            g._ensure_vertex(u)
            g._ensure_vertex(v)
            if u != v and v not in g._sets[u]:
                g._insert_edge(u, v)
        return g

    # -- read access ---------------------------------------------------

    @property
    def n(self) -> int:
        return len(self._adj)

    @property
    def m(self) -> int:
        return self._m

    def __contains__(self, v: int) -> bool:
        return v in self._adj

    def vertices(self) -> list[int]:
        return sorted(self._adj)

    def degree(self, v: int) -> int:
        try:
            return len(self._adj[v])
        except KeyError:
            raise UnknownVertexError(v) from None

    def neighbors(self, v: int) -> list[int]:
        """Open positive neighborhood of ``v``, ascending by id."""
        try:
            return list(self._adj[v])
        except KeyError:
            raise UnknownVertexError(v) from None

    def has_edge(self, u: int, v: int) -> bool:
        try:
            su = self._sets[u]
            self._sets[v]
        except KeyError as exc:
            raise UnknownVertexError(exc.args[0]) from None
        return v in su

    def edges(self) -> Iterator[tuple[int, int]]:
        """All positive edges as (u, v) with u < v, in sorted order."""
        for u in sorted(self._adj):
            adj = self._adj[u]
            i = bisect.bisect_right(adj, u)
            for v in adj[i:]:
                yield (u, v)

    def intersection_size(self, u: int, v: int) -> int:
        """|N(u) ∩ N(v)|, probing from the smaller neighborhood."""
        try:
            a, b = self._sets[u], self._sets[v]
        except KeyError as exc:
            raise UnknownVertexError(exc.args[0]) from None
        if len(a) > len(b):
            a, b = b, a
        return len(a & b)

    # -- mutation ------------------------------------------------------

    def apply(self, event: UpdateEvent) -> dict[int, int]:
        """Apply one update event; returns new degrees of touched vertices.

        ``Query`` events validate their threshold and leave the graph (and
        its version) untouched. A removed vertex is omitted from the
        returned mapping.
        """
        if isinstance(event, Flip):
            return self._apply_flip(event.u, event.v)
        if isinstance(event, AddVertex):
            return self._apply_add(event.v, event.neighbors)
        if isinstance(event, RemoveVertex):
            return self._apply_remove(event.v)
        if isinstance(event, Query):
            if not 0.0 <= event.eps <= 2.0:
                raise InvalidEventError(f"query eps {event.eps} outside [0, 2]")
            return {}
        raise InvalidEventError(f"unsupported event {event!r}")

    def _apply_flip(self, u: int, v: int) -> dict[int, int]:
        if u == v:
            raise InvalidEventError(f"cannot flip self-pair {{{u}, {u}}}")
        if self.has_edge(u, v):
            self._remove_edge(u, v)
        else:
            self._insert_edge(u, v)
        self.version += 1
        return {u: len(self._adj[u]), v: len(self._adj[v])}

    def _apply_add(self, v: int, neighbors: Iterable[int]) -> dict[int, int]:
        if v in self._adj:
            raise DuplicateVertexError(v)
        nbrs = set(neighbors)
        if v in nbrs:
            raise InvalidEventError(f"vertex {v} cannot neighbor itself")
        for w in nbrs:
            if w not in self._adj:
                raise UnknownVertexError(w)
        self._adj[v] = []
        self._sets[v] = set()
        for w in nbrs:
            self._insert_edge(v, w)
        self.version += 1
        touched = {v: len(self._adj[v])}
        touched.update((w, len(self._adj[w])) for w in nbrs)
        return touched

    def _apply_remove(self, v: int) -> dict[int, int]:
        if v not in self._adj:
            raise UnknownVertexError(v)
        former = list(self._adj[v])
        for w in former:
            adj = self._adj[w]
            adj.pop(bisect.bisect_left(adj, v))
            self._sets[w].discard(v)
        self._m -= len(former)
        del self._adj[v]
        del self._sets[v]
        self.version += 1
        return {w: len(self._adj[w]) for w in former}

    def _ensure_vertex(self, v: int) -> None:
        if v < 0:
            raise InvalidEventError(f"vertex ids must be non-negative, got {v}")
        if v not in self._adj:
            self._adj[v] = []
            self._sets[v] = set()

    def _insert_edge(self, u: int, v: int) -> None:
        bisect.insort(self._adj[u], v)
        bisect.insort(self._adj[v], u)
        self._sets[u].add(v)
        self._sets[v].add(u)
        self._m += 1

    def _remove_edge(self, u: int, v: int) -> None:
        adj_u, adj_v = self._adj[u], self._adj[v]
        adj_u.pop(bisect.bisect_left(adj_u, v))
        adj_v.pop(bisect.bisect_left(adj_v, u))
        self._sets[u].discard(v)
        self._sets[v].discard(u)
        self._m -= 1

    # -- diagnostics ---------------------------------------------------

    def validate(self) -> None:
        """Full-scan invariant check; raises GraphError on any violation."""
        total = 0
        for v, adj in self._adj.items():
            if any(adj[i] >= adj[i + 1] for i in range(len(adj) - 1)):
                raise GraphError(f"adjacency of {v} is not strictly increasing")
            if v in self._sets[v]:
                raise GraphError(f"self-loop on {v}")
            if set(adj) != self._sets[v]:
                raise GraphError(f"list/set mismatch at {v}")
            for w in adj:
                if w not in self._adj:
                    raise UnknownVertexError(w)
                if v not in self._sets[w]:
                    raise GraphError(f"asymmetric edge {{{v}, {w}}}")
            total += len(adj)
        if total != 2 * self._m:
            raise GraphError(f"edge count {self._m} disagrees with degree sum {total}")

    def copy(self) -> "SignedGraph":
        g = SignedGraph()
        g._adj = {v: list(a) for v, a in self._adj.items()}
        g._sets = {v: set(s) for v, s in self._sets.items()}
        g._m = self._m
        g.version = self.version
        return g

    def __repr__(self) -> str:
        return f"SignedGraph(n={self.n}, m={self.m})"
