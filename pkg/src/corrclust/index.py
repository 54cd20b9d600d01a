"""Per-vertex neighbor orderings by agreement distance, kept current under
edge flips and vertex addition/removal.

Each vertex owns a list of (distance, neighbor) pairs sorted by distance
with ties broken by ascending neighbor id, plus a neighbor -> distance map
used to locate entries during repositioning. The owning vertex itself is
implicit at distance 0 and rank 1; it is never stored. Total storage is
exactly two entries per positive edge.

The index is bound to one graph object and tracks its mutation counter:
querying after an unindexed mutation raises ``StaleIndexError`` instead of
returning silently wrong answers.
"""

from __future__ import annotations

import bisect
import math
from dataclasses import dataclass

from .agreement import non_agreement
from .graph import (
    AddVertex,
    Flip,
    InvalidEventError,
    NotPositiveEdgeError,
    RemoveVertex,
    SignedGraph,
    UnknownVertexError,
)


class StaleIndexError(Exception):
    """The bound graph changed since the index was last maintained."""


class IndexInconsistencyError(Exception):
    """The stored orderings disagree with the current graph."""


@dataclass
class UpdateSummary:
    """Entry-level accounting for one maintenance operation."""

    edges_recomputed: int = 0
    entries_inserted: int = 0
    entries_removed: int = 0
    entries_moved: int = 0


class AgreementIndex:
    """Sorted agreement-distance orderings for every vertex of one graph."""

    def __init__(self, graph: SignedGraph):
        self.graph = graph
        self.graph_version = graph.version
        # per vertex: ascending list of (distance, neighbor) tuples
        self._entries: dict[int, list[tuple[float, int]]] = {}
        # per vertex: neighbor -> distance companion map
        self._dist: dict[int, dict[int, float]] = {}

    # -- queries ---------------------------------------------------------

    def check_fresh(self) -> None:
        if self.graph.version != self.graph_version:
            raise StaleIndexError(
                f"index at graph version {self.graph_version}, "
                f"graph is at {self.graph.version}"
            )

    def degree(self, v: int) -> int:
        try:
            return len(self._entries[v])
        except KeyError:
            raise UnknownVertexError(v) from None

    def entries(self, v: int) -> list[tuple[int, float]]:
        """Stored ordering for ``v`` as (neighbor, distance) pairs."""
        try:
            return [(u, d) for d, u in self._entries[v]]
        except KeyError:
            raise UnknownVertexError(v) from None

    def distance(self, v: int, u: int) -> float:
        if v not in self._dist:
            raise UnknownVertexError(v)
        try:
            return self._dist[v][u]
        except KeyError:
            raise NotPositiveEdgeError(v, u) from None

    def total_entries(self) -> int:
        return sum(len(lst) for lst in self._entries.values())

    def threshold_rank(self, v: int, eps: float) -> int:
        """Rank the eps-lightness test probes, counting the vertex itself
        as rank 1."""
        return math.ceil(eps * self.degree(v)) + 1

    def is_heavy(self, v: int, eps: float) -> bool:
        """O(1) heaviness test against the stored ordering.

        With q = rank - 1 agreeing neighbors required, the vertex is heavy
        iff its q-th stored entry (1-based) lies strictly below ``eps``.
        q = 0 is vacuously heavy; q beyond the degree is light.
        """
        self.check_fresh()
        lst = self._entries.get(v)
        if lst is None:
            raise UnknownVertexError(v)
        q = self.threshold_rank(v, eps) - 1
        if q == 0:
            return True
        if q > len(lst):
            return False
        return lst[q - 1][0] < eps

    # -- maintenance -------------------------------------------------------

    def flip_edge(self, u: int, v: int) -> UpdateSummary:
        """Toggle the sign of {u, v} and reposition every affected entry.

        Only edges incident to u or v can change distance, so the rebuild
        work is confined to their current neighborhoods.
        """
        self.check_fresh()
        g = self.graph
        if u == v:
            raise InvalidEventError(f"cannot flip self-pair {{{u}, {u}}}")
        was_positive = g.has_edge(u, v)
        g.apply(Flip(u, v))
        summary = UpdateSummary()
        if was_positive:
            self._delete_entry(u, v, summary)
            self._delete_entry(v, u, summary)
        for w in g.neighbors(u):
            self._upsert_edge(u, w, summary)
        for w in g.neighbors(v):
            if w != u:
                self._upsert_edge(v, w, summary)
        self.graph_version = g.version
        return summary

    def add_vertex(self, x: int, neighbors=()) -> UpdateSummary:
        """Insert a fresh vertex with its positive edges and repair the
        orderings of every edge touching the new neighborhood."""
        self.check_fresh()
        g = self.graph
        g.apply(AddVertex(x, tuple(neighbors)))
        self._entries[x] = []
        self._dist[x] = {}
        summary = UpdateSummary()
        for a, b in self._incident_edges({x, *neighbors}):
            self._upsert_edge(a, b, summary)
        self.graph_version = g.version
        return summary

    def remove_vertex(self, x: int) -> UpdateSummary:
        """Drop a vertex, its ordering, and every entry that referenced it,
        then reposition edges incident to its former neighborhood."""
        self.check_fresh()
        g = self.graph
        former = g.neighbors(x)
        g.apply(RemoveVertex(x))
        summary = UpdateSummary()
        del self._entries[x]
        del self._dist[x]
        for w in former:
            self._delete_entry(w, x, summary)
        for a, b in self._incident_edges(former):
            self._upsert_edge(a, b, summary)
        self.graph_version = g.version
        return summary

    def _incident_edges(self, seeds) -> list[tuple[int, int]]:
        edges = set()
        for a in seeds:
            for w in self.graph.neighbors(a):
                edges.add((a, w) if a < w else (w, a))
        return sorted(edges)

    def _upsert_edge(self, a: int, b: int, summary: UpdateSummary) -> None:
        d = non_agreement(self.graph, a, b)
        summary.edges_recomputed += 1
        for x, y in ((a, b), (b, a)):
            old = self._dist[x].get(y)
            if old is None:
                bisect.insort(self._entries[x], (d, y))
                self._dist[x][y] = d
                summary.entries_inserted += 1
            elif old != d:
                lst = self._entries[x]
                lst.pop(bisect.bisect_left(lst, (old, y)))
                bisect.insort(lst, (d, y))
                self._dist[x][y] = d
                summary.entries_moved += 1

    def _delete_entry(self, x: int, y: int, summary: UpdateSummary) -> None:
        d = self._dist[x].pop(y)
        lst = self._entries[x]
        lst.pop(bisect.bisect_left(lst, (d, y)))
        summary.entries_removed += 1

    # -- diagnostics -------------------------------------------------------

    def validate(self) -> None:
        """Recompute everything and compare; raises on any inconsistency."""
        g = self.graph
        if set(self._entries) != set(g.vertices()):
            raise IndexInconsistencyError("vertex sets differ from the graph")
        total = 0
        for v, lst in self._entries.items():
            if lst != sorted(lst):
                raise IndexInconsistencyError(f"ordering for {v} is not sorted")
            if sorted(u for _, u in lst) != sorted(self._dist[v]):
                raise IndexInconsistencyError(f"companion map mismatch at {v}")
            if len(lst) != g.degree(v):
                raise IndexInconsistencyError(
                    f"ordering for {v} has {len(lst)} entries, degree is {g.degree(v)}"
                )
            for d, u in lst:
                expected = non_agreement(g, v, u)
                if d != expected:
                    raise IndexInconsistencyError(
                        f"entry ({v}, {u}) stores {d!r}, recomputed {expected!r}"
                    )
                if self._dist[u].get(v) != d:
                    raise IndexInconsistencyError(
                        f"mirror entry ({u}, {v}) missing or unequal"
                    )
            total += len(lst)
        if total != 2 * g.m:
            raise IndexInconsistencyError(
                f"{total} stored entries for {g.m} edges (expected {2 * g.m})"
            )

    def __eq__(self, other) -> bool:
        if not isinstance(other, AgreementIndex):
            return NotImplemented
        return self._entries == other._entries

    def __repr__(self) -> str:
        return (
            f"AgreementIndex(vertices={len(self._entries)}, "
            f"entries={self.total_entries()})"
        )


def build_index(g: SignedGraph) -> AgreementIndex:
    """Construct the full ordering family from scratch.

    Each edge distance is computed once (scanning the smaller neighborhood)
    and shared by both endpoint orderings, then every per-vertex list is
    sorted by (distance, neighbor id).
    """
    idx = AgreementIndex(g)
    entries = idx._entries
    dist = idx._dist
    for v in g.vertices():
        entries[v] = []
        dist[v] = {}
    for u, v in g.edges():
        d = non_agreement(g, u, v)
        entries[u].append((d, v))
        entries[v].append((d, u))
        dist[u][v] = d
        dist[v][u] = d
    for lst in entries.values():
        lst.sort()
    return idx
