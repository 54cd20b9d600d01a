"""Text readers and writers: edge lists, update streams, clusterings,
statistics tables, histograms, and index snapshots.

All numeric output uses '.' as the decimal point regardless of locale.
Distances are serialized with 17 significant digits so floats round-trip
exactly.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path

from .agreement import DistanceStats
from .clustering import Clustering
from .graph import AddVertex, Flip, Query, RemoveVertex, SignedGraph, UpdateEvent
from .index import AgreementIndex, IndexInconsistencyError

STATS_HEADER = [
    "eps", "agree_edges", "light_vertices", "heavy_vertices",
    "clusters", "cost", "cc_ms", "icc_ms",
]


class ParseError(Exception):
    def __init__(self, path, line: int, message: str):
        super().__init__(f"{path}:{line}: {message}")
        self.path = path
        self.line = line


def _fmt(x: float) -> str:
    return format(x, ".17g")


@dataclass(frozen=True)
class LoadReport:
    """What happened while reading an edge list."""

    n: int
    m: int
    duplicate_edges: int
    self_loops: int


def read_edge_list(path) -> tuple[SignedGraph, LoadReport]:
    """Parse a whitespace-separated "u v" edge list into a positive graph.

    Lines starting with '#' and blank lines are skipped. Repeated pairs in
    either direction are deduplicated and self-loops dropped; both are
    counted in the report. Every id mentioned becomes a vertex.
    """
    vertices: set[int] = set()
    edges: set[tuple[int, int]] = set()
    duplicates = 0
    self_loops = 0
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if len(parts) != 2:
                raise ParseError(path, lineno, f"expected 'u v', got {line!r}")
            try:
                u, v = int(parts[0]), int(parts[1])
            except ValueError:
                raise ParseError(path, lineno, f"non-integer vertex id in {line!r}") from None
            if u < 0 or v < 0:
                raise ParseError(path, lineno, "vertex ids must be non-negative")
            vertices.add(u)
            vertices.add(v)
            if u == v:
                self_loops += 1
                continue
            edge = (u, v) if u < v else (v, u)
            if edge in edges:
                duplicates += 1
            else:
                edges.add(edge)
    g = SignedGraph.from_edges(edges, vertices=vertices)
    return g, LoadReport(n=g.n, m=g.m, duplicate_edges=duplicates, self_loops=self_loops)


def read_update_stream(path) -> list[tuple[int, UpdateEvent]]:
    """Parse an update stream into (line number, event) pairs.

    Grammar, one event per line ('#' comments allowed):
        flip u v
        addv v [n1 n2 ...]
        delv v
        query eps
    """
    events: list[tuple[int, UpdateEvent]] = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            op, *args = line.split()
            try:
                if op == "flip":
                    if len(args) != 2:
                        raise ValueError("flip takes exactly two vertex ids")
                    events.append((lineno, Flip(int(args[0]), int(args[1]))))
                elif op == "addv":
                    if not args:
                        raise ValueError("addv needs a vertex id")
                    events.append(
                        (lineno, AddVertex(int(args[0]), tuple(int(a) for a in args[1:])))
                    )
                elif op == "delv":
                    if len(args) != 1:
                        raise ValueError("delv takes exactly one vertex id")
                    events.append((lineno, RemoveVertex(int(args[0]))))
                elif op == "query":
                    if len(args) != 1:
                        raise ValueError("query takes exactly one threshold")
                    eps = float(args[0])
                    if not 0.0 <= eps <= 2.0:
                        raise ValueError(f"threshold {eps} outside [0, 2]")
                    events.append((lineno, Query(eps)))
                else:
                    raise ValueError(f"unknown operation {op!r}")
            except ValueError as exc:
                raise ParseError(path, lineno, str(exc)) from None
    return events


def write_clustering(c: Clustering, path) -> None:
    """One "vertex<TAB>label" line per vertex, ascending by vertex id."""
    with open(path, "w", encoding="utf-8") as fh:
        for v in sorted(c.assignment):
            fh.write(f"{v}\t{c.assignment[v]}\n")


@dataclass
class StatsRow:
    """One schedule point of the measurement table."""

    eps: float
    agree_edges: int
    light_vertices: int
    heavy_vertices: int
    clusters: int
    cost: int
    cc_ms: float | None = None
    icc_ms: float | None = None


def write_stats_csv(rows: list[StatsRow], path) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(STATS_HEADER)
        for r in rows:
            writer.writerow([
                _fmt(r.eps),
                r.agree_edges,
                r.light_vertices,
                r.heavy_vertices,
                r.clusters,
                r.cost,
                "" if r.cc_ms is None else f"{r.cc_ms:.3f}",
                "" if r.icc_ms is None else f"{r.icc_ms:.3f}",
            ])


def write_histogram_csv(values: list[float], stats: DistanceStats, path) -> None:
    """Exact distance histogram: "value,frequency" rows ascending, no
    binning, then a '#'-prefixed summary block."""
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("value,frequency\n")
        run_value: float | None = None
        run = 0
        for v in values:
            if v != run_value:
                if run:
                    fh.write(f"{_fmt(run_value)},{run}\n")
                run_value = v
                run = 0
            run += 1
        if run:
            fh.write(f"{_fmt(run_value)},{run}\n")
        fh.write("# summary\n")
        fh.write(f"# distinct,{stats.distinct}\n")
        if stats.minimum is not None:
            fh.write(f"# min,{_fmt(stats.minimum)}\n")
            fh.write(f"# max,{_fmt(stats.maximum)}\n")
        for i, (value, freq) in enumerate(stats.modes, 1):
            fh.write(f"# mode_{i},{_fmt(value)},{freq}\n")


def snapshot_index(idx: AgreementIndex, path) -> None:
    """One "v: u1,d1 u2,d2 ..." line per vertex, entries in stored order."""
    with open(path, "w", encoding="utf-8") as fh:
        for v in idx.graph.vertices():
            pairs = " ".join(f"{u},{_fmt(d)}" for u, d in idx.entries(v))
            fh.write(f"{v}: {pairs}\n" if pairs else f"{v}:\n")


def load_index(path, g: SignedGraph) -> AgreementIndex:
    """Read a snapshot back and verify it against ``g`` entry by entry.

    Raises ParseError on malformed text and IndexInconsistencyError when
    the snapshot does not describe ``g`` exactly.
    """
    idx = AgreementIndex(g)
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.strip()
            if not line:
                continue
            head, sep, rest = line.partition(":")
            if not sep:
                raise ParseError(path, lineno, "missing ':' after vertex id")
            try:
                v = int(head)
            except ValueError:
                raise ParseError(path, lineno, f"bad vertex id {head!r}") from None
            if v in idx._entries:
                raise ParseError(path, lineno, f"vertex {v} listed twice")
            entries = []
            dist: dict[int, float] = {}
            for token in rest.split():
                u_text, sep, d_text = token.partition(",")
                if not sep:
                    raise ParseError(path, lineno, f"bad entry {token!r}")
                try:
                    u = int(u_text)
                    d = float(d_text)
                except ValueError:
                    raise ParseError(path, lineno, f"bad entry {token!r}") from None
                entries.append((d, u))
                dist[u] = d
            idx._entries[v] = entries
            idx._dist[v] = dist
    try:
        idx.validate()
    except KeyError as exc:
        raise IndexInconsistencyError(f"snapshot references unknown vertex {exc}") from None
    return idx


def sibling_path(path, suffix: str) -> Path:
    p = Path(path)
    return p.with_name(p.stem + suffix)
