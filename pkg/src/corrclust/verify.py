"""Randomized cross-validation of the fast paths against the oracles.

Each seeded trial draws a random graph, checks the closed-form distance
against the symmetric-difference oracle on every edge, compares the three
clustering routes over a schedule, then replays a random update stream
while comparing the maintained index to a fresh rebuild after every event
and the partitions once more at the end.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from random import Random
from typing import Callable

from .agreement import make_schedule, non_agreement
from .clustering import cluster_baseline, cluster_indexed, same_partition
from .graph import AddVertex, Flip, RemoveVertex, SignedGraph
from .index import build_index
from .oracle import oracle_cluster, oracle_non_agreement, oracle_rebuild_index
from .synth import EventFactory, random_graph

_DENSITIES = (0.05, 0.15, 0.3, 0.5)


@dataclass
class VerificationReport:
    seed: int
    trials: int
    edges_checked: int = 0
    partitions_checked: int = 0
    events_checked: int = 0
    trial_log: list[str] = field(default_factory=list)
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def _first_index_diff(maintained, reference) -> str:
    for v in sorted(set(maintained._entries) | set(reference._entries)):
        got = maintained._entries.get(v)
        want = reference._entries.get(v)
        if got != want:
            return f"vertex {v}: maintained {got!r} != rebuilt {want!r}"
    return "indices differ"


def run_verification(seed: int = 0, trials: int = 25,
                     events_per_trial: int = 40,
                     log: Callable[[str], None] | None = None,
                     _inject_fault: bool = False) -> VerificationReport:
    """Run the full randomized check suite; deterministic for a fixed seed.

    ``_inject_fault`` is a self-test hook: it corrupts one maintained entry
    in the first trial so the harness must produce a counterexample.
    """
    report = VerificationReport(seed=seed, trials=trials)
    master = Random(seed)
    for t in range(trials):
        rng = Random(master.randrange(2**63))
        n = rng.randrange(8, 61)
        density = rng.choice(_DENSITIES)
        g = random_graph(n, density, rng)
        if g.m == 0:
            g = random_graph(n, 0.3, rng)
        line = f"trial {t + 1}/{trials}: n={g.n} m={g.m} density={density}"
        report.trial_log.append(line)
        if log:
            log(line)

        for u, v in g.edges():
            fast = non_agreement(g, u, v)
            slow = oracle_non_agreement(g, u, v)
            report.edges_checked += 1
            if fast != slow:
                report.failures.append(
                    f"trial {t + 1}: distance mismatch on edge ({u}, {v}): "
                    f"{fast!r} != oracle {slow!r}"
                )
                return report

        idx = build_index(g)
        if not _check_partitions(g, idx, t, report):
            return report

        factory = EventFactory(g, rng)
        if _inject_fault and t == 0:
            victim = next(v for v in g.vertices() if idx._entries[v])
            d, u = idx._entries[victim][0]
            idx._entries[victim][0] = (d + 0.125, u)
            idx._dist[victim][u] = d + 0.125
        for _ in range(events_per_trial):
            event = factory.next_event()
            if isinstance(event, Flip):
                idx.flip_edge(event.u, event.v)
            elif isinstance(event, AddVertex):
                idx.add_vertex(event.v, event.neighbors)
            elif isinstance(event, RemoveVertex):
                idx.remove_vertex(event.v)
            reference = oracle_rebuild_index(g)
            report.events_checked += 1
            if idx != reference:
                report.failures.append(
                    f"trial {t + 1}: index drift after {event!r}: "
                    + _first_index_diff(idx, reference)
                )
                return report
        if g.m and not _check_partitions(g, idx, t, report):
            return report
    return report


def _check_partitions(g: SignedGraph, idx, trial: int,
                      report: VerificationReport) -> bool:
    if g.m == 0:
        return True
    for eps in make_schedule(g, 9):
        baseline = cluster_baseline(g, eps)
        indexed = cluster_indexed(idx, eps)
        naive = oracle_cluster(g, eps)
        report.partitions_checked += 1
        if not same_partition(baseline, indexed):
            report.failures.append(
                f"trial {trial + 1}: indexed partition differs from baseline "
                f"at eps={eps!r} (n={g.n}, m={g.m})"
            )
            return False
        if not same_partition(baseline, naive):
            report.failures.append(
                f"trial {trial + 1}: baseline differs from naive oracle "
                f"at eps={eps!r} (n={g.n}, m={g.m})"
            )
            return False
    return True
