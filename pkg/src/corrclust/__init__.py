"""Index-accelerated correlation clustering of complete signed graphs."""

from .agreement import (
    DistanceStats,
    agree_count,
    distance_multiset,
    in_agreement,
    is_light,
    make_schedule,
    non_agreement,
    schedule_from_values,
)
from .clustering import (
    Clustering,
    DisjointSet,
    cluster_baseline,
    cluster_indexed,
    clustering_cost,
    same_partition,
    sparsified_edges,
)
from .formats import (
    LoadReport,
    ParseError,
    StatsRow,
    load_index,
    read_edge_list,
    read_update_stream,
    snapshot_index,
    write_clustering,
    write_histogram_csv,
    write_stats_csv,
)
from .graph import (
    AddVertex,
    DuplicateVertexError,
    Flip,
    GraphError,
    InvalidEventError,
    NotPositiveEdgeError,
    Query,
    RemoveVertex,
    SignedGraph,
    UnknownVertexError,
    UpdateEvent,
)
from .index import (
    AgreementIndex,
    IndexInconsistencyError,
    StaleIndexError,
    UpdateSummary,
    build_index,
)
from .oracle import oracle_cluster, oracle_non_agreement, oracle_rebuild_index
from .synth import EventFactory, random_graph
from .verify import VerificationReport, run_verification

__version__ = "0.1.0"

__all__ = [
    "AddVertex",
    "AgreementIndex",
    "Clustering",
    "DisjointSet",
    "DistanceStats",
    "DuplicateVertexError",
    "EventFactory",
    "Flip",
    "GraphError",
    "IndexInconsistencyError",
    "InvalidEventError",
    "LoadReport",
    "NotPositiveEdgeError",
    "ParseError",
    "Query",
    "RemoveVertex",
    "SignedGraph",
    "StaleIndexError",
    "StatsRow",
    "UnknownVertexError",
    "UpdateEvent",
    "UpdateSummary",
    "VerificationReport",
    "agree_count",
    "build_index",
    "cluster_baseline",
    "cluster_indexed",
    "clustering_cost",
    "distance_multiset",
    "in_agreement",
    "is_light",
    "load_index",
    "make_schedule",
    "non_agreement",
    "oracle_cluster",
    "oracle_non_agreement",
    "oracle_rebuild_index",
    "random_graph",
    "read_edge_list",
    "read_update_stream",
    "run_verification",
    "same_partition",
    "schedule_from_values",
    "snapshot_index",
    "sparsified_edges",
    "write_clustering",
    "write_histogram_csv",
    "write_stats_csv",
]
