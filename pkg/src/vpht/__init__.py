"""Verbose persistent homology transforms of vertical graphs.

Graphs live on collinear vertices ordered by height; the transform pairs
each graph with its verbose persistence diagrams in the two informative
directions.  The package builds the diagrams, serializes and hashes them,
searches whole universes for signature collisions, and certifies pairs by
partitioning their oriented union into alternating cycles.
"""

from __future__ import annotations

from .graphs import (
    DegreeProfile,
    GraphError,
    MAX_VERTICES,
    OrientedUnion,
    TooManyVerticesError,
    VertexCountMismatchError,
    VerticalGraph,
    VphtError,
    all_pairs,
    component_count,
    degree_profile,
    edges_to_mask,
    enumerate_graphs,
    graph_from_json,
    graph_to_json,
    make_vertical_graph,
    mask_to_edges,
    mirror,
    oriented_union,
)
from .persistence import (
    Direction,
    Filtration,
    INF,
    VerboseDiagram,
    VphtSignature,
    build_filtration,
    compute_verbose_diagram,
    diagram_to_json,
    fnv1a,
    hash_signature,
    serialize_signature,
    signature_from_blob,
    signatures_equal,
    vpht_signature,
)
from .cycles import (
    AlternatingCycle,
    CyclePartition,
    UnsortedTupleError,
    compare_partitions,
    cycle_dfs,
    find_partition,
    find_partition_single,
    minimal_partition,
    minimal_partition_single,
    partition_to_json,
)
from .classify import (
    CycleNotInUnionError,
    InvalidPartitionError,
    PairVerdict,
    TypeGResult,
    certify_pair,
    duplicate_cycle,
    is_special_type_g,
    is_type_g,
    random_special_type_g,
    split_type_g,
    verdict_to_json,
)
from .search import (
    CollisionSet,
    EmptyResultWarning,
    MetricsInconsistentError,
    SetMetrics,
    UnknownMetricError,
    colliding_graphs,
    collision_sets,
    compute_metrics,
    filter_sort,
    set_to_json,
)

__version__ = "0.1.0"

__all__ = [
    "AlternatingCycle",
    "CollisionSet",
    "CycleNotInUnionError",
    "CyclePartition",
    "DegreeProfile",
    "Direction",
    "EmptyResultWarning",
    "Filtration",
    "GraphError",
    "INF",
    "InvalidPartitionError",
    "MAX_VERTICES",
    "MetricsInconsistentError",
    "OrientedUnion",
    "PairVerdict",
    "SetMetrics",
    "TooManyVerticesError",
    "TypeGResult",
    "UnknownMetricError",
    "UnsortedTupleError",
    "VertexCountMismatchError",
    "VerboseDiagram",
    "VerticalGraph",
    "VphtError",
    "VphtSignature",
    "all_pairs",
    "certify_pair",
    "colliding_graphs",
    "collision_sets",
    "compare_partitions",
    "component_count",
    "compute_metrics",
    "compute_verbose_diagram",
    "build_filtration",
    "cycle_dfs",
    "degree_profile",
    "diagram_to_json",
    "duplicate_cycle",
    "edges_to_mask",
    "enumerate_graphs",
    "filter_sort",
    "find_partition",
    "find_partition_single",
    "fnv1a",
    "graph_from_json",
    "graph_to_json",
    "hash_signature",
    "is_special_type_g",
    "is_type_g",
    "make_vertical_graph",
    "mask_to_edges",
    "minimal_partition",
    "minimal_partition_single",
    "mirror",
    "oriented_union",
    "partition_to_json",
    "random_special_type_g",
    "serialize_signature",
    "set_to_json",
    "signature_from_blob",
    "signatures_equal",
    "split_type_g",
    "verdict_to_json",
    "vpht_signature",
]
