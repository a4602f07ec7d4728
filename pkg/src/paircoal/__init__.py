"""Exact toolkit for paired coalition partitions in small graphs."""

from .coalition import (
    Partition,
    PartitionCheck,
    PartitionError,
    PcResult,
    SearchBudgetExceeded,
    SearchStats,
    all_pc_partitions,
    are_pc_partners,
    coalition_graph,
    is_pc_partition,
    pc_number,
    pc_number_oracle,
)
from .domination import is_dominating, is_paired_dominating, paired_domination_number
from .graphs import (
    Graph,
    GraphError,
    are_isomorphic,
    canonical_form,
    canonical_key,
    classify_vertices,
    connected_components,
    edges_between,
    girth,
    induced_subgraph,
    is_connected,
    mask_of,
    structure_class,
    vertices_of,
)
from .matching import Matching, has_perfect_matching, maximum_matching

__all__ = [
    "Graph",
    "GraphError",
    "Matching",
    "Partition",
    "PartitionCheck",
    "PartitionError",
    "PcResult",
    "SearchBudgetExceeded",
    "SearchStats",
    "all_pc_partitions",
    "are_isomorphic",
    "are_pc_partners",
    "canonical_form",
    "canonical_key",
    "classify_vertices",
    "coalition_graph",
    "connected_components",
    "edges_between",
    "girth",
    "has_perfect_matching",
    "induced_subgraph",
    "is_connected",
    "is_dominating",
    "is_paired_dominating",
    "is_pc_partition",
    "mask_of",
    "maximum_matching",
    "paired_domination_number",
    "pc_number",
    "pc_number_oracle",
    "structure_class",
    "vertices_of",
]

__version__ = "0.1.0"
