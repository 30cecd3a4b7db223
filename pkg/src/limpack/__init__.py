"""Exact limited-packing invariants and a theorem-verification harness."""

from .core import (
    CapExceededError,
    Graph,
    SearchBudgetExceeded,
    build_graph,
    diameter,
    induced_subgraph,
    is_connected,
    is_star,
    is_tree,
    min_internal_degree,
    remove_isolated,
)
from .solvers import (
    OptResult,
    brute_force_oracle,
    enumerate_optimal_sets,
    is_k_limited_packing,
    is_k_total_limited_packing,
    max_limited_packing,
    min_dominating,
)
from .partition import Partition, greedy_partition, is_klp_partition, partition_number

__version__ = "0.1.0"

__all__ = [
    "CapExceededError",
    "Graph",
    "OptResult",
    "Partition",
    "SearchBudgetExceeded",
    "__version__",
    "brute_force_oracle",
    "build_graph",
    "diameter",
    "enumerate_optimal_sets",
    "greedy_partition",
    "induced_subgraph",
    "is_connected",
    "is_k_limited_packing",
    "is_k_total_limited_packing",
    "is_klp_partition",
    "is_star",
    "is_tree",
    "max_limited_packing",
    "min_dominating",
    "min_internal_degree",
    "partition_number",
    "remove_isolated",
]
