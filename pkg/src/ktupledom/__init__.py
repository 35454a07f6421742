"""Minimum k-tuple domination on graphs whose augmented adjacency matrix has
consecutive zeros in every column (C0P-graphs)."""

from .errors import (
    CapExceeded,
    ConstructionFailure,
    NotC0PError,
    StructureViolation,
)
from .graph import (
    BitMatrix,
    Graph,
    augmented_matrix,
    connected_components,
    from_edge_list,
    induced_subgraph,
    is_k_tuple_dominating,
    min_degree,
    universal_vertices,
)
from .oracle import brute_force_c0p, brute_force_gamma
from .recognition import Ordering, find_c0p_ordering, verify_c0p_ordering
from .solver import (
    DominationResult,
    gamma2_core,
    gamma3_core,
    gamma_general_core,
    gamma_ktuple,
    gamma_range,
)
from .structure import (
    C0PStructure,
    IntervalModel,
    build_interval_models,
    build_structure,
    extract_partition,
    max_stable_set,
    stability_number,
)

__version__ = "0.1.0"
