"""Exact location and domination invariants of small graphs and their complements."""

from .canon import automorphism_orbits, canonical_form, canonize, is_isomorphic
from .graph import (
    UNREACHABLE,
    Graph,
    GraphError,
    build_graph,
    complement,
    connectivity,
    diameter,
    distance_matrix,
    find_induced_p4,
    mask_of,
    members,
    metric_vector,
)
from .invariants import (
    InvariantKind,
    InvariantResult,
    chain_report,
    is_dominating,
    is_ld,
    is_locating,
    is_mld,
    min_invariant,
)

__version__ = "0.1.0"

__all__ = [
    "UNREACHABLE",
    "Graph",
    "GraphError",
    "InvariantKind",
    "InvariantResult",
    "automorphism_orbits",
    "build_graph",
    "canonical_form",
    "canonize",
    "chain_report",
    "complement",
    "connectivity",
    "diameter",
    "distance_matrix",
    "find_induced_p4",
    "is_dominating",
    "is_isomorphic",
    "is_ld",
    "is_locating",
    "is_mld",
    "mask_of",
    "members",
    "metric_vector",
    "min_invariant",
]
