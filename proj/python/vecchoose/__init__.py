"""Orthogonal vector choices for subspace assignments over GF(p) and Q."""

from ._core import (
    Assignment,
    Field,
    Graph,
    Reduction,
    VecchooseError,
    adversarial_assignment,
    amplify_to_k,
    check_k_partitioned,
    complete_bipartite_graph,
    complete_graph,
    cycle_bad_assignment,
    cycle_graph,
    find_choice,
    is_bipartite,
    path_graph,
    projective_plane_partition,
    real_cycle_choice,
    verify_choice,
)

__all__ = [
    "Assignment",
    "Field",
    "Graph",
    "Reduction",
    "VecchooseError",
    "adversarial_assignment",
    "amplify_to_k",
    "check_k_partitioned",
    "complete_bipartite_graph",
    "complete_graph",
    "cycle_bad_assignment",
    "cycle_graph",
    "find_choice",
    "is_bipartite",
    "path_graph",
    "projective_plane_partition",
    "real_cycle_choice",
    "verify_choice",
]
