"""Maximum matching in RDV graphs from their rooted path representation."""

from ._core import (
    Instance,
    ParseError,
    RayShootIndex,
    adjacency_oracle,
    assign_coordinates,
    bottom_up_order,
    compress_tree,
    crosscheck,
    delayed_greedy,
    delayed_greedy_delta,
    fixture_trampoline,
    gen_dense,
    gen_random,
    greedy_reference,
    intervals_to_rdv,
    is_simple_vertex,
    maximum_matching_oracle,
    oracle_adjacency,
    trampoline_instance,
    validate,
)

__all__ = [
    "Instance",
    "ParseError",
    "RayShootIndex",
    "adjacency_oracle",
    "assign_coordinates",
    "bottom_up_order",
    "compress_tree",
    "crosscheck",
    "delayed_greedy",
    "delayed_greedy_delta",
    "fixture_trampoline",
    "gen_dense",
    "gen_random",
    "greedy_reference",
    "intervals_to_rdv",
    "is_simple_vertex",
    "maximum_matching_oracle",
    "oracle_adjacency",
    "trampoline_instance",
    "validate",
]
