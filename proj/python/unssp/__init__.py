"""Universal near-shortest simple paths: enumeration, complete sets, LP export."""

from ._unssp import (
    Graph,
    GraphParseError,
    SizeGateError,
    UnsspError,
    emit_nspip,
    emit_unspip,
    enumerate_paths,
    gen_binary_doubling,
    gen_random,
    gen_triplet_chain,
    interval_partition,
    minimal_complete_set,
    next_usp,
    next_usp_subsets,
    representatives,
    solve,
    universal_value,
)

__all__ = [
    "Graph",
    "GraphParseError",
    "SizeGateError",
    "UnsspError",
    "emit_nspip",
    "emit_unspip",
    "enumerate_paths",
    "gen_binary_doubling",
    "gen_random",
    "gen_triplet_chain",
    "interval_partition",
    "minimal_complete_set",
    "next_usp",
    "next_usp_subsets",
    "representatives",
    "solve",
    "universal_value",
]
