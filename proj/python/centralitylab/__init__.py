"""Node centrality measures, Kendall tau analysis and SIR spreading."""

from ._core import (
    Error,
    Graph,
    InvalidArgument,
    ParseError,
    __version__,
    compute_measure,
    epidemic_threshold,
    giant_component,
    graph_stats,
    is_connected,
    kendall_tau,
    measure_names,
    node_influence,
    rank_nodes,
    run_corpus,
    seedset_infection_rate,
    simulate,
)

__all__ = [
    "Error",
    "Graph",
    "InvalidArgument",
    "ParseError",
    "__version__",
    "compute_measure",
    "epidemic_threshold",
    "giant_component",
    "graph_stats",
    "is_connected",
    "kendall_tau",
    "measure_names",
    "node_influence",
    "rank_nodes",
    "run_corpus",
    "seedset_infection_rate",
    "simulate",
]
