"""Graph sources, batch verification and extremal search."""

from .enumeration import CONNECTED_COUNTS, GRAPH_COUNTS, count_graphs, enumerate_graphs, graph6_layer
from .extremal import OBJECTIVES, ExtremalResult, exhaustive, local_search, parse_constraints
from .hypercube import HypercubeResult, edge_boundary, hypercube_lambda
from .sources import GraphSource, enum_source, family_source, graph6_source, iter_graphs, tree_source
from .trees import TREE_COUNTS, free_trees, level_sequences
from .verify import ConjectureSpec, VerificationReport, parse_conjecture_list, verify

__all__ = [
    "CONNECTED_COUNTS", "GRAPH_COUNTS", "OBJECTIVES", "TREE_COUNTS",
    "ConjectureSpec", "ExtremalResult", "GraphSource", "HypercubeResult", "VerificationReport",
    "count_graphs", "edge_boundary", "enum_source", "enumerate_graphs", "exhaustive", "family_source",
    "free_trees", "graph6_layer", "graph6_source", "hypercube_lambda", "iter_graphs", "level_sequences",
    "local_search", "parse_conjecture_list", "parse_constraints", "tree_source", "verify",
]
