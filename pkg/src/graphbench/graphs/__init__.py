from graphbench.graphs.canonical import canonical_key, is_isomorphic
from graphbench.graphs.structure import (
    connected_components,
    disjoint_union,
    induced_subgraph,
    is_connected,
    is_cycle,
    is_tree,
)
from graphbench.graphs.text import (
    GraphMatch,
    parse_graph_text,
    read_graph_file,
    scan_graphs,
    serialize_graph,
    write_graph_file,
)

__all__ = [
    "GraphMatch",
    "canonical_key",
    "connected_components",
    "disjoint_union",
    "induced_subgraph",
    "is_connected",
    "is_cycle",
    "is_isomorphic",
    "is_tree",
    "parse_graph_text",
    "read_graph_file",
    "scan_graphs",
    "serialize_graph",
    "write_graph_file",
]
