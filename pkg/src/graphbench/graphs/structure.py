"""Connectivity and simple shape predicates."""

from collections.abc import Iterable

import networkx as nx

from graphbench.models import Graph


def connected_components(graph: Graph) -> list[set[int]]:
    """Partition nodes into connected components, ordered by smallest node id."""
    return sorted(nx.connected_components(graph.to_networkx()), key=min)


def is_connected(graph: Graph) -> bool:
    return bool(nx.is_connected(graph.to_networkx()))


def induced_subgraph(graph: Graph, nodes: Iterable[int]) -> Graph:
    """Induced subgraph relabelled 1..k following ascending original ids."""
    ordered = sorted(nodes)
    position = {node: index for index, node in enumerate(ordered, 1)}
    edges = [
        (position[u], position[v]) for u, v in graph.edges if u in position and v in position
    ]
    return Graph.from_edges(len(ordered), edges)


def disjoint_union(*graphs: Graph) -> Graph:
    """Place graphs side by side, shifting ids of each later graph."""
    offset = 0
    edges: list[tuple[int, int]] = []
    for graph in graphs:
        edges.extend((u + offset, v + offset) for u, v in graph.edges)
        offset += graph.node_count
    return Graph.from_edges(offset, edges)


def is_tree(graph: Graph) -> bool:
    return bool(nx.is_tree(graph.to_networkx()))


def is_cycle(graph: Graph) -> bool:
    """Connected, at least 3 nodes, every degree equal to 2."""
    if graph.node_count < 3 or graph.edge_count != graph.node_count:
        return False
    return all(degree == 2 for degree in graph.degrees().values()) and is_connected(graph)
