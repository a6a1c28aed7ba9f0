"""Bipartitions with prescribed class sizes."""

import networkx as nx

from graphbench.models import Graph


def two_color_components(graph: Graph) -> list[tuple[list[int], list[int]]] | None:
    """2-colour each component; None when some component has an odd cycle.

    Within a component the side holding its smallest node comes first.
    """
    nx_graph = graph.to_networkx()
    if not nx.is_bipartite(nx_graph):
        return None
    sides: list[tuple[list[int], list[int]]] = []
    for component in sorted(nx.connected_components(nx_graph), key=min):
        top, bottom = nx.bipartite.sets(nx_graph.subgraph(component))
        if min(component) not in top:
            top, bottom = bottom, top
        sides.append((sorted(top), sorted(bottom)))
    return sides


def find_bipartition(graph: Graph, size_u: int) -> tuple[list[int], list[int]] | None:
    """Split nodes into independent classes U, V with |U| = size_u.

    Each component contributes one side to U; a subset-sum over the
    component side sizes decides which. Isolated nodes are components of
    sizes (1, 0) and so may land on either side.
    """
    sides = two_color_components(graph)
    if sides is None or not 0 <= size_u <= graph.node_count:
        return None

    # reachable[i] = sums achievable with the first i components
    reachable: list[set[int]] = [{0}]
    for first, second in sides:
        previous = reachable[-1]
        reachable.append({s + len(first) for s in previous} | {s + len(second) for s in previous})
    if size_u not in reachable[-1]:
        return None

    part_u: list[int] = []
    part_v: list[int] = []
    target = size_u
    for index in range(len(sides) - 1, -1, -1):
        first, second = sides[index]
        if target - len(first) in reachable[index]:
            part_u.extend(first)
            part_v.extend(second)
            target -= len(first)
        else:
            part_u.extend(second)
            part_v.extend(first)
            target -= len(second)
    return sorted(part_u), sorted(part_v)
