"""Exact k-colouring by DSATUR-ordered backtracking."""

from graphbench.models import Graph


def find_k_coloring(graph: Graph, k: int) -> dict[int, int] | None:
    """Find a proper colouring with colours 0..k-1, or None if none exists.

    Vertices are coloured in saturation order (most distinct neighbour
    colours first, ties by degree then id); a fresh colour is only opened
    once per branch, which removes colour-permutation symmetry.
    """
    if k <= 0:
        raise ValueError("k should be greater than 0")
    adjacency = graph.adjacency()
    coloring: dict[int, int] = {}

    def saturation(node: int) -> int:
        return len({coloring[u] for u in adjacency[node] if u in coloring})

    def next_node() -> int:
        uncolored = (node for node in graph.nodes if node not in coloring)
        return max(uncolored, key=lambda node: (saturation(node), len(adjacency[node]), -node))

    def extend(used: int) -> bool:
        if len(coloring) == graph.node_count:
            return True
        node = next_node()
        forbidden = {coloring[u] for u in adjacency[node] if u in coloring}
        for color in range(used):
            if color not in forbidden:
                coloring[node] = color
                if extend(used):
                    return True
        if used < k:
            coloring[node] = used
            if extend(used + 1):
                return True
        coloring.pop(node, None)
        return False

    return dict(coloring) if extend(0) else None


def chromatic_number(graph: Graph) -> int:
    """Smallest k admitting a proper colouring."""
    k = 1
    while find_k_coloring(graph, k) is None:
        k += 1
    return k
