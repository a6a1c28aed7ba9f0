"""Canonical keys and isomorphism for small graphs.

Each connected component is labelled by colour refinement followed by
individualization backtracking; the key is the largest adjacency code over
all leaves of the search tree. Vertices that are twins of an already
explored vertex are skipped, since swapping twins is an automorphism that
fixes the current colouring.
"""

from functools import lru_cache

import structlog

from graphbench.config.constants import MAX_ISOMORPHISM_NODES
from graphbench.errors import SizeLimitExceeded
from graphbench.graphs.structure import connected_components
from graphbench.models import Graph

logger = structlog.get_logger(__name__)

Code = tuple[int, ...]


def _refine(neighbours: list[list[int]], colours: list[int]) -> list[int]:
    """Refine to the coarsest equitable colouring, preserving the existing order of colours."""
    count = len(set(colours))
    while True:
        signatures = [
            (colours[v], tuple(sorted(colours[u] for u in neighbours[v])))
            for v in range(len(neighbours))
        ]
        ranking = {signature: rank for rank, signature in enumerate(sorted(set(signatures)))}
        refined = [ranking[signature] for signature in signatures]
        if len(ranking) == count:
            return refined
        colours, count = refined, len(ranking)


def _leaf_code(neighbours: list[list[int]], colours: list[int]) -> Code:
    rows = [0] * len(neighbours)
    for v, adjacent in enumerate(neighbours):
        mask = 0
        for u in adjacent:
            mask |= 1 << colours[u]
        rows[colours[v]] = mask
    return tuple(rows)


def _are_twins(neighbour_sets: list[set[int]], u: int, w: int) -> bool:
    return neighbour_sets[u] - {w} == neighbour_sets[w] - {u}


def _search(neighbours: list[list[int]], neighbour_sets: list[set[int]], colours: list[int]) -> Code:
    colours = _refine(neighbours, colours)
    size = len(neighbours)
    cells: dict[int, list[int]] = {}
    for v, colour in enumerate(colours):
        cells.setdefault(colour, []).append(v)
    if len(cells) == size:
        return _leaf_code(neighbours, colours)

    target_colour, target = min(
        ((colour, members) for colour, members in cells.items() if len(members) > 1),
        key=lambda item: (len(item[1]), item[0]),
    )
    best: Code | None = None
    explored: list[int] = []
    for v in target:
        if any(_are_twins(neighbour_sets, v, u) for u in explored):
            continue
        explored.append(v)
        individualized = [2 * colour for colour in colours]
        for member in target:
            if member != v:
                individualized[member] = 2 * target_colour + 1
        code = _search(neighbours, neighbour_sets, individualized)
        if best is None or code > best:
            best = code
    assert best is not None
    return best


def _component_key(graph: Graph, nodes: set[int]) -> bytes:
    ordered = sorted(nodes)
    index = {node: i for i, node in enumerate(ordered)}
    neighbours: list[list[int]] = [[] for _ in ordered]
    for u, v in graph.edges:
        if u in index and v in index:
            neighbours[index[u]].append(index[v])
            neighbours[index[v]].append(index[u])
    neighbour_sets = [set(adjacent) for adjacent in neighbours]
    initial = [len(adjacent) for adjacent in neighbours]
    code = _search(neighbours, neighbour_sets, initial)

    width = (len(ordered) + 7) // 8
    return len(ordered).to_bytes(2, "big") + b"".join(
        row.to_bytes(width, "big") for row in code
    )


@lru_cache(maxsize=8192)
def _cached_key(graph: Graph) -> bytes:
    component_keys = sorted(
        _component_key(graph, component) for component in connected_components(graph)
    )
    parts = [graph.node_count.to_bytes(2, "big")]
    for key in component_keys:
        parts.append(len(key).to_bytes(4, "big"))
        parts.append(key)
    return b"".join(parts)


def canonical_key(graph: Graph, limit: int = MAX_ISOMORPHISM_NODES) -> bytes:
    """Byte string equal for two graphs exactly when they are isomorphic.

    Raises:
        SizeLimitExceeded: If the graph has more than ``limit`` nodes
    """
    if graph.node_count > limit:
        raise SizeLimitExceeded(
            f"graph with {graph.node_count} nodes exceeds the {limit}-node limit",
            field="node_count",
        )
    return _cached_key(graph)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    """Whether an edge-preserving bijection between the node sets exists.

    Raises:
        SizeLimitExceeded: If either graph exceeds the node limit
    """
    for graph in (g, h):
        if graph.node_count > MAX_ISOMORPHISM_NODES:
            raise SizeLimitExceeded(
                f"graph with {graph.node_count} nodes exceeds the "
                f"{MAX_ISOMORPHISM_NODES}-node limit",
                field="node_count",
            )
    if g.node_count != h.node_count or g.edge_count != h.edge_count:
        return False
    if sorted(g.degrees().values()) != sorted(h.degrees().values()):
        return False
    return canonical_key(g) == canonical_key(h)
