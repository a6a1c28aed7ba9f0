"""Base and motif graphs for the motif task, with family recognizers."""

import random

from graphbench.config.constants import (
    LADDER_BASE_RUNGS,
    MOTIF_TEMPLATES,
    TREE_BASE_SHAPES,
    WHEEL_BASE_NODES,
)
from graphbench.graphs import is_isomorphic, is_tree
from graphbench.models import BaseKind, Graph, MotifKind
from graphbench.rules import find_wheel_hub
from graphbench.utils import SeedLike, as_random

FULL_TREE_BRANCHING = (2, 3)


def motif_template(kind: MotifKind) -> Graph:
    node_count, edges = MOTIF_TEMPLATES[kind.value]
    return Graph(node_count=node_count, edges=edges)


def full_tree(branching: int, depth: int) -> Graph:
    """Perfect k-ary tree in breadth-first numbering, root = 1."""
    if branching < 2 or depth < 1:
        raise ValueError("full trees need branching >= 2 and depth >= 1")
    node_count = (branching ** (depth + 1) - 1) // (branching - 1)
    edges = [((child - 2) // branching + 1, child) for child in range(2, node_count + 1)]
    return Graph.from_edges(node_count, edges)


def ladder(rungs: int) -> Graph:
    """Paths 1..L and L+1..2L joined by rungs (i, L+i)."""
    if rungs < 2:
        raise ValueError("a ladder needs at least 2 rungs")
    edges = [(i, i + 1) for i in range(1, rungs)]
    edges += [(rungs + i, rungs + i + 1) for i in range(1, rungs)]
    edges += [(i, rungs + i) for i in range(1, rungs + 1)]
    return Graph.from_edges(2 * rungs, edges)


def wheel(node_count: int) -> Graph:
    """Hub 1 joined to the cycle 2..n."""
    if node_count < 4:
        raise ValueError("a wheel needs at least 4 nodes")
    rim = list(range(2, node_count + 1))
    edges = [(1, node) for node in rim]
    edges += [(rim[i], rim[(i + 1) % len(rim)]) for i in range(len(rim))]
    return Graph.from_edges(node_count, edges)


def shuffled(graph: Graph, rng: random.Random) -> Graph:
    """Random relabelling of the node ids."""
    mapping = list(graph.nodes)
    rng.shuffle(mapping)
    return graph.relabeled(mapping)


def build_base(
    kind: BaseKind,
    size_class: tuple[int, int] | int | None = None,
    seed: SeedLike = 0,
) -> Graph:
    """Build a base graph of the named family with shuffled node ids.

    Args:
        kind: Base family
        size_class: (branching, depth) for trees, rung count for ladders,
            node count for wheels; None picks the default size (trees
            choose uniformly between the binary and ternary shapes)
        seed: Integer seed or RNG

    Returns:
        A graph recognized by recognize_base as ``kind``
    """
    rng = as_random(seed)
    if kind == BaseKind.TREE:
        if size_class is None:
            size_class = rng.choice(TREE_BASE_SHAPES)
        if not isinstance(size_class, tuple):
            raise ValueError("tree bases take a (branching, depth) size class")
        graph = full_tree(*size_class)
    else:
        default = LADDER_BASE_RUNGS if kind == BaseKind.LADDER else WHEEL_BASE_NODES
        size = default if size_class is None else size_class
        if not isinstance(size, int):
            raise ValueError(f"{kind.value} bases take an integer size class")
        graph = ladder(size) if kind == BaseKind.LADDER else wheel(size)
    return shuffled(graph, rng)


def is_full_tree(graph: Graph) -> bool:
    """Tree whose root has k children and every other internal node k children, k in {2, 3}."""
    if not is_tree(graph):
        return False
    degrees = list(graph.degrees().values())
    for k in FULL_TREE_BRANCHING:
        if degrees.count(k) == 1 and all(degree in (1, k, k + 1) for degree in degrees):
            return True
    return False


def is_ladder(graph: Graph) -> bool:
    n = graph.node_count
    if n < 4 or n % 2 or graph.edge_count != 3 * n // 2 - 2:
        return False
    return is_isomorphic(graph, ladder(n // 2))


def is_wheel(graph: Graph) -> bool:
    return find_wheel_hub(graph) is not None


_BASE_RECOGNIZERS = {
    BaseKind.TREE: is_full_tree,
    BaseKind.LADDER: is_ladder,
    BaseKind.WHEEL: is_wheel,
}


def recognize_base(graph: Graph) -> BaseKind | None:
    """The single base family the graph belongs to, or None."""
    matches = [kind for kind, recognizer in _BASE_RECOGNIZERS.items() if recognizer(graph)]
    return matches[0] if len(matches) == 1 else None


def recognize_motif(graph: Graph) -> MotifKind | None:
    """The single motif template the graph is isomorphic to, or None."""
    if graph.node_count != 5:
        return None
    matches = [kind for kind in MotifKind if is_isomorphic(graph, motif_template(kind))]
    return matches[0] if len(matches) == 1 else None
