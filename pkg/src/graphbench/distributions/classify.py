"""Label model outputs under the three distribution tasks."""

import networkx as nx
import structlog

from graphbench.distributions.templates import recognize_base, recognize_motif
from graphbench.graphs import connected_components, induced_subgraph
from graphbench.models import (
    BaseKind,
    DistributionTask,
    Graph,
    MotifKind,
    ShapeLabel,
    StructureLabel,
)
from graphbench.rules import component_shape

logger = structlog.get_logger(__name__)

MOTIF_SIZE = 5


def _shape(graph: Graph, size_range: tuple[int, int] | None) -> ShapeLabel:
    shape = component_shape(graph)
    if size_range is not None and not size_range[0] <= graph.node_count <= size_range[1]:
        return ShapeLabel.NEITHER
    return shape


def _classify_union(graph: Graph, size_range: tuple[int, int] | None) -> StructureLabel:
    components = connected_components(graph)
    if len(components) != 2:
        return StructureLabel(task=DistributionTask.UNION_OF_COMPONENTS)
    shapes = [_shape(induced_subgraph(graph, component), size_range) for component in components]
    if ShapeLabel.NEITHER in shapes:
        return StructureLabel(task=DistributionTask.UNION_OF_COMPONENTS)
    first, second = sorted(shapes, key=lambda shape: shape.value)
    return StructureLabel(task=DistributionTask.UNION_OF_COMPONENTS, components=(first, second))


def motif_decompositions(graph: Graph) -> list[tuple[BaseKind, MotifKind, tuple[int, ...]]]:
    """Every (base, motif, motif nodes) split across a single bridge edge."""
    network = graph.to_networkx()
    found: list[tuple[BaseKind, MotifKind, tuple[int, ...]]] = []
    for u, v in list(nx.bridges(network)):
        network.remove_edge(u, v)
        sides = [nx.node_connected_component(network, u), nx.node_connected_component(network, v)]
        network.add_edge(u, v)
        for motif_side in sides:
            if len(motif_side) != MOTIF_SIZE:
                continue
            base_side = set(graph.nodes) - motif_side
            motif = recognize_motif(induced_subgraph(graph, motif_side))
            if motif is None:
                continue
            base = recognize_base(induced_subgraph(graph, base_side))
            if base is not None:
                found.append((base, motif, tuple(sorted(motif_side))))
    return found


def _classify_motif(graph: Graph) -> StructureLabel:
    decompositions = motif_decompositions(graph)
    labels = {(base, motif) for base, motif, _ in decompositions}
    if len(labels) != 1:
        if len(labels) > 1:
            logger.debug("Conflicting motif decompositions", labels=sorted(labels))
        return StructureLabel(task=DistributionTask.MOTIF)
    base, motif, nodes = min(decompositions, key=lambda item: item[2])
    return StructureLabel(task=DistributionTask.MOTIF, base=base, motif=motif, motif_nodes=nodes)


def classify(
    task: DistributionTask,
    graph: Graph,
    size_range: tuple[int, int] | None = None,
) -> StructureLabel:
    """Assign the task's structure label to one graph.

    Args:
        task: Distribution task whose labels apply
        graph: Graph to classify
        size_range: When given, trees and cycles outside this node-count
            range are not recognized (tasks TreesOrCycles and UnionOfComponents)

    Returns:
        StructureLabel; ``recognized`` is False when no label applies
    """
    if task == DistributionTask.TREES_OR_CYCLES:
        return StructureLabel(task=task, shape=_shape(graph, size_range))
    if task == DistributionTask.UNION_OF_COMPONENTS:
        return _classify_union(graph, size_range)
    return _classify_motif(graph)
