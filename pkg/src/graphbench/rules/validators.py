"""Exact validators for the structural rules."""

from collections.abc import Callable

import networkx as nx
import structlog

from graphbench.graphs import connected_components, induced_subgraph, is_connected, is_cycle, is_tree
from graphbench.models import Graph, RuleKind, RuleSpec, ShapeLabel, ValidityReport
from graphbench.rules.bipartite import find_bipartition, two_color_components
from graphbench.rules.coloring import find_k_coloring

logger = structlog.get_logger(__name__)


def _node_count_mismatch(spec: RuleSpec, graph: Graph) -> ValidityReport | None:
    if spec.n is not None and graph.node_count != spec.n:
        return ValidityReport.fail("node_count_mismatch")
    return None


def _validate_tree(spec: RuleSpec, graph: Graph) -> ValidityReport:
    if graph.edge_count != graph.node_count - 1:
        return ValidityReport.fail("edge_count_mismatch")
    if not is_connected(graph):
        return ValidityReport.fail("disconnected")
    return ValidityReport.ok()


def _validate_cycle(spec: RuleSpec, graph: Graph) -> ValidityReport:
    if not is_cycle(graph):
        return ValidityReport.fail("not_a_cycle")
    return ValidityReport.ok()


def _validate_components(spec: RuleSpec, graph: Graph) -> ValidityReport:
    components = connected_components(graph)
    witness = {"components": [sorted(component) for component in components]}
    if len(components) != spec.k:
        return ValidityReport.fail("component_count_mismatch", witness)
    return ValidityReport.ok(witness)


def _validate_planar(spec: RuleSpec, graph: Graph) -> ValidityReport:
    if graph.edge_count != spec.m:
        return ValidityReport.fail("edge_count_mismatch")
    planar, certificate = nx.check_planarity(graph.to_networkx(), counterexample=True)
    if not planar:
        obstruction = sorted(tuple(sorted(edge)) for edge in certificate.edges())
        return ValidityReport.fail("nonplanar", {"kuratowski_edges": obstruction})
    return ValidityReport.ok()


def _validate_k_regular(spec: RuleSpec, graph: Graph) -> ValidityReport:
    if any(degree != spec.k for degree in graph.degrees().values()):
        return ValidityReport.fail("degree_mismatch")
    return ValidityReport.ok()


def find_wheel_hub(graph: Graph) -> int | None:
    """A node adjacent to all others whose removal leaves a cycle, if any."""
    n = graph.node_count
    if n < 4 or graph.edge_count != 2 * (n - 1):
        return None
    for hub, degree in graph.degrees().items():
        if degree != n - 1:
            continue
        rim = induced_subgraph(graph, (node for node in graph.nodes if node != hub))
        if is_cycle(rim):
            return hub
    return None


def _validate_wheel(spec: RuleSpec, graph: Graph) -> ValidityReport:
    hub = find_wheel_hub(graph)
    if hub is None:
        return ValidityReport.fail("no_hub")
    return ValidityReport.ok({"hub": hub})


def _validate_bipartite(spec: RuleSpec, graph: Graph) -> ValidityReport:
    assert spec.part_sizes is not None
    if two_color_components(graph) is None:
        return ValidityReport.fail("not_bipartite")
    parts = find_bipartition(graph, spec.part_sizes[0])
    if parts is None:
        return ValidityReport.fail("part_sizes_unreachable")
    part_u, part_v = parts
    return ValidityReport.ok({"U": part_u, "V": part_v})


def _validate_k_color(spec: RuleSpec, graph: Graph) -> ValidityReport:
    assert spec.k is not None
    if spec.enforce_edge_count and graph.edge_count != spec.m:
        return ValidityReport.fail("edge_count_mismatch")
    coloring = find_k_coloring(graph, spec.k)
    if coloring is None:
        return ValidityReport.fail("not_k_colorable")
    return ValidityReport.ok({"coloring": [coloring[node] for node in graph.nodes]})


def component_shape(graph: Graph) -> ShapeLabel:
    """Tree, Cycle or Neither for a single graph."""
    if is_tree(graph):
        return ShapeLabel.TREE
    if is_cycle(graph):
        return ShapeLabel.CYCLE
    return ShapeLabel.NEITHER


def _validate_two_components(spec: RuleSpec, graph: Graph) -> ValidityReport:
    assert spec.component_kinds is not None and spec.size_range is not None
    components = connected_components(graph)
    if len(components) != 2:
        return ValidityReport.fail("component_count_mismatch")
    shapes = sorted(
        (component_shape(induced_subgraph(graph, component)) for component in components),
        key=lambda shape: shape.value,
    )
    expected = sorted(spec.component_kinds, key=lambda shape: shape.value)
    witness = {"components": [sorted(component) for component in components]}
    if shapes != expected:
        return ValidityReport.fail("component_kinds_mismatch", witness)
    if spec.strict_sizes:
        low, high = spec.size_range
        if any(not low <= len(component) <= high for component in components):
            return ValidityReport.fail("component_size_out_of_range", witness)
    return ValidityReport.ok(witness)


_VALIDATORS: dict[RuleKind, Callable[[RuleSpec, Graph], ValidityReport]] = {
    RuleKind.TREE: _validate_tree,
    RuleKind.CYCLE: _validate_cycle,
    RuleKind.COMPONENTS: _validate_components,
    RuleKind.PLANAR: _validate_planar,
    RuleKind.K_REGULAR: _validate_k_regular,
    RuleKind.WHEEL: _validate_wheel,
    RuleKind.BIPARTITE: _validate_bipartite,
    RuleKind.K_COLOR: _validate_k_color,
    RuleKind.TWO_COMPONENTS: _validate_two_components,
}


def validate_rule(spec: RuleSpec, graph: Graph) -> ValidityReport:
    """Check whether a graph satisfies a rule.

    Args:
        spec: Rule and parameters
        graph: Candidate graph

    Returns:
        ValidityReport with a reason code and, when applicable, a witness

    Raises:
        SpecMismatch: If the rule parameters are incoherent
    """
    spec.check_coherent()
    mismatch = _node_count_mismatch(spec, graph)
    if mismatch is not None:
        return mismatch
    return _VALIDATORS[spec.kind](spec, graph)
