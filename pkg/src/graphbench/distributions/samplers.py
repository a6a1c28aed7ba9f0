"""Seeded samplers for the distribution tasks' input sets."""

import random

import structlog

from graphbench.distributions.templates import build_base, motif_template, shuffled
from graphbench.graphs import disjoint_union
from graphbench.models import (
    BASE_MOTIF_PAIRING,
    BaseKind,
    DistributionSpec,
    DistributionTask,
    Graph,
    LabeledGraph,
    MotifKind,
    ShapeLabel,
    StructureLabel,
)
from graphbench.rules import random_cycle, random_tree
from graphbench.utils import SeedLike, as_random

logger = structlog.get_logger(__name__)

_OTHER_SHAPE = {ShapeLabel.TREE: ShapeLabel.CYCLE, ShapeLabel.CYCLE: ShapeLabel.TREE}


def _shape_graph(shape: ShapeLabel, spec: DistributionSpec, rng: random.Random) -> Graph:
    size = rng.randint(*spec.size_range)
    return random_tree(size, rng) if shape == ShapeLabel.TREE else random_cycle(size, rng)


def _sample_tree_or_cycle(spec: DistributionSpec, rng: random.Random) -> LabeledGraph:
    shape = ShapeLabel.TREE if rng.random() < spec.p else ShapeLabel.CYCLE
    return LabeledGraph(
        graph=_shape_graph(shape, spec, rng),
        label=StructureLabel(task=spec.task, shape=shape),
    )


def _sample_union(spec: DistributionSpec, rng: random.Random) -> LabeledGraph:
    first = rng.choice((ShapeLabel.TREE, ShapeLabel.CYCLE))
    second = first if rng.random() < spec.p else _OTHER_SHAPE[first]
    graph = disjoint_union(_shape_graph(first, spec, rng), _shape_graph(second, spec, rng))
    pair = sorted((first, second), key=lambda shape: shape.value)
    return LabeledGraph(
        graph=graph,
        label=StructureLabel(task=spec.task, components=(pair[0], pair[1])),
    )


def _sample_motif(spec: DistributionSpec, rng: random.Random) -> LabeledGraph:
    base_kind = rng.choice(list(BaseKind))
    paired = BASE_MOTIF_PAIRING[base_kind]
    if rng.random() < spec.p:
        motif_kind = paired
    else:
        motif_kind = rng.choice([kind for kind in MotifKind if kind != paired])
    base = build_base(base_kind, seed=rng)
    motif = shuffled(motif_template(motif_kind), rng)
    joined = disjoint_union(base, motif)
    anchor = rng.randint(1, base.node_count)
    attach = base.node_count + rng.randint(1, motif.node_count)
    graph = Graph.from_edges(joined.node_count, [*joined.edges, (anchor, attach)])
    motif_nodes = tuple(range(base.node_count + 1, joined.node_count + 1))
    return LabeledGraph(
        graph=graph,
        label=StructureLabel(task=spec.task, base=base_kind, motif=motif_kind, motif_nodes=motif_nodes),
    )


_SAMPLERS = {
    DistributionTask.TREES_OR_CYCLES: _sample_tree_or_cycle,
    DistributionTask.UNION_OF_COMPONENTS: _sample_union,
    DistributionTask.MOTIF: _sample_motif,
}


def sample_graph(spec: DistributionSpec, seed: SeedLike) -> LabeledGraph:
    """Draw one labelled graph from the task's mixture."""
    return _SAMPLERS[spec.task](spec, as_random(seed))


def sample_input_set(spec: DistributionSpec, seed: SeedLike) -> list[LabeledGraph]:
    """Draw ``spec.set_size`` i.i.d. graphs with their hidden labels.

    Args:
        spec: Task, mixture parameter and sizes
        seed: Integer seed or RNG

    Returns:
        Labelled graphs in draw order
    """
    rng = as_random(seed)
    samples = [_SAMPLERS[spec.task](spec, rng) for _ in range(spec.set_size)]
    logger.debug(
        "Input set sampled",
        distribution=spec.label,
        positives=sum(1 for item in samples if item.label.is_positive),
    )
    return samples
