"""Seeded exemplar generators, one per rule kind."""

import random
from collections.abc import Callable

import networkx as nx
import structlog

from graphbench.config.constants import GENERATION_ATTEMPT_BUDGET
from graphbench.errors import GenerationTimeout, SpecMismatch, Unsatisfiable
from graphbench.graphs import disjoint_union
from graphbench.models import Graph, RuleKind, RuleSpec, ShapeLabel
from graphbench.rules.validators import validate_rule
from graphbench.utils.seeds import SeedLike, as_random

logger = structlog.get_logger(__name__)

EXTRA_EDGE_PROBABILITY = 0.3
BIPARTITE_EDGE_PROBABILITY = 0.5


def random_tree(node_count: int, rng: random.Random) -> Graph:
    """Uniform labelled tree via a random Prüfer sequence."""
    if node_count == 1:
        return Graph(node_count=1)
    if node_count == 2:
        return Graph(node_count=2, edges=((1, 2),))
    sequence = [rng.randrange(node_count) for _ in range(node_count - 2)]
    return Graph.from_networkx(nx.from_prufer_sequence(sequence), node_count)


def random_cycle(node_count: int, rng: random.Random) -> Graph:
    order = list(range(1, node_count + 1))
    rng.shuffle(order)
    edges = [(order[i], order[(i + 1) % node_count]) for i in range(node_count)]
    return Graph.from_edges(node_count, edges)


def random_permutation(node_count: int, rng: random.Random) -> list[int]:
    order = list(range(1, node_count + 1))
    rng.shuffle(order)
    return order


def turan_edge_count(node_count: int, parts: int) -> int:
    """Maximum edge count of a graph on node_count nodes with chromatic number <= parts."""
    parts = min(parts, node_count)
    base, extra = divmod(node_count, parts)
    sizes = [base + 1] * extra + [base] * (parts - extra)
    return (node_count * node_count - sum(size * size for size in sizes)) // 2


def _check_satisfiable(spec: RuleSpec) -> None:
    try:
        spec.check_coherent()
    except SpecMismatch as e:
        raise Unsatisfiable(e.message, field=e.field) from e
    n = spec.n or 0
    if spec.kind == RuleKind.K_REGULAR and (n * (spec.k or 0)) % 2 == 1:
        raise Unsatisfiable(f"{n} nodes of degree {spec.k} need an odd degree sum", field="k")
    if spec.kind == RuleKind.PLANAR and n >= 3 and (spec.m or 0) > 3 * n - 6:
        raise Unsatisfiable(f"planar graphs on {n} nodes have at most {3 * n - 6} edges", field="m")
    if spec.kind == RuleKind.K_COLOR and spec.enforce_edge_count:
        limit = turan_edge_count(n, spec.k or 1)
        if (spec.m or 0) > limit:
            raise Unsatisfiable(f"{spec.k}-colourable graphs on {n} nodes have at most {limit} edges", field="m")


def _tree(spec: RuleSpec, rng: random.Random, budget: int) -> Graph:
    assert spec.n is not None
    return random_tree(spec.n, rng)


def _cycle(spec: RuleSpec, rng: random.Random, budget: int) -> Graph:
    assert spec.n is not None
    return random_cycle(spec.n, rng)


def _connected_on(nodes: list[int], rng: random.Random) -> list[tuple[int, int]]:
    """Random spanning tree on the given ids plus independent extra edges."""
    tree = random_tree(len(nodes), rng)
    edges = {(nodes[u - 1], nodes[v - 1]) for u, v in tree.edges}
    for i in range(len(nodes)):
        for j in range(i + 1, len(nodes)):
            if rng.random() < EXTRA_EDGE_PROBABILITY:
                edges.add((nodes[i], nodes[j]))
    return list(edges)


def _components(spec: RuleSpec, rng: random.Random, budget: int) -> Graph:
    assert spec.n is not None and spec.k is not None
    order = random_permutation(spec.n, rng)
    cuts = sorted(rng.sample(range(1, spec.n), spec.k - 1))
    bounds = [0, *cuts, spec.n]
    edges: list[tuple[int, int]] = []
    for start, end in zip(bounds, bounds[1:], strict=False):
        edges.extend(_connected_on(order[start:end], rng))
    return Graph.from_edges(spec.n, edges)


def _rejection(spec: RuleSpec, rng: random.Random, budget: int) -> Graph:
    assert spec.n is not None and spec.m is not None
    for _ in range(budget):
        candidate = Graph.from_networkx(nx.gnm_random_graph(spec.n, spec.m, seed=rng), spec.n)
        if validate_rule(spec, candidate).valid:
            return candidate
    raise GenerationTimeout(f"no {spec.label} graph after {budget} samples")


def _k_regular(spec: RuleSpec, rng: random.Random, budget: int) -> Graph:
    assert spec.n is not None and spec.k is not None
    stubs = [node for node in range(1, spec.n + 1) for _ in range(spec.k)]
    for _ in range(budget):
        rng.shuffle(stubs)
        pairs = {
            (min(u, v), max(u, v)) for u, v in zip(stubs[::2], stubs[1::2], strict=True) if u != v
        }
        if len(pairs) * 2 == len(stubs):
            return Graph.from_edges(spec.n, pairs)
    raise GenerationTimeout(f"pairing model found no simple {spec.label} graph in {budget} tries")


def _wheel(spec: RuleSpec, rng: random.Random, budget: int) -> Graph:
    assert spec.n is not None
    order = random_permutation(spec.n, rng)
    hub, rim = order[0], order[1:]
    edges = [(hub, node) for node in rim]
    edges.extend((rim[i], rim[(i + 1) % len(rim)]) for i in range(len(rim)))
    return Graph.from_edges(spec.n, edges)


def _bipartite(spec: RuleSpec, rng: random.Random, budget: int) -> Graph:
    assert spec.n is not None and spec.part_sizes is not None
    order = random_permutation(spec.n, rng)
    part_u, part_v = order[: spec.part_sizes[0]], order[spec.part_sizes[0] :]
    edges = [
        (u, v) for u in part_u for v in part_v if rng.random() < BIPARTITE_EDGE_PROBABILITY
    ]
    return Graph.from_edges(spec.n, edges)


def _two_components(spec: RuleSpec, rng: random.Random, budget: int) -> Graph:
    assert spec.component_kinds is not None and spec.size_range is not None
    low, high = spec.size_range
    parts: list[Graph] = []
    for shape in spec.component_kinds:
        if shape == ShapeLabel.CYCLE:
            parts.append(random_cycle(rng.randint(max(low, 3), high), rng))
        else:
            parts.append(random_tree(rng.randint(low, high), rng))
    rng.shuffle(parts)
    union = disjoint_union(*parts)
    return union.relabeled(random_permutation(union.node_count, rng))


_BUILDERS: dict[RuleKind, Callable[[RuleSpec, random.Random, int], Graph]] = {
    RuleKind.TREE: _tree,
    RuleKind.CYCLE: _cycle,
    RuleKind.COMPONENTS: _components,
    RuleKind.PLANAR: _rejection,
    RuleKind.K_REGULAR: _k_regular,
    RuleKind.WHEEL: _wheel,
    RuleKind.BIPARTITE: _bipartite,
    RuleKind.K_COLOR: _rejection,
    RuleKind.TWO_COMPONENTS: _two_components,
}


def generate_exemplar(
    spec: RuleSpec,
    seed: SeedLike,
    max_attempts: int = GENERATION_ATTEMPT_BUDGET,
) -> Graph:
    """Draw one graph satisfying the rule.

    Args:
        spec: Rule to satisfy
        seed: Integer seed or RNG; equal seeds give equal graphs
        max_attempts: Rejection-sampling budget

    Returns:
        A graph accepted by validate_rule

    Raises:
        Unsatisfiable: If no graph meets the rule
        GenerationTimeout: If rejection sampling exhausts its budget
    """
    _check_satisfiable(spec)
    rng = as_random(seed)
    graph = _BUILDERS[spec.kind](spec, rng, max_attempts)
    logger.debug("Exemplar generated", rule=spec.label, edges=graph.edge_count)
    return graph


def generate_exemplars(spec: RuleSpec, count: int, seed: SeedLike) -> list[Graph]:
    """Draw several exemplars from one RNG."""
    rng = as_random(seed)
    return [generate_exemplar(spec, rng) for _ in range(count)]
