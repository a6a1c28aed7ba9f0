"""Monte-Carlo difficulty calibration for the structural rules."""

import math
import random

import networkx as nx
import structlog

from graphbench.config.constants import MIN_CALIBRATION_SAMPLES
from graphbench.models import Graph, ProbabilityEstimate, RuleKind, RuleSpec
from graphbench.rules.validators import validate_rule
from graphbench.utils.seeds import SeedLike, as_random

logger = structlog.get_logger(__name__)

DENSE_EDGE_PROBABILITY = 0.5


def implied_edge_count(spec: RuleSpec) -> int | None:
    """Edge count every valid graph must have, or None when the rule leaves it free."""
    n = spec.n or 0
    if spec.kind == RuleKind.TREE:
        return n - 1
    if spec.kind == RuleKind.CYCLE:
        return n
    if spec.kind == RuleKind.K_REGULAR:
        return n * (spec.k or 0) // 2
    if spec.kind == RuleKind.WHEEL:
        return 2 * (n - 1)
    if spec.kind in (RuleKind.PLANAR, RuleKind.K_COLOR):
        return spec.m
    return None


def _node_count(spec: RuleSpec, rng: random.Random) -> int:
    if spec.n is not None:
        return spec.n
    assert spec.size_range is not None
    low, high = spec.size_range
    return rng.randint(low, high) + rng.randint(low, high)


def sample_random_graph(spec: RuleSpec, rng: random.Random) -> Graph:
    """Uniform G(n, m) at the rule's implied edge count, else G(n, 1/2)."""
    n = _node_count(spec, rng)
    m = implied_edge_count(spec)
    if m is not None:
        m = min(m, n * (n - 1) // 2)
        return Graph.from_networkx(nx.gnm_random_graph(n, m, seed=rng), n)
    return Graph.from_networkx(nx.gnp_random_graph(n, DENSE_EDGE_PROBABILITY, seed=rng), n)


def estimate_random_valid_prob(spec: RuleSpec, samples: int, seed: SeedLike) -> ProbabilityEstimate:
    """Estimate how often a uniform random graph satisfies the rule.

    Args:
        spec: Rule to calibrate
        samples: Number of random graphs, at least MIN_CALIBRATION_SAMPLES
        seed: Integer seed or RNG

    Returns:
        Probability with its binomial standard error

    Raises:
        ValueError: If fewer than MIN_CALIBRATION_SAMPLES samples are requested
        SpecMismatch: If the rule parameters are incoherent
    """
    if samples < MIN_CALIBRATION_SAMPLES:
        raise ValueError(f"calibration needs at least {MIN_CALIBRATION_SAMPLES} samples")
    spec.check_coherent()
    rng = as_random(seed)
    hits = sum(1 for _ in range(samples) if validate_rule(spec, sample_random_graph(spec, rng)).valid)
    probability = hits / samples
    standard_error = math.sqrt(probability * (1.0 - probability) / samples)
    logger.info(
        "Calibration finished",
        rule=spec.label,
        samples=samples,
        hits=hits,
        probability=round(probability, 4),
    )
    return ProbabilityEstimate(
        probability=probability,
        standard_error=standard_error,
        samples=samples,
        hits=hits,
    )
