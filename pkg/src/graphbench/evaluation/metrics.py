"""Valid, novel and unique rates and their aggregation across trials."""

from collections.abc import Hashable, Sequence

import numpy as np
import structlog

from graphbench.config.constants import MAX_ISOMORPHISM_NODES
from graphbench.errors import EmptyInput, NoValidGraphs
from graphbench.graphs import canonical_key
from graphbench.models import (
    AggregateStats,
    DenominatorMode,
    Graph,
    IdentityMode,
    TrialOutcome,
    UniqueScope,
)

logger = structlog.get_logger(__name__)


def identity_key(graph: Graph, identity: IdentityMode = IdentityMode.ISOMORPHISM) -> Hashable:
    """Key equal for two graphs exactly when they count as the same graph.

    Graphs above the isomorphism size limit fall back to labeled equality.
    """
    if identity == IdentityMode.ISOMORPHISM and graph.node_count <= MAX_ISOMORPHISM_NODES:
        return canonical_key(graph)
    if identity == IdentityMode.ISOMORPHISM:
        logger.warning(
            "Graph too large for isomorphism identity, comparing labeled",
            node_count=graph.node_count,
        )
    return graph


def valid_rate(outcome: TrialOutcome, denominator: DenominatorMode = DenominatorMode.REQUESTED) -> float:
    """Percentage of graphs satisfying the rule.

    Under the returned-count denominator an empty reply scores 0.
    """
    valid = sum(outcome.verdicts)
    if denominator == DenominatorMode.RETURNED:
        total = len(outcome.graphs)
        return 100.0 * valid / total if total else 0.0
    return 100.0 * valid / outcome.requested_count


def novel_rate(outcome: TrialOutcome, identity: IdentityMode = IdentityMode.ISOMORPHISM) -> float:
    """Percentage of returned graphs that match none of the prompt exemplars.

    Vacuously 100 without exemplars or without returned graphs.
    """
    if not outcome.exemplars or not outcome.graphs:
        return 100.0
    seen = {identity_key(exemplar, identity) for exemplar in outcome.exemplars}
    novel = sum(1 for graph in outcome.graphs if identity_key(graph, identity) not in seen)
    return 100.0 * novel / len(outcome.graphs)


def unique_rate(
    outcome: TrialOutcome,
    identity: IdentityMode = IdentityMode.ISOMORPHISM,
    scope: UniqueScope = UniqueScope.VALID,
) -> float:
    """Distinct identity classes over the number of graphs considered, in percent.

    Raises:
        NoValidGraphs: If there is nothing to count under the chosen scope
    """
    graphs = outcome.valid_graphs if scope == UniqueScope.VALID else outcome.graphs
    if not graphs:
        raise NoValidGraphs(f"no {scope.value} graphs to measure uniqueness over", field="unique")
    classes = {identity_key(graph, identity) for graph in graphs}
    return 100.0 * len(classes) / len(graphs)


def identity_disagrees(outcome: TrialOutcome, scope: UniqueScope = UniqueScope.VALID) -> bool:
    """Whether labeled and isomorphism identity give different novel or unique rates."""
    if novel_rate(outcome, IdentityMode.LABELED) != novel_rate(outcome, IdentityMode.ISOMORPHISM):
        return True
    try:
        return unique_rate(outcome, IdentityMode.LABELED, scope) != unique_rate(
            outcome, IdentityMode.ISOMORPHISM, scope
        )
    except NoValidGraphs:
        return False


def aggregate(rates: Sequence[float]) -> AggregateStats:
    """Mean and standard error of per-trial percentages.

    The standard error is the sample standard deviation over the square root
    of the trial count; a single trial has none.

    Raises:
        EmptyInput: If there are no rates
    """
    if not rates:
        raise EmptyInput("no per-trial rates to aggregate", field="rates")
    values = np.asarray(sorted(rates), dtype=float)
    mean = float(np.clip(values.mean(), 0.0, 100.0))
    standard_error = None
    if len(values) > 1:
        standard_error = float(values.std(ddof=1) / np.sqrt(len(values)))
    return AggregateStats(mean=mean, standard_error=standard_error, trial_count=len(values))
