"""p_gen from generated graphs."""

from collections.abc import Sequence

from graphbench.distributions.classify import classify
from graphbench.errors import NoClassifiableGraphs
from graphbench.models import DistributionTask, DistributionTrialResult, Graph, StructureLabel


def positive_fraction(labels: Sequence[StructureLabel]) -> float:
    """Fraction of recognized labels realizing the probability-p outcome."""
    recognized = [label for label in labels if label.recognized]
    if not recognized:
        raise NoClassifiableGraphs("no recognized labels")
    return sum(1 for label in recognized if label.is_positive) / len(recognized)


def estimate_p_gen(
    task: DistributionTask,
    graphs: Sequence[Graph],
    size_range: tuple[int, int] | None = None,
) -> DistributionTrialResult:
    """Measure p over the classifiable generated graphs.

    Args:
        task: Distribution task
        graphs: Generated graphs
        size_range: Strict size range for trees and cycles, if enforced

    Returns:
        Result with p_gen, valid_fraction and counts filled; p_pred unset

    Raises:
        NoClassifiableGraphs: If no graph is classifiable
    """
    labels = [classify(task, graph, size_range) for graph in graphs]
    classifiable = sum(1 for label in labels if label.recognized)
    if classifiable == 0:
        raise NoClassifiableGraphs(f"none of {len(graphs)} graphs is classifiable under {task.value}")
    return DistributionTrialResult(
        p_gen=positive_fraction(labels),
        valid_fraction=classifiable / len(graphs),
        classifiable=classifiable,
        total=len(graphs),
    )
