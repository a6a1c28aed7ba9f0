"""Per-trial run metrics."""

from dataclasses import dataclass
from typing import Any

import structlog

logger = structlog.get_logger(__name__)


@dataclass
class TrialMetrics:
    """Metrics for a single trial."""

    cell: str
    status: str = "pending"
    latency_ms: float = 0.0
    prompt_tokens: int = 0
    completion_tokens: int = 0
    items_returned: int = 0
    retries: int = 0
    error: str | None = None

    @property
    def total_tokens(self) -> int:
        return self.prompt_tokens + self.completion_tokens

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary for logging/export."""
        return {
            "cell": self.cell,
            "status": self.status,
            "latency_ms": round(self.latency_ms, 1),
            "total_tokens": self.total_tokens,
            "items_returned": self.items_returned,
            "retries": self.retries,
            "error": self.error,
        }


class RunTracker:
    """Track trial outcomes across a run.

    Trials finish in arbitrary order; the summary only aggregates, so it
    does not depend on completion order.
    """

    def __init__(self) -> None:
        self._history: list[TrialMetrics] = []

    def record(self, metrics: TrialMetrics) -> None:
        self._history.append(metrics)
        if metrics.status == "failed":
            logger.error("Trial failed", **metrics.to_dict())
        else:
            logger.info("Trial completed", **metrics.to_dict())

    def count(self, status: str) -> int:
        return sum(1 for metrics in self._history if metrics.status == status)

    def get_summary(self) -> dict[str, Any]:
        """Summary statistics across all trials."""
        if not self._history:
            return {"total_trials": 0}

        total = len(self._history)
        latencies = [metrics.latency_ms for metrics in self._history if metrics.latency_ms]
        return {
            "total_trials": total,
            "completed_trials": self.count("completed"),
            "failed_trials": self.count("failed"),
            "empty_trials": self.count("empty"),
            "avg_latency_ms": sum(latencies) / len(latencies) if latencies else 0.0,
            "total_tokens_used": sum(metrics.total_tokens for metrics in self._history),
            "total_retries": sum(metrics.retries for metrics in self._history),
        }
