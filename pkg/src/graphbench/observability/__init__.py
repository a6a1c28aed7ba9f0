from graphbench.observability.tracing import (
    init_langsmith,
    trace_function,
)
from graphbench.observability.tracker import RunTracker, TrialMetrics

__all__ = [
    "RunTracker",
    "TrialMetrics",
    "init_langsmith",
    "trace_function",
]
