from graphbench.evaluation.metrics import (
    aggregate,
    identity_disagrees,
    identity_key,
    novel_rate,
    unique_rate,
    valid_rate,
)

__all__ = [
    "aggregate",
    "identity_disagrees",
    "identity_key",
    "novel_rate",
    "unique_rate",
    "valid_rate",
]
