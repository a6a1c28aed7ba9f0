"""Correct raw classifier scores for the classifier's own error rates."""

import structlog

from graphbench.errors import DegenerateModel
from graphbench.models import RectificationModel, RectifiedScore

logger = structlog.get_logger(__name__)


def _check(model: RectificationModel) -> None:
    if not model.well_posed:
        raise DegenerateModel(
            f"false positive rate {model.fpr} must be below true positive rate {model.tpr}",
            field="confusion_matrix",
        )


def rectify(mean_score: float, model: RectificationModel) -> RectifiedScore:
    """Invert P(C_M=1) = fpr + P(C=1) * (tpr - fpr) for P(C=1).

    Values outside [0, 1] are clamped and flagged.

    Raises:
        DegenerateModel: If fpr >= tpr
    """
    _check(model)
    raw = (mean_score - model.fpr) / (model.tpr - model.fpr)
    value = min(1.0, max(0.0, raw))
    clamped = value != raw
    if clamped:
        logger.warning("Rectified score clamped", mean_score=mean_score, raw=raw)
    return RectifiedScore(value=value, raw=raw, clamped=clamped)


def expected_raw_score(probability: float, model: RectificationModel) -> float:
    """Mean classifier score implied by a true positive probability."""
    _check(model)
    return model.fpr + probability * (model.tpr - model.fpr)
