from fractions import Fraction
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from graphbench.config.constants import MOLHIV_CONFUSION
from graphbench.utils.validators import check_smiles_syntax


class MoleculeRecord(BaseModel):
    """One dataset row: a SMILES string and its activity label."""

    model_config = ConfigDict(frozen=True)

    smiles: str = Field(..., min_length=1, description="SMILES string")
    label: Literal[0, 1] = Field(..., description="1 = inhibits HIV replication")

    @field_validator("smiles")
    @classmethod
    def validate_smiles(cls, value: str) -> str:
        """Reject strings failing the syntactic sanity check."""
        value = value.strip()
        ok, reason = check_smiles_syntax(value)
        if not ok:
            raise ValueError(reason)
        return value


class RectificationModel(BaseModel):
    """Classifier error rates used to correct raw scores."""

    model_config = ConfigDict(frozen=True)

    fpr: float = Field(..., ge=0.0, le=1.0, description="P(C_M = 1 | C_T = 0)")
    tpr: float = Field(..., ge=0.0, le=1.0, description="P(C_M = 1 | C_T = 1)")

    @property
    def well_posed(self) -> bool:
        return self.fpr < self.tpr


class ConfusionMatrix(BaseModel):
    """Classifier confusion matrix counts."""

    model_config = ConfigDict(frozen=True)

    tn: int = Field(..., ge=0)
    fp: int = Field(..., ge=0)
    fn: int = Field(..., ge=0)
    tp: int = Field(..., ge=0)

    @model_validator(mode="after")
    def validate_denominators(self) -> "ConfusionMatrix":
        """Both rates need at least one example of the true class."""
        if self.tn + self.fp == 0 or self.fn + self.tp == 0:
            raise ValueError("confusion matrix needs negatives and positives")
        return self

    @classmethod
    def published(cls) -> "ConfusionMatrix":
        """The MolHIV classifier matrix shipped as the default."""
        return cls(**MOLHIV_CONFUSION)

    @property
    def false_positive_rate(self) -> Fraction:
        return Fraction(self.fp, self.tn + self.fp)

    @property
    def true_positive_rate(self) -> Fraction:
        return Fraction(self.tp, self.fn + self.tp)

    def to_rectification_model(self) -> RectificationModel:
        return RectificationModel(
            fpr=float(self.false_positive_rate),
            tpr=float(self.true_positive_rate),
        )


class RectifiedScore(BaseModel):
    value: float = Field(..., ge=0.0, le=1.0, description="Rectified probability")
    raw: float = Field(..., description="Unclamped rectified value")
    clamped: bool = Field(default=False)


class MoleculeScores(BaseModel):
    """Scores aligned with the input molecules."""

    scores: list[float] = Field(default_factory=list)
    invalid: list[bool] = Field(
        default_factory=list,
        description="True where the SMILES failed the syntax check and was scored 0",
    )

    @property
    def mean(self) -> float:
        return sum(self.scores) / len(self.scores) if self.scores else 0.0


class DatasetLoadResult(BaseModel):
    """Parsed dataset rows plus the rows that were rejected."""

    records: list[MoleculeRecord] = Field(default_factory=list)
    rejects: list[tuple[int, str, str]] = Field(
        default_factory=list,
        description="(row number, raw row, reason)",
    )

    @property
    def positives(self) -> list[MoleculeRecord]:
        return [record for record in self.records if record.label == 1]
