from enum import Enum

from pydantic import BaseModel, Field, model_validator

from graphbench.models.graph import Graph


class DenominatorMode(str, Enum):
    """Denominator for the valid rate."""

    REQUESTED = "requested"
    RETURNED = "returned"


class IdentityMode(str, Enum):
    """When two graphs count as the same graph."""

    ISOMORPHISM = "isomorphism"
    LABELED = "labeled"


class UniqueScope(str, Enum):
    """Which graphs the unique rate is computed over."""

    VALID = "valid"
    GENERATED = "generated"


class TrialOutcome(BaseModel):
    """Parsed graphs of one trial with their verdicts and the prompt exemplars."""

    requested_count: int = Field(..., ge=1)
    graphs: list[Graph] = Field(default_factory=list)
    verdicts: list[bool] = Field(default_factory=list)
    exemplars: list[Graph] = Field(default_factory=list)

    @model_validator(mode="after")
    def validate_verdicts(self) -> "TrialOutcome":
        """One verdict per graph, never more than requested."""
        if len(self.verdicts) != len(self.graphs):
            raise ValueError("need exactly one verdict per graph")
        if len(self.verdicts) > self.requested_count:
            raise ValueError("more verdicts than requested graphs")
        return self

    @property
    def valid_graphs(self) -> list[Graph]:
        return [graph for graph, ok in zip(self.graphs, self.verdicts, strict=True) if ok]


class AggregateStats(BaseModel):
    """Mean and standard error of per-trial percentages."""

    mean: float = Field(..., ge=0.0, le=100.0)
    standard_error: float | None = Field(default=None, ge=0.0)
    trial_count: int = Field(..., ge=1)

    def format(self) -> str:
        """Render as ``mean ± SE`` with one decimal; SE omitted for a single trial."""
        if self.standard_error is None:
            return f"{self.mean:.1f}"
        return f"{self.mean:.1f} ± {self.standard_error:.1f}"
