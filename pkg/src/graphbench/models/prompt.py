import hashlib
from enum import Enum

from pydantic import BaseModel, ConfigDict, Field

from graphbench.models.distribution import LabeledGraph
from graphbench.models.graph import Graph


class PromptStyle(str, Enum):
    """Prompt variants: with or without exemplars, with or without step-by-step reasoning."""

    ZERO_SHOT = "ZeroShot"
    FEW_SHOT = "FewShot"
    ZERO_SHOT_COT = "ZeroShotCoT"
    FEW_SHOT_COT = "FewShotCoT"

    @property
    def is_few_shot(self) -> bool:
        return self in (PromptStyle.FEW_SHOT, PromptStyle.FEW_SHOT_COT)

    @property
    def is_cot(self) -> bool:
        return self in (PromptStyle.ZERO_SHOT_COT, PromptStyle.FEW_SHOT_COT)

    @property
    def display_name(self) -> str:
        return {
            PromptStyle.ZERO_SHOT: "Zero-shot",
            PromptStyle.FEW_SHOT: "Few-shot",
            PromptStyle.ZERO_SHOT_COT: "Zero-shot+CoT",
            PromptStyle.FEW_SHOT_COT: "Few-shot+CoT",
        }[self]


class OutputKind(str, Enum):
    GRAPH_LIST = "GraphList"
    P_ESTIMATE_AND_GRAPH_LIST = "PEstimateAndGraphList"
    SMILES_LIST = "SmilesList"


class ExpectedOutput(BaseModel):
    """What the model is asked to return."""

    model_config = ConfigDict(frozen=True)

    kind: OutputKind
    count: int = Field(..., ge=1, description="Requested number of graphs or molecules")


class PromptBundle(BaseModel):
    """Fully rendered prompt ready to send to an endpoint."""

    model_config = ConfigDict(frozen=True)

    system_text: str = Field(..., description="System message")
    user_text: str = Field(..., description="User message")
    expected_output: ExpectedOutput
    template_hash: str = Field(..., description="Hash of the template resources used")

    @property
    def prompt_hash(self) -> str:
        """SHA-256 over the rendered messages."""
        digest = hashlib.sha256()
        digest.update(self.system_text.encode("utf-8"))
        digest.update(b"\x00")
        digest.update(self.user_text.encode("utf-8"))
        return digest.hexdigest()


class WorkedExample(BaseModel):
    """Labelled example set used to demonstrate estimating p."""

    graphs: list[LabeledGraph] = Field(..., min_length=1)

    @property
    def p(self) -> float:
        positives = sum(1 for item in self.graphs if item.label.is_positive)
        return positives / len(self.graphs)


class Diagnostic(BaseModel):
    """Parse problem attached to one item of a response."""

    code: str = Field(..., description="Machine-readable code")
    message: str = Field(default="", description="Human-readable detail")
    item: int | None = Field(default=None, description="Position of the offending item, if any")


class ParsedResponse(BaseModel):
    """Structured content extracted from raw model text."""

    graphs: list[Graph] = Field(default_factory=list)
    p_estimate: float | None = Field(default=None, ge=0.0, le=1.0)
    smiles: list[str] = Field(default_factory=list)
    diagnostics: list[Diagnostic] = Field(default_factory=list)
    returned_count: int = Field(default=0, ge=0, description="Items found before truncation")

    @property
    def is_empty(self) -> bool:
        return not self.graphs and not self.smiles

    def has_diagnostic(self, code: str) -> bool:
        return any(diagnostic.code == code for diagnostic in self.diagnostics)
