from enum import Enum

from pydantic import BaseModel, ConfigDict, Field, model_validator

from graphbench.config.constants import DEFAULT_SET_SIZE, DEFAULT_SIZE_RANGE
from graphbench.models.graph import Graph


class DistributionTask(str, Enum):
    """The three distribution-based generation tasks."""

    TREES_OR_CYCLES = "TreesOrCycles"
    UNION_OF_COMPONENTS = "UnionOfComponents"
    MOTIF = "Motif"


class ShapeLabel(str, Enum):
    TREE = "Tree"
    CYCLE = "Cycle"
    NEITHER = "Neither"


class BaseKind(str, Enum):
    TREE = "Tree"
    LADDER = "Ladder"
    WHEEL = "Wheel"


class MotifKind(str, Enum):
    CYCLE = "Cycle"
    HOUSE = "House"
    CRANE = "Crane"


# Same-label correspondence, positional over the listing order
BASE_MOTIF_PAIRING: dict[BaseKind, MotifKind] = {
    BaseKind.TREE: MotifKind.CYCLE,
    BaseKind.LADDER: MotifKind.HOUSE,
    BaseKind.WHEEL: MotifKind.CRANE,
}


class DistributionSpec(BaseModel):
    """Parametric description of one distribution task."""

    model_config = ConfigDict(frozen=True)

    task: DistributionTask = Field(..., description="Distribution task kind")
    p: float = Field(..., ge=0.0, le=1.0, description="Mixture parameter")
    size_range: tuple[int, int] = Field(
        default=DEFAULT_SIZE_RANGE,
        description="Inclusive node-count range per tree, cycle or component",
    )
    set_size: int = Field(default=DEFAULT_SET_SIZE, ge=1, description="Graphs per input set")
    strict_sizes: bool = Field(
        default=False,
        description="Require tree/cycle components of model outputs to fall in size_range",
    )

    @model_validator(mode="after")
    def validate_size_range(self) -> "DistributionSpec":
        """Ensure the size range is nonempty and can hold a cycle."""
        low, high = self.size_range
        if low > high:
            raise ValueError("size_range must be nonempty")
        if low < 3:
            raise ValueError("size_range must start at 3 or more so cycles exist")
        return self

    @property
    def label(self) -> str:
        return f"{self.task.value}(p={self.p:g})"


class StructureLabel(BaseModel):
    """Classification of one graph under a distribution task."""

    model_config = ConfigDict(frozen=True)

    task: DistributionTask
    shape: ShapeLabel | None = Field(default=None, description="TreesOrCycles label")
    components: tuple[ShapeLabel, ShapeLabel] | None = Field(
        default=None,
        description="Sorted component labels (UnionOfComponents)",
    )
    base: BaseKind | None = Field(default=None, description="Base family (Motif)")
    motif: MotifKind | None = Field(default=None, description="Motif template (Motif)")
    motif_nodes: tuple[int, ...] | None = Field(
        default=None,
        description="Node set of the motif side of the chosen decomposition",
    )

    @property
    def recognized(self) -> bool:
        if self.task == DistributionTask.TREES_OR_CYCLES:
            return self.shape in (ShapeLabel.TREE, ShapeLabel.CYCLE)
        if self.task == DistributionTask.UNION_OF_COMPONENTS:
            return self.components is not None
        return self.base is not None and self.motif is not None

    @property
    def is_positive(self) -> bool:
        """Whether the graph realizes the outcome that has probability p."""
        if not self.recognized:
            return False
        if self.task == DistributionTask.TREES_OR_CYCLES:
            return self.shape == ShapeLabel.TREE
        if self.task == DistributionTask.UNION_OF_COMPONENTS:
            assert self.components is not None
            return self.components[0] == self.components[1]
        assert self.base is not None
        return BASE_MOTIF_PAIRING[self.base] == self.motif

    def describe(self) -> str:
        """Short text for prompts and logs."""
        if self.task == DistributionTask.TREES_OR_CYCLES:
            return (self.shape or ShapeLabel.NEITHER).value.lower()
        if self.task == DistributionTask.UNION_OF_COMPONENTS:
            if self.components is None:
                return "unrecognized"
            return " + ".join(shape.value.lower() for shape in self.components)
        if self.base is None or self.motif is None:
            return "unrecognized"
        return f"{self.base.value.lower()} base + {self.motif.value.lower()} motif"


class LabeledGraph(BaseModel):
    """A sampled graph with its hidden ground-truth label."""

    graph: Graph
    label: StructureLabel


class DistributionTrialResult(BaseModel):
    """Distribution-task quantities for one trial."""

    p_pred: float | None = Field(default=None, ge=0.0, le=1.0, description="p stated by the model")
    p_gen: float | None = Field(
        default=None,
        ge=0.0,
        le=1.0,
        description="p measured on classifiable generated graphs",
    )
    valid_fraction: float = Field(default=0.0, ge=0.0, le=1.0)
    classifiable: int = Field(default=0, ge=0)
    total: int = Field(default=0, ge=0)

    @property
    def p_gen_defined(self) -> bool:
        return self.p_gen is not None
