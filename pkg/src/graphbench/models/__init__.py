from graphbench.models.distribution import (
    BASE_MOTIF_PAIRING,
    BaseKind,
    DistributionSpec,
    DistributionTask,
    DistributionTrialResult,
    LabeledGraph,
    MotifKind,
    ShapeLabel,
    StructureLabel,
)
from graphbench.models.graph import Graph
from graphbench.models.metrics import (
    AggregateStats,
    DenominatorMode,
    IdentityMode,
    TrialOutcome,
    UniqueScope,
)
from graphbench.models.molecule import (
    ConfusionMatrix,
    DatasetLoadResult,
    MoleculeRecord,
    MoleculeScores,
    RectificationModel,
    RectifiedScore,
)
from graphbench.models.prompt import (
    Diagnostic,
    ExpectedOutput,
    OutputKind,
    ParsedResponse,
    PromptBundle,
    PromptStyle,
    WorkedExample,
)
from graphbench.models.report import ReportCell, ReportColumn, ReportRow, ReportTable
from graphbench.models.rule import (
    ProbabilityEstimate,
    RuleKind,
    RuleSpec,
    SizePreset,
    ValidityReport,
)
from graphbench.models.run import (
    FAMILY_METRICS,
    PropertySettings,
    RunConfig,
    ScorerConfig,
    SweepConfig,
    SweepParameter,
    TaskFamily,
)
from graphbench.models.transcript import AttemptRecord, ModelEndpoint, TokenUsage, Transcript

__all__ = [
    "AggregateStats",
    "AttemptRecord",
    "BASE_MOTIF_PAIRING",
    "BaseKind",
    "ConfusionMatrix",
    "DatasetLoadResult",
    "DenominatorMode",
    "Diagnostic",
    "DistributionSpec",
    "DistributionTask",
    "DistributionTrialResult",
    "ExpectedOutput",
    "FAMILY_METRICS",
    "Graph",
    "IdentityMode",
    "LabeledGraph",
    "ModelEndpoint",
    "MoleculeRecord",
    "MoleculeScores",
    "MotifKind",
    "OutputKind",
    "ParsedResponse",
    "ProbabilityEstimate",
    "PromptBundle",
    "PromptStyle",
    "PropertySettings",
    "RectificationModel",
    "RectifiedScore",
    "ReportCell",
    "ReportColumn",
    "ReportRow",
    "ReportTable",
    "RuleKind",
    "RuleSpec",
    "RunConfig",
    "ScorerConfig",
    "ShapeLabel",
    "SizePreset",
    "StructureLabel",
    "SweepConfig",
    "SweepParameter",
    "TaskFamily",
    "TokenUsage",
    "Transcript",
    "TrialOutcome",
    "UniqueScope",
    "ValidityReport",
    "WorkedExample",
]
