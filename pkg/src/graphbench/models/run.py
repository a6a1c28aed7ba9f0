try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib
from enum import Enum
from pathlib import Path
from typing import Any, Literal

from pydantic import BaseModel, Field, model_validator

from graphbench.config.constants import (
    DEFAULT_EXEMPLAR_COUNT,
    DEFAULT_POSITIVE_COUNT,
    DEFAULT_REQUESTED_COUNT,
    DEFAULT_TRIAL_COUNT,
    DISTRIBUTION_TEMPERATURE,
    PROPERTY_TEMPERATURE,
    RULE_TEMPERATURE,
)
from graphbench.errors import ConfigError
from graphbench.models.distribution import DistributionSpec
from graphbench.models.metrics import DenominatorMode, IdentityMode, UniqueScope
from graphbench.models.molecule import ConfusionMatrix
from graphbench.models.prompt import PromptStyle
from graphbench.models.rule import RuleSpec, SizePreset
from graphbench.models.transcript import ModelEndpoint


class TaskFamily(str, Enum):
    RULE = "rule"
    DISTRIBUTION = "distribution"
    PROPERTY = "property"


FAMILY_METRICS: dict[TaskFamily, tuple[str, ...]] = {
    TaskFamily.RULE: ("Valid", "Unique", "Novel"),
    TaskFamily.DISTRIBUTION: ("p_pred", "p_gen", "Valid"),
    TaskFamily.PROPERTY: ("C_M", "C", "Novel", "Unique"),
}

FAMILY_TEMPERATURE: dict[TaskFamily, float] = {
    TaskFamily.RULE: RULE_TEMPERATURE,
    TaskFamily.DISTRIBUTION: DISTRIBUTION_TEMPERATURE,
    TaskFamily.PROPERTY: PROPERTY_TEMPERATURE,
}


class ScorerConfig(BaseModel):
    """Which molecule scorer to use and how to reach it."""

    kind: Literal["command", "http", "constant"] = Field(default="constant")
    command: list[str] | None = Field(default=None, description="argv of a scoring process")
    url: str | None = Field(default=None, description="HTTP scoring endpoint")
    value: float = Field(default=0.5, ge=0.0, le=1.0, description="Score returned by the stub")
    timeout: float = Field(default=60.0, gt=0.0)

    @model_validator(mode="after")
    def validate_target(self) -> "ScorerConfig":
        """Command and HTTP scorers need their target."""
        if self.kind == "command" and not self.command:
            raise ValueError("command scorer needs 'command'")
        if self.kind == "http" and not self.url:
            raise ValueError("http scorer needs 'url'")
        return self


class PropertySettings(BaseModel):
    """Property-based generation task settings."""

    label: str = Field(default="MolHIV", description="Column label in reports")
    dataset_path: Path = Field(..., description="CSV with smiles and label columns")
    smiles_column: str = Field(default="smiles")
    label_column: str = Field(default="label")
    positive_count: int = Field(default=DEFAULT_POSITIVE_COUNT, ge=1)
    scorer: ScorerConfig = Field(default_factory=ScorerConfig)
    confusion_matrix: ConfusionMatrix = Field(default_factory=ConfusionMatrix.published)
    canonicalizer: list[str] | None = Field(
        default=None,
        description="argv of a process mapping SMILES lines to canonical SMILES lines",
    )


class SweepParameter(str, Enum):
    TEMPERATURE = "temperature"
    REQUESTED_COUNT = "requested_count"
    SIZE_PRESET = "size_preset"
    P = "p"


class SweepConfig(BaseModel):
    """One ablation axis; each value becomes a report row setting."""

    parameter: SweepParameter
    values: list[float | int | str] = Field(..., min_length=1)

    @model_validator(mode="after")
    def validate_values(self) -> "SweepConfig":
        """Values must fit the swept parameter."""
        for value in self.values:
            if self.parameter == SweepParameter.SIZE_PRESET:
                SizePreset(str(value))
            elif self.parameter == SweepParameter.REQUESTED_COUNT:
                if int(value) < 1 or int(value) != float(value):
                    raise ValueError(f"requested count {value!r} must be a positive integer")
            else:
                number = float(value)
                upper = 2.0 if self.parameter == SweepParameter.TEMPERATURE else 1.0
                if not 0.0 <= number <= upper:
                    raise ValueError(f"{self.parameter.value} {value!r} out of range")
        return self

    def label(self, value: float | int | str) -> str:
        if self.parameter == SweepParameter.TEMPERATURE:
            return f"t={float(value):g}"
        if self.parameter == SweepParameter.REQUESTED_COUNT:
            return f"Amount {int(value)}"
        if self.parameter == SweepParameter.P:
            return f"p={float(value):g}"
        return str(value)


class RunConfig(BaseModel):
    """Everything one experiment run needs."""

    name: str = Field(default="run", description="Report title")
    family: TaskFamily
    rules: list[RuleSpec] = Field(default_factory=list)
    distributions: list[DistributionSpec] = Field(default_factory=list)
    molecules: PropertySettings | None = None
    styles: list[PromptStyle] = Field(..., min_length=1)
    metrics: list[str] | None = Field(default=None, description="Subset of the family metrics")

    endpoint: ModelEndpoint | None = None
    profile: str | None = Field(default=None, description="Name of an entry in 'profiles'")
    profiles: dict[str, ModelEndpoint] = Field(default_factory=dict)
    replay_store: Path | None = Field(default=None, description="Transcript file to replay")

    temperature: float | None = Field(default=None, ge=0.0, le=2.0)
    requested_count: int = Field(default=DEFAULT_REQUESTED_COUNT, ge=1)
    trial_count: int = Field(default=DEFAULT_TRIAL_COUNT, ge=1)
    exemplar_count: int = Field(default=DEFAULT_EXEMPLAR_COUNT, ge=1)
    master_seed: int = Field(default=0, ge=0)
    output_dir: Path = Field(default=Path("runs/default"))

    denominator: DenominatorMode = DenominatorMode.REQUESTED
    identity: IdentityMode = IdentityMode.ISOMORPHISM
    unique_scope: UniqueScope = UniqueScope.VALID
    missing_if_short: bool = False
    sweep: SweepConfig | None = None

    @model_validator(mode="after")
    def validate_run(self) -> "RunConfig":
        """Check family/task agreement and the endpoint-or-replay choice."""
        if self.family == TaskFamily.RULE and not self.rules:
            raise ValueError("rule runs need at least one entry in 'rules'")
        if self.family == TaskFamily.DISTRIBUTION and not self.distributions:
            raise ValueError("distribution runs need at least one entry in 'distributions'")
        if self.family == TaskFamily.PROPERTY:
            if self.molecules is None:
                raise ValueError("property runs need a 'molecules' table")
            bad = [style.value for style in self.styles if not style.is_few_shot]
            if bad:
                raise ValueError(f"property runs support FewShot styles only, got {bad}")
        if self.profile is not None and self.profile not in self.profiles:
            raise ValueError(f"unknown endpoint profile {self.profile!r}")
        live = self.endpoint is not None or self.profile is not None
        if live and self.replay_store is not None:
            raise ValueError("configure a live endpoint (endpoint/profile) or replay_store, not both")
        if self.metrics is not None:
            unknown = set(self.metrics) - set(FAMILY_METRICS[self.family])
            if unknown:
                raise ValueError(f"unknown metrics for {self.family.value}: {sorted(unknown)}")
        if self.sweep is not None:
            if self.sweep.parameter == SweepParameter.SIZE_PRESET and self.family != TaskFamily.RULE:
                raise ValueError("size_preset sweeps apply to rule runs only")
            if self.sweep.parameter == SweepParameter.P and self.family != TaskFamily.DISTRIBUTION:
                raise ValueError("p sweeps apply to distribution runs only")
        return self

    @classmethod
    def from_toml(cls, path: Path, overrides: dict[str, Any] | None = None) -> "RunConfig":
        """Load a run configuration file, applying top-level overrides.

        Raises:
            ConfigError: If the file cannot be read or parsed
        """
        try:
            with open(path, "rb") as f:
                data = tomllib.load(f)
        except (OSError, tomllib.TOMLDecodeError) as e:
            raise ConfigError(f"cannot read run config {path}: {e}", field="config") from e
        data.update({key: value for key, value in (overrides or {}).items() if value is not None})
        return cls.model_validate(data)

    def with_overrides(self, **overrides: Any) -> "RunConfig":
        """Return a re-validated copy with fields replaced."""
        data = self.model_dump()
        data.update(overrides)
        return RunConfig.model_validate(data)

    @property
    def active_metrics(self) -> tuple[str, ...]:
        if self.metrics is None:
            return FAMILY_METRICS[self.family]
        return tuple(metric for metric in FAMILY_METRICS[self.family] if metric in self.metrics)

    @property
    def effective_temperature(self) -> float:
        if self.temperature is not None:
            return self.temperature
        return FAMILY_TEMPERATURE[self.family]

    def resolve_endpoint(self, default: ModelEndpoint | None = None) -> ModelEndpoint | None:
        """Live endpoint with the effective temperature, or None for replay runs.

        ``default`` stands in when the configuration names no endpoint.
        """
        if self.replay_store is not None:
            return None
        endpoint = self.endpoint
        if endpoint is None and self.profile is not None:
            endpoint = self.profiles[self.profile]
        if endpoint is None:
            endpoint = default
        if endpoint is None:
            return None
        return endpoint.with_temperature(self.effective_temperature)
