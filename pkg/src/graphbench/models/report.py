from pydantic import BaseModel, Field, model_validator

from graphbench.config.constants import MISSING_CELL
from graphbench.models.metrics import AggregateStats


class ReportColumn(BaseModel):
    task: str = Field(..., description="Task label, e.g. Planar(n=15, m=24)")
    metric: str = Field(..., description="Metric name, e.g. Valid")

    @property
    def header(self) -> str:
        return f"{self.task} {self.metric}"


class ReportCell(BaseModel):
    """Aggregated value, or an explicit missing marker with its reason."""

    stats: AggregateStats | None = None
    missing_reason: str | None = None
    notes: list[str] = Field(default_factory=list)

    @model_validator(mode="after")
    def validate_state(self) -> "ReportCell":
        """A cell is either filled or explicitly missing."""
        if (self.stats is None) == (self.missing_reason is None):
            raise ValueError("cell needs exactly one of stats or missing_reason")
        return self

    @classmethod
    def missing(cls, reason: str, notes: list[str] | None = None) -> "ReportCell":
        return cls(missing_reason=reason, notes=notes or [])

    def render(self) -> str:
        return self.stats.format() if self.stats is not None else MISSING_CELL


class ReportRow(BaseModel):
    setting: str = Field(..., description="Sweep value label or 'default'")
    style: str = Field(..., description="Prompt style display name")
    cells: list[ReportCell] = Field(default_factory=list)


class ReportTable(BaseModel):
    """Rows keyed by (setting, prompt style); one cell per column."""

    title: str
    columns: list[ReportColumn] = Field(default_factory=list)
    rows: list[ReportRow] = Field(default_factory=list)
    footer: list[str] = Field(default_factory=list)

    @model_validator(mode="after")
    def validate_shape(self) -> "ReportTable":
        """Every row carries one cell per column."""
        for row in self.rows:
            if len(row.cells) != len(self.columns):
                raise ValueError(f"row {row.setting}/{row.style} has {len(row.cells)} cells")
        return self

    @property
    def has_settings(self) -> bool:
        return any(row.setting != "default" for row in self.rows)

    def cell(self, setting: str, style: str, task: str, metric: str) -> ReportCell:
        index = next(
            i for i, column in enumerate(self.columns) if column.task == task and column.metric == metric
        )
        row = next(row for row in self.rows if row.setting == setting and row.style == style)
        return row.cells[index]
