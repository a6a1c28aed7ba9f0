from enum import Enum
from typing import Any

from pydantic import BaseModel, ConfigDict, Field, model_validator

from graphbench.config.constants import SIZE_PRESETS
from graphbench.errors import SpecMismatch
from graphbench.models.distribution import ShapeLabel


class RuleKind(str, Enum):
    """Structural rules a generated graph must satisfy."""

    TREE = "Tree"
    CYCLE = "Cycle"
    COMPONENTS = "Components"
    PLANAR = "Planar"
    K_REGULAR = "KRegular"
    WHEEL = "Wheel"
    BIPARTITE = "Bipartite"
    K_COLOR = "KColor"
    TWO_COMPONENTS = "TwoComponents"


class SizePreset(str, Enum):
    SMALL = "Small"
    MEDIUM = "Medium"
    LARGE = "Large"


REQUIRED_PARAMS: dict[RuleKind, tuple[str, ...]] = {
    RuleKind.TREE: ("n",),
    RuleKind.CYCLE: ("n",),
    RuleKind.COMPONENTS: ("n", "k"),
    RuleKind.PLANAR: ("n", "m"),
    RuleKind.K_REGULAR: ("n", "k"),
    RuleKind.WHEEL: ("n",),
    RuleKind.BIPARTITE: ("n", "part_sizes"),
    RuleKind.K_COLOR: ("n", "m", "k"),
    RuleKind.TWO_COMPONENTS: ("component_kinds", "size_range"),
}


class RuleSpec(BaseModel):
    """One structural rule plus its numeric parameters."""

    model_config = ConfigDict(frozen=True)

    kind: RuleKind = Field(..., description="Rule kind")
    n: int | None = Field(default=None, ge=1, description="Node count")
    m: int | None = Field(default=None, ge=0, description="Edge count (Planar, KColor)")
    k: int | None = Field(
        default=None,
        ge=1,
        description="Component count, regular degree or colour count",
    )
    part_sizes: tuple[int, int] | None = Field(
        default=None,
        description="Bipartition class sizes (|U|, |V|)",
    )
    component_kinds: tuple[ShapeLabel, ShapeLabel] | None = Field(
        default=None,
        description="Unordered pair of component shapes (TwoComponents)",
    )
    size_range: tuple[int, int] | None = Field(
        default=None,
        description="Inclusive component size range (TwoComponents)",
    )
    enforce_edge_count: bool = Field(
        default=True,
        description="Require the exact edge count for KColor",
    )
    strict_sizes: bool = Field(
        default=False,
        description="Require component sizes within size_range (TwoComponents)",
    )
    preset: SizePreset | None = Field(
        default=None,
        description="Preset the parameters were filled from",
    )

    @model_validator(mode="before")
    @classmethod
    def fill_from_preset(cls, data: Any) -> Any:
        """Fill missing parameters from the named size preset."""
        if not isinstance(data, dict):
            return data
        values = dict(data)
        preset = values.get("preset")
        kind = values.get("kind")
        if preset is not None and kind is not None:
            preset_name = preset.value if isinstance(preset, Enum) else str(preset)
            kind_name = kind.value if isinstance(kind, Enum) else str(kind)
            if preset_name not in SIZE_PRESETS:
                raise ValueError(f"unknown size preset {preset_name!r}")
            for key, value in SIZE_PRESETS[preset_name].get(kind_name, {}).items():
                values.setdefault(key, value)
        if values.get("n") is None and values.get("part_sizes") is not None:
            sizes = values["part_sizes"]
            values["n"] = int(sizes[0]) + int(sizes[1])
        return values

    @model_validator(mode="after")
    def validate_required(self) -> "RuleSpec":
        """Ensure the parameters required by the kind are present."""
        missing = [name for name in REQUIRED_PARAMS[self.kind] if getattr(self, name) is None]
        if missing:
            raise ValueError(f"{self.kind.value} requires {', '.join(missing)}")
        if self.part_sizes is not None and min(self.part_sizes) < 0:
            raise ValueError("part sizes must be nonnegative")
        if self.kind == RuleKind.BIPARTITE and self.part_sizes is not None:
            if self.n != sum(self.part_sizes):
                raise ValueError("n must equal |U| + |V|")
        if self.size_range is not None:
            low, high = self.size_range
            if low < 1 or low > high:
                raise ValueError("size_range must be a nonempty range of positive sizes")
        if self.component_kinds is not None and ShapeLabel.NEITHER in self.component_kinds:
            raise ValueError("component kinds must be Tree or Cycle")
        return self

    @classmethod
    def from_preset(cls, kind: RuleKind | str, preset: SizePreset | str) -> "RuleSpec":
        return cls(kind=RuleKind(kind), preset=SizePreset(preset))

    def with_preset(self, preset: SizePreset | str) -> "RuleSpec":
        """Re-resolve this rule's size parameters from another preset."""
        return RuleSpec(
            kind=self.kind,
            preset=SizePreset(preset),
            enforce_edge_count=self.enforce_edge_count,
            strict_sizes=self.strict_sizes,
        )

    @property
    def label(self) -> str:
        """Short human-readable label, e.g. ``Planar(n=15, m=24)``."""
        parts: list[str] = []
        if self.kind == RuleKind.BIPARTITE and self.part_sizes is not None:
            parts.append(f"U={self.part_sizes[0]}, V={self.part_sizes[1]}")
        elif self.kind == RuleKind.TWO_COMPONENTS and self.component_kinds is not None:
            parts.append("+".join(shape.value for shape in self.component_kinds))
        else:
            for name in ("n", "m", "k"):
                value = getattr(self, name)
                if value is not None:
                    parts.append(f"{name}={value}")
        return f"{self.kind.value}({', '.join(parts)})"

    def check_coherent(self) -> None:
        """Raise SpecMismatch when parameters cannot describe any graph class."""
        n = self.n or 0
        k = self.k or 0
        if self.kind == RuleKind.CYCLE and n < 3:
            raise SpecMismatch("cycle needs at least 3 nodes", field="n")
        if self.kind == RuleKind.WHEEL and n < 4:
            raise SpecMismatch("wheel needs at least 4 nodes", field="n")
        if self.kind == RuleKind.K_REGULAR and k >= n:
            raise SpecMismatch(f"degree {k} impossible on {n} nodes", field="k")
        if self.kind == RuleKind.COMPONENTS and k > n:
            raise SpecMismatch(f"{k} components impossible on {n} nodes", field="k")
        if self.m is not None and self.m > n * (n - 1) // 2:
            raise SpecMismatch(f"{self.m} edges impossible on {n} nodes", field="m")
        if self.kind == RuleKind.TWO_COMPONENTS and self.size_range is not None:
            if ShapeLabel.CYCLE in (self.component_kinds or ()) and self.size_range[1] < 3:
                raise SpecMismatch("cycle components need at least 3 nodes", field="size_range")


class ValidityReport(BaseModel):
    """Verdict of a rule check with an optional certificate."""

    valid: bool = Field(..., description="Whether the graph satisfies the rule")
    reason: str = Field(default="ok", description="Machine-readable reason code")
    witness: dict[str, Any] | None = Field(
        default=None,
        description="Certificate: colouring, bipartition, hub or obstruction edges",
    )

    @classmethod
    def ok(cls, witness: dict[str, Any] | None = None) -> "ValidityReport":
        return cls(valid=True, reason="ok", witness=witness)

    @classmethod
    def fail(cls, reason: str, witness: dict[str, Any] | None = None) -> "ValidityReport":
        return cls(valid=False, reason=reason, witness=witness)


class ProbabilityEstimate(BaseModel):
    """Monte-Carlo probability with its binomial standard error."""

    probability: float = Field(..., ge=0.0, le=1.0)
    standard_error: float = Field(..., ge=0.0)
    samples: int = Field(..., ge=1)
    hits: int = Field(..., ge=0)

    def __str__(self) -> str:
        return f"{self.probability:.4f} ± {self.standard_error:.4f} ({self.hits}/{self.samples})"
