"""Experiment orchestration: repeated trials per report cell, then aggregation.

Every trial draws its inputs from a seed stream addressed only by the master
seed and the trial index, so concurrency and trial count never change what a
given trial sees. Transcripts are persisted as trials finish; aggregation is
a deterministic pass over the finished trials.
"""

import asyncio
import time
from collections import defaultdict
from collections.abc import Awaitable, Callable
from dataclasses import dataclass, field, replace

import structlog

from graphbench.config.constants import (
    DEMONSTRATION_P,
    MISSING_CELL,
    SEED_DEMONSTRATION,
    SEED_EXEMPLARS,
    SEED_INPUT_SET,
    SEED_MOLECULES,
    SHORT_OUTPUT_REASON,
)
from graphbench.config.settings import Settings, get_settings
from graphbench.distributions import estimate_p_gen, sample_input_set
from graphbench.errors import EndpointError, NoClassifiableGraphs, NoValidGraphs
from graphbench.evaluation import aggregate, identity_disagrees, novel_rate, unique_rate, valid_rate
from graphbench.llm import ChatCompletionClient, CompletionClient, ReplayClient, TranscriptStore
from graphbench.models import (
    DenominatorMode,
    DistributionSpec,
    Graph,
    ParsedResponse,
    PromptBundle,
    PromptStyle,
    PropertySettings,
    ReportCell,
    ReportColumn,
    ReportRow,
    ReportTable,
    RuleSpec,
    RunConfig,
    SweepParameter,
    TaskFamily,
    TrialOutcome,
    WorkedExample,
)
from graphbench.molecules import (
    CommandCanonicalizer,
    build_scorer,
    load_dataset,
    molecule_novel_unique,
    rectify,
    sample_positives,
    score_molecules,
)
from graphbench.observability import RunTracker, TrialMetrics
from graphbench.prompts import (
    build_distribution_prompt,
    build_property_prompt,
    build_rule_prompt,
    parse_response,
    template_hash,
)
from graphbench.rules import generate_exemplars, validate_rule
from graphbench.utils import SeedStream

logger = structlog.get_logger(__name__)

TaskSpec = RuleSpec | DistributionSpec | PropertySettings
Evaluator = Callable[[ParsedResponse, "TrialRecord"], Awaitable[None]]

DEFAULT_SETTING = "default"


@dataclass(frozen=True)
class Setting:
    """One report row group: a sweep value applied to the run configuration."""

    label: str
    temperature: float
    requested_count: int
    rules: tuple[RuleSpec, ...]
    distributions: tuple[DistributionSpec, ...]


@dataclass
class TrialRecord:
    """Outcome of one trial, before aggregation."""

    setting: str
    task: str
    style: PromptStyle
    index: int
    status: str = "completed"
    empty: bool = False
    values: dict[str, float] = field(default_factory=dict)
    disagreement: bool = False
    clamped: bool = False
    error: str | None = None

    @property
    def request_id(self) -> str:
        return f"{self.setting}/{self.task}/{self.style.value}/trial-{self.index}"

    @property
    def included(self) -> bool:
        return self.status not in ("failed", "short")


def resolve_settings(config: RunConfig) -> list[Setting]:
    """Row settings in sweep order; a single ``default`` setting without a sweep."""
    base = Setting(
        label=DEFAULT_SETTING,
        temperature=config.effective_temperature,
        requested_count=config.requested_count,
        rules=tuple(config.rules),
        distributions=tuple(config.distributions),
    )
    sweep = config.sweep
    if sweep is None:
        return [base]

    settings: list[Setting] = []
    for value in sweep.values:
        setting = replace(base, label=sweep.label(value))
        if sweep.parameter == SweepParameter.TEMPERATURE:
            setting = replace(setting, temperature=float(value))
        elif sweep.parameter == SweepParameter.REQUESTED_COUNT:
            setting = replace(setting, requested_count=int(value))
        elif sweep.parameter == SweepParameter.SIZE_PRESET:
            setting = replace(setting, rules=tuple(rule.with_preset(str(value)) for rule in base.rules))
        else:
            setting = replace(
                setting,
                distributions=tuple(spec.model_copy(update={"p": float(value)}) for spec in base.distributions),
            )
        settings.append(setting)
    return settings


def task_label(spec: TaskSpec, parameter: SweepParameter | None = None) -> str:
    """Column label; drops the swept parameter so columns line up across settings."""
    if isinstance(spec, RuleSpec):
        return spec.kind.value if parameter == SweepParameter.SIZE_PRESET else spec.label
    if isinstance(spec, DistributionSpec):
        return spec.task.value if parameter == SweepParameter.P else spec.label
    return spec.label


def build_client(config: RunConfig, settings: Settings | None = None) -> CompletionClient:
    """Replay client for a transcript store, otherwise a live endpoint client.

    A configuration without an endpoint falls back to the one in the settings.
    """
    if config.replay_store is not None:
        return ReplayClient(TranscriptStore(config.replay_store))
    settings = settings or get_settings()
    endpoint = config.resolve_endpoint(settings.default_endpoint())
    assert endpoint is not None
    return ChatCompletionClient(endpoint, settings=settings)


class ExperimentRunner:
    """Runs every (setting, task, style, trial) of a configuration."""

    def __init__(
        self,
        config: RunConfig,
        client: CompletionClient,
        settings: Settings | None = None,
    ):
        settings = settings or get_settings()
        self.config = config
        self.client = client
        self.settings = resolve_settings(config)
        self.parameter = config.sweep.parameter if config.sweep else None
        self.store = TranscriptStore(config.output_dir / settings.transcripts_filename)
        self.persist = config.replay_store is None or (
            config.replay_store.resolve() != self.store.path.resolve()
        )
        self.tracker = RunTracker()

        self.molecules = config.molecules
        if config.family == TaskFamily.PROPERTY:
            assert self.molecules is not None
            self.dataset = load_dataset(
                self.molecules.dataset_path,
                self.molecules.smiles_column,
                self.molecules.label_column,
            )
            self.scorer = build_scorer(self.molecules.scorer)
            self.rectification = self.molecules.confusion_matrix.to_rectification_model()
            self.canonicalizer = (
                CommandCanonicalizer(self.molecules.canonicalizer) if self.molecules.canonicalizer else None
            )

    def tasks(self, setting: Setting) -> list[tuple[str, TaskSpec]]:
        specs: list[TaskSpec]
        if self.config.family == TaskFamily.RULE:
            specs = list(setting.rules)
        elif self.config.family == TaskFamily.DISTRIBUTION:
            specs = list(setting.distributions)
        else:
            assert self.molecules is not None
            specs = [self.molecules]
        return [(task_label(spec, self.parameter), spec) for spec in specs]

    async def run(self) -> ReportTable:
        """Execute all trials and aggregate them into a report table."""
        if self.persist:
            self.store.path.unlink(missing_ok=True)
        jobs = [
            self._run_trial(setting, label, spec, style, index)
            for setting in self.settings
            for label, spec in self.tasks(setting)
            for style in self.config.styles
            for index in range(1, self.config.trial_count + 1)
        ]
        logger.info(
            "Run started",
            name=self.config.name,
            family=self.config.family.value,
            trials=len(jobs),
            output_dir=str(self.config.output_dir),
        )
        records = await asyncio.gather(*jobs)
        logger.info("Run finished", **self.tracker.get_summary())
        return self._build_table(list(records))

    async def _run_trial(
        self,
        setting: Setting,
        label: str,
        spec: TaskSpec,
        style: PromptStyle,
        index: int,
    ) -> TrialRecord:
        record = TrialRecord(setting=setting.label, task=label, style=style, index=index)
        stream = SeedStream(self.config.master_seed).child(index)
        start = time.perf_counter()

        bundle, evaluate = self._prepare(spec, style, stream, setting.requested_count)
        try:
            transcript = await self.client.complete_transcript(
                bundle,
                record.request_id,
                stream.lineage,
                temperature=setting.temperature,
            )
        except EndpointError as e:
            record.status = "failed"
            record.error = f"{e.code}: {e.message}"
            self.tracker.record(
                TrialMetrics(
                    cell=record.request_id,
                    status=record.status,
                    latency_ms=(time.perf_counter() - start) * 1000,
                    error=record.error,
                )
            )
            return record

        if self.persist:
            await self.store.append(transcript)

        parsed = parse_response(transcript.response_text, bundle.expected_output)
        record.empty = parsed.is_empty
        if record.empty:
            record.status = "empty"
        if self.config.missing_if_short and parsed.returned_count < bundle.expected_output.count:
            record.status = "short"
        if record.included:
            await evaluate(parsed, record)

        self.tracker.record(
            TrialMetrics(
                cell=record.request_id,
                status=record.status,
                latency_ms=transcript.duration_ms,
                prompt_tokens=transcript.usage.prompt_tokens,
                completion_tokens=transcript.usage.completion_tokens,
                items_returned=parsed.returned_count,
                retries=len(transcript.retries),
            )
        )
        return record

    def _prepare(
        self,
        spec: TaskSpec,
        style: PromptStyle,
        stream: SeedStream,
        count: int,
    ) -> tuple[PromptBundle, Evaluator]:
        if isinstance(spec, RuleSpec):
            return self._prepare_rule(spec, style, stream, count)
        if isinstance(spec, DistributionSpec):
            return self._prepare_distribution(spec, style, stream)
        return self._prepare_property(spec, style, stream, count)

    def _prepare_rule(
        self,
        spec: RuleSpec,
        style: PromptStyle,
        stream: SeedStream,
        count: int,
    ) -> tuple[PromptBundle, Evaluator]:
        exemplars: list[Graph] = []
        if style.is_few_shot:
            exemplars = generate_exemplars(
                spec, self.config.exemplar_count, stream.child(SEED_EXEMPLARS).seed()
            )
        bundle = build_rule_prompt(spec, style, exemplars, count)

        async def evaluate(parsed: ParsedResponse, record: TrialRecord) -> None:
            verdicts = [validate_rule(spec, graph).valid for graph in parsed.graphs]
            outcome = TrialOutcome(
                requested_count=count,
                graphs=parsed.graphs,
                verdicts=verdicts,
                exemplars=exemplars,
            )
            record.values["Valid"] = valid_rate(outcome, self.config.denominator)
            record.values["Novel"] = novel_rate(outcome, self.config.identity)
            try:
                record.values["Unique"] = unique_rate(outcome, self.config.identity, self.config.unique_scope)
            except NoValidGraphs:
                pass
            record.disagreement = identity_disagrees(outcome, self.config.unique_scope)

        return bundle, evaluate

    def _prepare_distribution(
        self,
        spec: DistributionSpec,
        style: PromptStyle,
        stream: SeedStream,
    ) -> tuple[PromptBundle, Evaluator]:
        input_set = sample_input_set(spec, stream.child(SEED_INPUT_SET).seed())
        worked_example = None
        if style.is_few_shot or style.is_cot:
            demo_spec = spec.model_copy(update={"p": DEMONSTRATION_P})
            worked_example = WorkedExample(
                graphs=sample_input_set(demo_spec, stream.child(SEED_DEMONSTRATION).seed())
            )
        bundle = build_distribution_prompt(
            spec,
            style,
            [item.graph for item in input_set],
            worked_example=worked_example,
        )

        async def evaluate(parsed: ParsedResponse, record: TrialRecord) -> None:
            if parsed.p_estimate is not None:
                record.values["p_pred"] = 100.0 * parsed.p_estimate
            classifiable = 0
            try:
                result = estimate_p_gen(
                    spec.task,
                    parsed.graphs,
                    spec.size_range if spec.strict_sizes else None,
                )
                assert result.p_gen is not None
                record.values["p_gen"] = 100.0 * result.p_gen
                classifiable = result.classifiable
            except NoClassifiableGraphs:
                pass
            if self.config.denominator == DenominatorMode.RETURNED:
                denominator = len(parsed.graphs)
            else:
                denominator = spec.set_size
            record.values["Valid"] = 100.0 * classifiable / denominator if denominator else 0.0

        return bundle, evaluate

    def _prepare_property(
        self,
        spec: PropertySettings,
        style: PromptStyle,
        stream: SeedStream,
        count: int,
    ) -> tuple[PromptBundle, Evaluator]:
        positives = sample_positives(
            self.dataset, spec.positive_count, stream.child(SEED_MOLECULES).seed()
        )
        bundle = build_property_prompt(positives, style, count, property_label=spec.label)

        async def evaluate(parsed: ParsedResponse, record: TrialRecord) -> None:
            if not parsed.smiles:
                return
            scores = await score_molecules(parsed.smiles, self.scorer)
            rectified = rectify(scores.mean, self.rectification)
            canonical = None
            if self.canonicalizer is not None:
                canonical = await self.canonicalizer.canonicalize(parsed.smiles + positives)
            novel, unique = molecule_novel_unique(parsed.smiles, positives, canonical)
            record.values.update(
                {
                    "C_M": 100.0 * scores.mean,
                    "C": 100.0 * rectified.value,
                    "Novel": novel,
                    "Unique": unique,
                }
            )
            record.clamped = rectified.clamped

        return bundle, evaluate

    def _cell(self, records: list[TrialRecord], metric: str) -> ReportCell:
        records = sorted(records, key=lambda record: record.index)
        rates = [record.values[metric] for record in records if record.included and metric in record.values]
        notes: list[str] = []
        if records and all(record.empty for record in records):
            notes.append("no parseable output in any trial")
        if rates:
            return ReportCell(stats=aggregate(rates), notes=notes)
        if records and all(record.status == "failed" for record in records):
            return ReportCell.missing("all trials failed", notes)
        if any(record.status == "short" for record in records):
            return ReportCell.missing(SHORT_OUTPUT_REASON, notes)
        return ReportCell.missing(f"{metric} undefined in every trial", notes)

    def _build_table(self, records: list[TrialRecord]) -> ReportTable:
        by_cell: dict[tuple[str, str, PromptStyle], list[TrialRecord]] = defaultdict(list)
        for record in records:
            by_cell[(record.setting, record.task, record.style)].append(record)

        columns = [
            ReportColumn(task=label, metric=metric)
            for label, _ in self.tasks(self.settings[0])
            for metric in self.config.active_metrics
        ]
        rows = [
            ReportRow(
                setting=setting.label,
                style=style.display_name,
                cells=[
                    self._cell(by_cell[(setting.label, column.task, style)], column.metric)
                    for column in columns
                ],
            )
            for setting in self.settings
            for style in self.config.styles
        ]
        table = ReportTable(title=self.config.name, columns=columns, rows=rows)
        table.footer = self._footer(records, table)
        return table

    def _footer(self, records: list[TrialRecord], table: ReportTable) -> list[str]:
        config = self.config
        temperatures = sorted({setting.temperature for setting in self.settings})
        footer = [
            f"Trials per cell: {config.trial_count}",
            f"Valid-rate denominator: {config.denominator.value} count",
            f"Identity: {config.identity.value}; unique rate over {config.unique_scope.value} graphs",
            f"Template hash: {template_hash()[:16]}",
            "Temperature: " + ", ".join(f"{value:g}" for value in temperatures),
            f"Failed trials: {sum(1 for record in records if record.status == 'failed')}",
            f"Trials without parseable output: {sum(1 for record in records if record.empty)}",
        ]
        if config.missing_if_short:
            footer.append(f"Trials excluded as short: {sum(1 for record in records if record.status == 'short')}")
        if config.family == TaskFamily.DISTRIBUTION:
            footer.append("p_pred and p_gen in percent")
        if config.family == TaskFamily.PROPERTY:
            footer.append(f"Clamped rectifications: {sum(1 for record in records if record.clamped)}")
        if config.family == TaskFamily.RULE:
            disagreeing = sorted(
                {
                    f"{record.setting}/{record.task}/{record.style.display_name}"
                    for record in records
                    if record.disagreement
                }
            )
            footer.append("Labeled and isomorphism identity disagree in: " + (", ".join(disagreeing) or "none"))
        reasons = sorted(
            {
                cell.missing_reason
                for row in table.rows
                for cell in row.cells
                if cell.missing_reason is not None
            }
        )
        footer.extend(f"{MISSING_CELL} {reason}" for reason in reasons)
        return footer


async def run(
    config: RunConfig,
    client: CompletionClient,
    settings: Settings | None = None,
) -> ReportTable:
    """Run a configuration against a client and return its report table."""
    return await ExperimentRunner(config, client, settings).run()
