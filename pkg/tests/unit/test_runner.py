"""Tests for experiment orchestration and report rendering."""

import pytest

from graphbench.config.constants import MISSING_CELL, SHORT_OUTPUT_REASON
from graphbench.errors import ConfigError, EndpointUnavailable
from graphbench.graphs import serialize_graph
from graphbench.config import Settings
from graphbench.llm import ChatCompletionClient, ReplayClient, ScriptedClient, TranscriptStore
from graphbench.models import (
    ConfusionMatrix,
    DistributionSpec,
    DistributionTask,
    Graph,
    PromptStyle,
    RuleSpec,
    RunConfig,
    SweepParameter,
)
from graphbench.molecules import rectify
from graphbench.runner import (
    ExperimentRunner,
    build_client,
    emit_report,
    load_report,
    render_csv,
    render_text,
    resolve_settings,
    run,
    task_label,
)

TREE = RuleSpec.from_preset("Tree", "Medium")


@pytest.fixture
def make_config(tmp_path, test_endpoint):
    """Build a run configuration writing into a temporary directory."""

    def factory(**overrides):
        data = {
            "name": "test run",
            "family": "rule",
            "rules": [TREE],
            "styles": [PromptStyle.ZERO_SHOT],
            "trial_count": 3,
            "endpoint": test_endpoint,
            "output_dir": tmp_path / "run",
        }
        data.update(overrides)
        return RunConfig.model_validate(data)

    return factory


def cell(table, metric, task=None, style="Zero-shot", setting="default"):
    return table.cell(setting, style, task or TREE.label, metric)


class TestRuleRuns:
    """Tests for rule-based runs."""

    async def test_all_valid(self, make_config, scripted_client, test_settings):
        """Test ten valid trees per trial give a full valid rate."""
        table = await run(make_config(), scripted_client, test_settings)
        assert cell(table, "Valid").render() == "100.0 ± 0.0"
        assert cell(table, "Novel").render() == "100.0 ± 0.0"
        assert cell(table, "Unique").render() == "10.0 ± 0.0"

    async def test_transcripts_persisted(self, make_config, scripted_client, test_settings):
        """Test every trial is written to the transcript store."""
        config = make_config()
        await run(config, scripted_client, test_settings)
        store = TranscriptStore(config.output_dir / test_settings.transcripts_filename)
        assert len(store.request_ids()) == 3

    async def test_no_parseable_output(self, make_config, test_settings):
        """Test empty replies score 0 and are noted."""
        table = await run(make_config(), ScriptedClient("I cannot do that."), test_settings)
        valid = cell(table, "Valid")
        assert valid.render() == "0.0 ± 0.0"
        assert "no parseable output in any trial" in valid.notes
        assert cell(table, "Unique").render() == MISSING_CELL
        assert "Trials without parseable output: 3" in table.footer
        assert f"{MISSING_CELL} Unique undefined in every trial" in table.footer

    async def test_failed_trials_excluded(self, make_config, tree_reply, test_settings):
        """Test endpoint failures drop out of the aggregate."""

        def script(request_id, bundle):
            if request_id.endswith("trial-2"):
                raise EndpointUnavailable("down", status_code=503)
            return tree_reply

        table = await run(make_config(), ScriptedClient(script), test_settings)
        valid = cell(table, "Valid")
        assert valid.stats is not None
        assert valid.stats.trial_count == 2
        assert "Failed trials: 1" in table.footer

    async def test_all_failed(self, make_config, test_settings):
        """Test a cell with only failures is missing."""

        def script(request_id, bundle):
            raise EndpointUnavailable("down")

        table = await run(make_config(), ScriptedClient(script), test_settings)
        assert cell(table, "Valid").missing_reason == "all trials failed"

    async def test_short_output_missing(self, make_config, test_settings):
        """Test short replies become missing cells when configured."""
        path = Graph.from_edges(15, [(i, i + 1) for i in range(1, 15)])
        client = ScriptedClient("\n".join(serialize_graph(path) for _ in range(5)))
        table = await run(make_config(missing_if_short=True), client, test_settings)
        valid = cell(table, "Valid")
        assert valid.render() == MISSING_CELL
        assert valid.missing_reason == SHORT_OUTPUT_REASON

    async def test_partial_output_counts_requested(self, make_config, test_settings):
        """Test five valid of ten requested scores 50 by default."""
        path = Graph.from_edges(15, [(i, i + 1) for i in range(1, 15)])
        client = ScriptedClient("\n".join(serialize_graph(path) for _ in range(5)))
        table = await run(make_config(), client, test_settings)
        assert cell(table, "Valid").render() == "50.0 ± 0.0"

    async def test_trial_inputs_depend_on_index_only(self, make_config, tree_reply, test_settings):
        """Test a trial's prompt does not change with the trial count."""
        prompts: dict[int, dict[str, str]] = {}

        for trials in (2, 4):
            seen: dict[str, str] = {}

            def script(request_id, bundle, seen=seen):
                seen[request_id] = bundle.user_text
                return tree_reply

            config = make_config(styles=[PromptStyle.FEW_SHOT], trial_count=trials)
            await run(config, ScriptedClient(script), test_settings)
            prompts[trials] = seen

        for request_id, text in prompts[2].items():
            assert prompts[4][request_id] == text
        assert len(set(prompts[4].values())) == 4

    async def test_rows_per_style(self, make_config, scripted_client, test_settings):
        """Test one row per prompt style in configuration order."""
        styles = [PromptStyle.ZERO_SHOT, PromptStyle.FEW_SHOT_COT]
        table = await run(make_config(styles=styles, trial_count=1), scripted_client, test_settings)
        assert [row.style for row in table.rows] == ["Zero-shot", "Few-shot+CoT"]
        assert [column.metric for column in table.columns] == ["Valid", "Unique", "Novel"]

    async def test_metric_subset(self, make_config, scripted_client, test_settings):
        """Test only the selected metrics become columns."""
        table = await run(make_config(metrics=["Valid"], trial_count=1), scripted_client, test_settings)
        assert [column.header for column in table.columns] == [f"{TREE.label} Valid"]


class TestDistributionRuns:
    """Tests for distribution-based runs."""

    async def test_estimates(self, make_config, test_settings):
        """Test p_pred, p_gen and validity from a mixed reply."""
        tree = Graph.from_edges(6, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6)])
        cycle = Graph.from_edges(6, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 1)])
        reply = "p = 0.4\n" + "\n".join(serialize_graph(graph) for graph in [tree, cycle] * 5)
        spec = DistributionSpec(task=DistributionTask.TREES_OR_CYCLES, p=0.4)
        config = make_config(family="distribution", rules=[], distributions=[spec])

        table = await run(config, ScriptedClient(reply), test_settings)
        assert cell(table, "p_pred", spec.label).render() == "40.0 ± 0.0"
        assert cell(table, "p_gen", spec.label).render() == "50.0 ± 0.0"
        assert cell(table, "Valid", spec.label).render() == "100.0 ± 0.0"
        assert "p_pred and p_gen in percent" in table.footer

    async def test_p_sweep_columns_line_up(self, make_config, test_settings):
        """Test a p sweep keeps one column per task."""
        spec = DistributionSpec(task=DistributionTask.TREES_OR_CYCLES, p=0.4)
        config = make_config(
            family="distribution",
            rules=[],
            distributions=[spec],
            trial_count=1,
            sweep={"parameter": "p", "values": [0.2, 0.8]},
        )
        table = await run(config, ScriptedClient("p = 0.5"), test_settings)
        assert [row.setting for row in table.rows] == ["p=0.2", "p=0.8"]
        assert {column.task for column in table.columns} == {"TreesOrCycles"}


class TestPropertyRuns:
    """Tests for property-based runs."""

    async def test_scores(self, make_config, molecule_csv, test_settings):
        """Test raw and rectified scores with the stub scorer."""
        config = make_config(
            family="property",
            rules=[],
            styles=[PromptStyle.FEW_SHOT],
            molecules={"dataset_path": molecule_csv, "scorer": {"kind": "constant", "value": 0.5}},
        )
        client = ScriptedClient("CCO\nCCN\nCCC\nC1=CC=CC=C1")
        table = await run(config, client, test_settings)

        expected = 100.0 * rectify(0.5, ConfusionMatrix.published().to_rectification_model()).value
        assert cell(table, "C_M", "MolHIV", "Few-shot").render() == "50.0 ± 0.0"
        assert cell(table, "C", "MolHIV", "Few-shot").stats.mean == pytest.approx(expected)
        assert cell(table, "Novel", "MolHIV", "Few-shot").render() == "75.0 ± 0.0"
        assert cell(table, "Unique", "MolHIV", "Few-shot").render() == "100.0 ± 0.0"
        assert "Clamped rectifications: 0" in table.footer


class TestSettings:
    """Tests for resolve_settings and task_label."""

    def test_default(self, make_config):
        """Test a run without a sweep has one default setting."""
        settings = resolve_settings(make_config())
        assert [setting.label for setting in settings] == ["default"]
        assert settings[0].temperature == 0.8

    def test_temperature_sweep(self, make_config):
        """Test temperature values become settings."""
        config = make_config(sweep={"parameter": "temperature", "values": [0.2, 1.0]})
        settings = resolve_settings(config)
        assert [(setting.label, setting.temperature) for setting in settings] == [("t=0.2", 0.2), ("t=1", 1.0)]

    def test_size_preset_sweep(self, make_config):
        """Test size presets rescale the rules."""
        config = make_config(sweep={"parameter": "size_preset", "values": ["Small", "Large"]})
        small, large = resolve_settings(config)
        assert small.rules[0].n < TREE.n < large.rules[0].n
        assert task_label(small.rules[0], SweepParameter.SIZE_PRESET) == "Tree"

    def test_requested_count_sweep(self, make_config):
        """Test requested counts are applied."""
        config = make_config(sweep={"parameter": "requested_count", "values": [5, 20]})
        assert [setting.requested_count for setting in resolve_settings(config)] == [5, 20]

    def test_runner_uses_output_dir(self, make_config, scripted_client, test_settings):
        """Test the transcript store lives in the output directory."""
        config = make_config()
        runner = ExperimentRunner(config, scripted_client, test_settings)
        assert runner.store.path.parent == config.output_dir


class TestBuildClient:
    """Tests for build_client."""

    def test_configured_endpoint(self, make_config, test_settings):
        """Test the run's own endpoint wins over the settings default."""
        client = build_client(make_config(), test_settings)
        assert isinstance(client, ChatCompletionClient)
        assert client.endpoint.model_name == "test-model"

    def test_settings_endpoint_fallback(self, make_config):
        """Test a run without an endpoint queries the one from the settings."""
        settings = Settings(
            base_url="https://fallback.test/v1",
            model_name="fallback-model",
            api_key_env="FALLBACK_KEY",
            max_tokens=512,
            langsmith_tracing=False,
        )
        client = build_client(make_config(endpoint=None), settings)
        assert isinstance(client, ChatCompletionClient)
        assert client.endpoint.base_url == "https://fallback.test/v1"
        assert client.endpoint.model_name == "fallback-model"
        assert client.endpoint.api_key_env == "FALLBACK_KEY"
        assert client.endpoint.max_tokens == 512
        assert client.endpoint.temperature == 0.8

    def test_replay_store(self, make_config, tmp_path):
        """Test a replay store yields a replay client."""
        config = make_config(endpoint=None, replay_store=tmp_path / "t.jsonl")
        assert isinstance(build_client(config), ReplayClient)


class TestReport:
    """Tests for report rendering and persistence."""

    @pytest.fixture
    async def table(self, make_config, scripted_client, test_settings):
        return await run(make_config(), scripted_client, test_settings)

    def test_text(self, table):
        """Test the text table layout."""
        lines = render_text(table).splitlines()
        assert lines[0] == "test run"
        assert lines[1].startswith("Prompt")
        assert f"{TREE.label} Valid" in lines[1]
        assert lines[3].startswith("Zero-shot")
        assert "100.0 ± 0.0" in lines[3]
        assert "Trials per cell: 3" in lines

    def test_csv(self, table):
        """Test the CSV has a header and one row per report row."""
        lines = render_csv(table).splitlines()
        assert lines[0].split(",")[0] == "Prompt"
        assert len(lines) == 2

    def test_emit_and_load(self, table, tmp_path):
        """Test the saved JSON reloads to the same table."""
        paths = emit_report(table, tmp_path / "out")
        assert [path.name for path in paths] == ["report.txt", "report.csv", "report.json"]
        assert load_report(paths[-1]) == table
        assert paths[0].read_text(encoding="utf-8") == render_text(table)

    def test_unknown_format(self, table, tmp_path):
        """Test an unknown format is refused."""
        with pytest.raises(ConfigError):
            emit_report(table, tmp_path, formats=["html"])

    def test_load_missing(self, tmp_path):
        """Test loading a missing report raises."""
        with pytest.raises(ConfigError):
            load_report(tmp_path / "report.json")

    def test_settings_column(self, table):
        """Test sweep runs get a Setting column."""
        row = table.rows[0].model_copy(update={"setting": "t=0.2"})
        swept = table.model_copy(update={"rows": [row]})
        assert render_text(swept).splitlines()[1].startswith("Setting")
