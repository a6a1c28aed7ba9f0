"""Record a run with a scripted model, then replay it offline.

The replayed report must match the recorded one byte for byte.
"""

import pytest

from graphbench.graphs import serialize_graph
from graphbench.llm import ReplayClient, ScriptedClient
from graphbench.models import DistributionSpec, DistributionTask, PromptStyle, RuleSpec, RunConfig
from graphbench.rules import generate_exemplars
from graphbench.runner import build_client, render_csv, render_text, run


def varied_reply(request_id: str, bundle) -> str:
    """Different valid and invalid graphs per trial so cells have nonzero spread."""
    trial = int(request_id.rsplit("-", 1)[1])
    spec = RuleSpec.from_preset("Tree", "Medium")
    trees = generate_exemplars(spec, 10 - trial, seed=trial)
    cycle = "(15, [" + ", ".join(f"({i}, {i % 15 + 1})" for i in range(1, 16)) + "])"
    return "\n".join([serialize_graph(tree) for tree in trees] + [cycle] * trial)


@pytest.fixture
def rule_config(tmp_path, test_endpoint):
    return RunConfig.model_validate(
        {
            "name": "golden",
            "family": "rule",
            "rules": [{"kind": "Tree", "preset": "Medium"}, {"kind": "Cycle", "preset": "Medium"}],
            "styles": ["ZeroShot", "FewShot", "FewShotCoT"],
            "trial_count": 3,
            "endpoint": test_endpoint,
            "output_dir": tmp_path / "recorded",
        }
    )


class TestGoldenReplay:
    """Replay reproduces recorded reports."""

    async def test_rule_report_identical(self, rule_config, test_settings, tmp_path):
        """Test a rule run replays to the same text and CSV."""
        recorded = await run(rule_config, ScriptedClient(varied_reply), test_settings)

        store = rule_config.output_dir / test_settings.transcripts_filename
        replay_config = rule_config.with_overrides(
            endpoint=None,
            replay_store=store,
            output_dir=tmp_path / "replayed",
        )
        client = build_client(replay_config, test_settings)
        assert isinstance(client, ReplayClient)
        replayed = await run(replay_config, client, test_settings)

        assert render_text(replayed) == render_text(recorded)
        assert render_csv(replayed) == render_csv(recorded)
        assert client.drifted == []
        assert "±" in render_text(recorded)

    async def test_replay_keeps_store(self, rule_config, test_settings):
        """Test replaying into the recording directory leaves the store intact."""
        await run(rule_config, ScriptedClient(varied_reply), test_settings)
        store = rule_config.output_dir / test_settings.transcripts_filename
        before = store.read_text(encoding="utf-8")

        replay_config = rule_config.with_overrides(endpoint=None, replay_store=store)
        await run(replay_config, build_client(replay_config, test_settings), test_settings)
        assert store.read_text(encoding="utf-8") == before

    async def test_distribution_report_identical(self, tmp_path, test_endpoint, test_settings):
        """Test a distribution sweep replays to the same report."""
        config = RunConfig.model_validate(
            {
                "name": "golden distributions",
                "family": "distribution",
                "distributions": [DistributionSpec(task=DistributionTask.TREES_OR_CYCLES, p=0.4)],
                "styles": [PromptStyle.ZERO_SHOT, PromptStyle.FEW_SHOT_COT],
                "trial_count": 2,
                "endpoint": test_endpoint,
                "output_dir": tmp_path / "recorded",
                "sweep": {"parameter": "p", "values": [0.2, 0.8]},
            }
        )
        reply = "p = 0.3\n(5, [(1, 2), (2, 3), (3, 4), (4, 5)])\n(5, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)])"
        recorded = await run(config, ScriptedClient(reply), test_settings)

        replay_config = config.with_overrides(
            endpoint=None,
            replay_store=config.output_dir / test_settings.transcripts_filename,
            output_dir=tmp_path / "replayed",
        )
        replayed = await run(replay_config, build_client(replay_config, test_settings), test_settings)
        assert render_text(replayed) == render_text(recorded)
