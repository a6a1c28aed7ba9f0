"""Tests for data models."""

from pathlib import Path

import networkx as nx
import pytest
from pydantic import ValidationError

from graphbench.errors import ConfigError, SpecMismatch
from graphbench.models import (
    AggregateStats,
    ConfusionMatrix,
    DistributionSpec,
    DistributionTask,
    Graph,
    MoleculeRecord,
    PromptStyle,
    ReportCell,
    ReportColumn,
    ReportRow,
    ReportTable,
    RuleKind,
    RuleSpec,
    RunConfig,
    ScorerConfig,
)

CONFIG_DIR = Path(__file__).resolve().parents[2] / "configs"


class TestGraph:
    """Tests for Graph model."""

    def test_from_edges_normalizes(self):
        """Test orientation and duplicates are normalized."""
        warnings: list[str] = []
        graph = Graph.from_edges(3, [(2, 1), (1, 2), (3, 2)], warnings)
        assert graph.edges == ((1, 2), (2, 3))
        assert warnings == ["duplicate_edges"]

    def test_unsorted_edges_rejected(self):
        """Test direct construction requires sorted unique edges."""
        with pytest.raises(ValidationError):
            Graph(node_count=3, edges=((2, 3), (1, 2)))

    def test_degrees_and_adjacency(self, star5):
        """Test degree and neighbour views."""
        assert star5.degrees()[1] == 4
        assert star5.adjacency()[2] == {1}

    def test_networkx_round_trip(self, house):
        """Test conversion through networkx keeps the graph."""
        zero_based = nx.relabel_nodes(house.to_networkx(), lambda node: node - 1)
        assert Graph.from_networkx(zero_based) == house

    def test_isolated_nodes_kept(self):
        """Test node_count survives when trailing nodes are isolated."""
        graph = Graph.from_edges(5, [(1, 2)])
        assert list(graph.nodes) == [1, 2, 3, 4, 5]
        assert graph.to_networkx().number_of_nodes() == 5


class TestRuleSpec:
    """Tests for RuleSpec model."""

    def test_preset_fills_parameters(self):
        """Test presets supply the size parameters."""
        planar = RuleSpec.from_preset("Planar", "Medium")
        assert (planar.n, planar.m) == (15, 24)
        assert planar.label == "Planar(n=15, m=24)"

    def test_explicit_parameters_win(self):
        """Test explicit values override the preset."""
        spec = RuleSpec.model_validate({"kind": "Tree", "preset": "Medium", "n": 8})
        assert spec.n == 8

    def test_with_preset(self):
        """Test a rule can be rescaled."""
        assert RuleSpec.from_preset("Tree", "Medium").with_preset("Large").n == 20

    def test_bipartite_n_derived(self):
        """Test n follows the part sizes."""
        spec = RuleSpec(kind=RuleKind.BIPARTITE, part_sizes=(2, 3))
        assert spec.n == 5
        assert spec.label == "Bipartite(U=2, V=3)"

    def test_missing_parameter(self):
        """Test required parameters are enforced."""
        with pytest.raises(ValidationError):
            RuleSpec(kind=RuleKind.PLANAR, n=10)

    def test_unknown_preset(self):
        """Test an unknown preset name is refused."""
        with pytest.raises(ValidationError):
            RuleSpec.model_validate({"kind": "Tree", "preset": "Huge"})

    @pytest.mark.parametrize(
        "spec",
        [
            RuleSpec(kind=RuleKind.CYCLE, n=2),
            RuleSpec(kind=RuleKind.WHEEL, n=3),
            RuleSpec(kind=RuleKind.K_REGULAR, n=4, k=4),
            RuleSpec(kind=RuleKind.PLANAR, n=4, m=7),
        ],
    )
    def test_incoherent(self, spec):
        """Test parameters no graph can satisfy."""
        with pytest.raises(SpecMismatch) as exc_info:
            spec.check_coherent()
        assert exc_info.value.code == "spec_mismatch"


class TestDistributionSpec:
    """Tests for DistributionSpec model."""

    def test_defaults(self):
        """Test default size range and set size."""
        spec = DistributionSpec(task=DistributionTask.MOTIF, p=0.4)
        assert spec.size_range == (5, 7)
        assert spec.set_size == 10
        assert spec.label == "Motif(p=0.4)"

    @pytest.mark.parametrize("size_range", [(7, 5), (2, 6)])
    def test_bad_size_range(self, size_range):
        """Test empty ranges and ranges too small for cycles."""
        with pytest.raises(ValidationError):
            DistributionSpec(task=DistributionTask.TREES_OR_CYCLES, p=0.4, size_range=size_range)

    def test_p_bounds(self):
        """Test p outside [0, 1] is refused."""
        with pytest.raises(ValidationError):
            DistributionSpec(task=DistributionTask.MOTIF, p=1.5)


class TestMoleculeModels:
    """Tests for molecule models."""

    def test_record_strips(self):
        """Test SMILES whitespace is trimmed."""
        assert MoleculeRecord(smiles=" CCO ", label=1).smiles == "CCO"

    def test_record_rejects_bad_syntax(self):
        """Test the failure reason is the syntax code."""
        with pytest.raises(ValidationError) as exc_info:
            MoleculeRecord(smiles="C1CC", label=0)
        assert "unmatched_ring_bond" in str(exc_info.value)

    def test_confusion_matrix_needs_both_classes(self):
        """Test a matrix without positives is refused."""
        with pytest.raises(ValidationError):
            ConfusionMatrix(tn=5, fp=1, fn=0, tp=0)

    def test_rectification_model(self):
        """Test conversion to rates."""
        model = ConfusionMatrix(tn=8, fp=2, fn=1, tp=3).to_rectification_model()
        assert model.fpr == pytest.approx(0.2)
        assert model.tpr == pytest.approx(0.75)
        assert model.well_posed

    def test_scorer_config_targets(self):
        """Test command and HTTP scorers need their target."""
        with pytest.raises(ValidationError):
            ScorerConfig(kind="command")
        with pytest.raises(ValidationError):
            ScorerConfig(kind="http")


class TestRunConfig:
    """Tests for RunConfig model."""

    @pytest.fixture
    def base(self, test_endpoint):
        return {
            "family": "rule",
            "rules": [{"kind": "Tree", "preset": "Medium"}],
            "styles": ["ZeroShot"],
            "endpoint": test_endpoint,
        }

    def test_defaults(self, base):
        """Test default counts and family temperature."""
        config = RunConfig.model_validate(base)
        assert config.trial_count == 10
        assert config.requested_count == 10
        assert config.active_metrics == ("Valid", "Unique", "Novel")
        assert config.resolve_endpoint().temperature == 0.8

    def test_temperature_override(self, base):
        """Test the run temperature reaches the endpoint."""
        config = RunConfig.model_validate({**base, "temperature": 0.3})
        assert config.resolve_endpoint().temperature == 0.3

    def test_family_needs_tasks(self, base):
        """Test a distribution run without distributions is refused."""
        with pytest.raises(ValidationError):
            RunConfig.model_validate({**base, "family": "distribution"})

    def test_endpoint_or_replay(self, base, tmp_path):
        """Test an endpoint and a replay store together are refused."""
        with pytest.raises(ValidationError):
            RunConfig.model_validate({**base, "replay_store": tmp_path / "t.jsonl"})

    def test_default_endpoint(self, base, test_endpoint):
        """Test a run without an endpoint uses the supplied default."""
        config = RunConfig.model_validate({**base, "endpoint": None})
        assert config.resolve_endpoint() is None
        resolved = config.resolve_endpoint(test_endpoint)
        assert resolved.model_name == "test-model"
        assert resolved.temperature == config.effective_temperature

    def test_property_styles(self, base, tmp_path):
        """Test property runs refuse zero-shot styles."""
        data = {
            **base,
            "family": "property",
            "rules": [],
            "molecules": {"dataset_path": tmp_path / "m.csv"},
        }
        with pytest.raises(ValidationError):
            RunConfig.model_validate(data)
        config = RunConfig.model_validate({**data, "styles": ["FewShot"]})
        assert config.active_metrics == ("C_M", "C", "Novel", "Unique")
        assert config.resolve_endpoint().temperature == 0.5

    def test_unknown_metric(self, base):
        """Test metrics outside the family are refused."""
        with pytest.raises(ValidationError):
            RunConfig.model_validate({**base, "metrics": ["p_gen"]})

    @pytest.mark.parametrize(
        "sweep",
        [
            {"parameter": "temperature", "values": [3.0]},
            {"parameter": "requested_count", "values": [0]},
            {"parameter": "size_preset", "values": ["Tiny"]},
            {"parameter": "p", "values": [0.5]},
        ],
    )
    def test_bad_sweep(self, base, sweep):
        """Test sweep values and families are checked."""
        with pytest.raises(ValidationError):
            RunConfig.model_validate({**base, "sweep": sweep})

    def test_profiles(self, base, test_endpoint):
        """Test a named profile supplies the endpoint."""
        data = {**base, "endpoint": None, "profile": "local", "profiles": {"local": test_endpoint}}
        assert RunConfig.model_validate(data).resolve_endpoint().model_name == "test-model"
        with pytest.raises(ValidationError):
            RunConfig.model_validate({**data, "profile": "other"})

    def test_with_overrides(self, base, tmp_path):
        """Test switching a run to replay."""
        config = RunConfig.model_validate(base).with_overrides(
            endpoint=None, replay_store=tmp_path / "t.jsonl"
        )
        assert config.resolve_endpoint() is None

    @pytest.mark.parametrize("name", sorted(path.name for path in CONFIG_DIR.glob("*.toml")))
    def test_shipped_configs_load(self, name):
        """Test every example configuration validates."""
        config = RunConfig.from_toml(CONFIG_DIR / name)
        assert config.styles

    def test_from_toml_overrides(self, tmp_path):
        """Test top-level overrides and unset values."""
        config = RunConfig.from_toml(CONFIG_DIR / "rules.toml", {"master_seed": 9, "trial_count": None})
        assert config.master_seed == 9
        assert config.trial_count == 10

    def test_from_toml_unreadable(self, tmp_path):
        """Test a broken file is a configuration error."""
        path = tmp_path / "broken.toml"
        path.write_text("family = [", encoding="utf-8")
        with pytest.raises(ConfigError) as exc_info:
            RunConfig.from_toml(path)
        assert exc_info.value.field == "config"


class TestReportTable:
    """Tests for report models."""

    def test_cell_state(self):
        """Test a cell is either filled or missing."""
        with pytest.raises(ValidationError):
            ReportCell()
        assert ReportCell.missing("no data").render() == "---"
        filled = ReportCell(stats=AggregateStats(mean=50.0, trial_count=1))
        assert filled.render() == "50.0"

    def test_row_shape(self):
        """Test rows must match the columns."""
        with pytest.raises(ValidationError):
            ReportTable(
                title="t",
                columns=[ReportColumn(task="Tree(n=15)", metric="Valid")],
                rows=[ReportRow(setting="default", style=PromptStyle.ZERO_SHOT.display_name)],
            )
