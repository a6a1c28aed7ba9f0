"""Monte-Carlo checks on calibration, sampling and classification.

Marked slow; run with: pytest -m slow
"""

import math

import pytest

from graphbench.distributions import classify, sample_graph, sample_input_set
from graphbench.models import DistributionSpec, DistributionTask, RuleSpec
from graphbench.rules import estimate_random_valid_prob
from graphbench.utils import SeedStream

pytestmark = pytest.mark.slow


class TestCalibrationBands:
    """The medium Planar and KColor settings sit in the intended difficulty band."""

    @pytest.mark.parametrize(
        "params",
        [
            {"kind": "Planar", "n": 15, "m": 24},
            {"kind": "KColor", "n": 15, "m": 32, "k": 3},
        ],
    )
    def test_band(self, params):
        """Test a random graph meets the rule 10 to 30 percent of the time."""
        estimate = estimate_random_valid_prob(RuleSpec.model_validate(params), 10_000, seed=0)
        assert 0.10 <= estimate.probability <= 0.30


class TestSamplerFrequencies:
    """Sampled label frequencies match p."""

    @pytest.mark.parametrize("task", list(DistributionTask))
    @pytest.mark.parametrize("p", [0.2, 0.4, 0.6, 0.8])
    def test_empirical_p(self, task, p):
        """Test the positive fraction over 10,000 draws is within three standard errors of p."""
        spec = DistributionSpec(task=task, p=p, set_size=10_000)
        items = sample_input_set(spec, SeedStream(17).child(int(p * 10)).seed())
        observed = sum(1 for item in items if item.label.is_positive) / len(items)
        sigma = math.sqrt(p * (1 - p) / len(items))
        assert abs(observed - p) <= 3 * sigma


class TestClassifierSoundness:
    """Classification recovers every sampled label."""

    @pytest.mark.parametrize("task", list(DistributionTask))
    def test_ten_thousand_samples(self, task):
        """Test 10,000 sampled graphs per task."""
        spec = DistributionSpec(task=task, p=0.5)
        stream = SeedStream(23)
        for index in range(10_000):
            item = sample_graph(spec, stream.child(index).seed())
            assert classify(task, item.graph) == item.label, index
