"""Tests for valid, novel and unique rates and their aggregation."""

import math

import pytest

from graphbench.errors import EmptyInput, NoValidGraphs
from graphbench.evaluation import (
    aggregate,
    identity_disagrees,
    identity_key,
    novel_rate,
    unique_rate,
    valid_rate,
)
from graphbench.models import DenominatorMode, Graph, IdentityMode, TrialOutcome, UniqueScope


def path(n: int, order: list[int] | None = None) -> Graph:
    nodes = order or list(range(1, n + 1))
    return Graph.from_edges(n, zip(nodes, nodes[1:], strict=False))


def outcome(graphs, verdicts=None, exemplars=(), requested=10) -> TrialOutcome:
    return TrialOutcome(
        requested_count=requested,
        graphs=list(graphs),
        verdicts=list(verdicts) if verdicts is not None else [True] * len(graphs),
        exemplars=list(exemplars),
    )


class TestValidRate:
    """Tests for valid_rate."""

    def test_partial(self):
        """Test 6 valid of 10 requested."""
        graphs = [path(n) for n in range(2, 12)]
        assert valid_rate(outcome(graphs, [True] * 6 + [False] * 4)) == 60.0

    def test_all_valid(self):
        """Test 10 of 10."""
        assert valid_rate(outcome([path(n) for n in range(2, 12)])) == 100.0

    def test_denominator_modes(self):
        """Test 8 returned and valid out of 10 requested."""
        result = outcome([path(n) for n in range(2, 10)])
        assert valid_rate(result) == 80.0
        assert valid_rate(result, DenominatorMode.RETURNED) == 100.0

    def test_empty_returned_mode(self):
        """Test an empty reply scores 0 in both modes."""
        assert valid_rate(outcome([])) == 0.0
        assert valid_rate(outcome([]), DenominatorMode.RETURNED) == 0.0


class TestNovelRate:
    """Tests for novel_rate."""

    def test_vacuous_without_exemplars(self, c5):
        """Test zero-shot trials are fully novel."""
        assert novel_rate(outcome([c5, c5])) == 100.0

    def test_relabelled_copy_not_novel(self, house):
        """Test an exemplar with shuffled ids counts as a copy."""
        copy = house.relabeled([3, 5, 1, 2, 4])
        assert novel_rate(outcome([copy], exemplars=[house])) == 0.0
        assert novel_rate(outcome([copy], exemplars=[house]), IdentityMode.LABELED) == 100.0

    def test_one_of_ten(self):
        """Test 10 returned with one exemplar copy."""
        exemplar = path(5)
        graphs = [exemplar] + [path(n) for n in range(6, 15)]
        assert novel_rate(outcome(graphs, exemplars=[exemplar])) == 90.0


class TestUniqueRate:
    """Tests for unique_rate."""

    def test_all_distinct(self):
        """Test pairwise non-isomorphic graphs."""
        assert unique_rate(outcome([path(n) for n in range(2, 12)])) == 100.0

    def test_all_identical(self, c5):
        """Test ten copies form one class."""
        assert unique_rate(outcome([c5] * 10)) == 10.0

    def test_three_classes(self, c5, p5, k4):
        """Test classes of sizes 5, 3 and 2."""
        assert unique_rate(outcome([c5] * 5 + [p5] * 3 + [k4] * 2)) == 30.0

    def test_relabelled_duplicates(self):
        """Test relabelled paths collapse under isomorphism only."""
        graphs = [path(4), path(4, [2, 1, 3, 4]), path(4, [3, 1, 4, 2])]
        assert unique_rate(outcome(graphs)) == pytest.approx(100 / 3)
        assert unique_rate(outcome(graphs), IdentityMode.LABELED) == 100.0

    def test_scope(self, c5, p5):
        """Test valid-only versus all generated graphs."""
        result = outcome([c5, c5, p5], [True, True, False])
        assert unique_rate(result) == 50.0
        assert unique_rate(result, scope=UniqueScope.GENERATED) == pytest.approx(200 / 3)

    def test_no_valid_graphs(self, c5):
        """Test uniqueness is undefined without valid graphs."""
        with pytest.raises(NoValidGraphs) as exc_info:
            unique_rate(outcome([c5], [False]))
        assert exc_info.value.code == "no_valid_graphs"

    def test_identity_disagreement(self):
        """Test the disagreement flag."""
        relabelled = outcome([path(4), path(4, [2, 1, 3, 4])])
        assert identity_disagrees(relabelled)
        assert not identity_disagrees(outcome([path(4), path(5)]))

    def test_large_graphs_fall_back_to_labels(self):
        """Test graphs above the isomorphism limit compare labelled."""
        big = path(40)
        assert identity_key(big) == big


class TestAggregate:
    """Tests for aggregate."""

    def test_three_trials(self):
        """Test [90, 100, 80] gives 90.0 ± 5.77."""
        stats = aggregate([90, 100, 80])
        assert stats.mean == 90.0
        assert stats.standard_error == pytest.approx(10 / math.sqrt(3))
        assert stats.format() == "90.0 ± 5.8"

    def test_single_trial(self):
        """Test one trial has no standard error."""
        stats = aggregate([50])
        assert stats.standard_error is None
        assert stats.format() == "50.0"

    def test_identical_trials(self):
        """Test identical rates give zero error."""
        assert aggregate([100.0] * 10).format() == "100.0 ± 0.0"

    def test_permutation_invariant(self):
        """Test the input order does not matter."""
        rates = [12.5, 70.0, 33.3, 99.9, 0.0]
        assert aggregate(rates) == aggregate(list(reversed(rates)))

    def test_empty(self):
        """Test no rates raises."""
        with pytest.raises(EmptyInput):
            aggregate([])
