"""Tests for run tracking and optional tracing."""

from graphbench.observability import RunTracker, TrialMetrics, trace_function


class TestRunTracker:
    """Tests for RunTracker."""

    def test_empty_summary(self):
        """Test a tracker with no trials."""
        assert RunTracker().get_summary() == {"total_trials": 0}

    def test_summary(self):
        """Test counts, tokens and latency are aggregated."""
        tracker = RunTracker()
        tracker.record(
            TrialMetrics(
                cell="a", status="completed", latency_ms=100.0, prompt_tokens=10, completion_tokens=5
            )
        )
        tracker.record(TrialMetrics(cell="b", status="failed", error="timeout", retries=2))
        tracker.record(TrialMetrics(cell="c", status="empty", latency_ms=300.0))

        summary = tracker.get_summary()
        assert summary["total_trials"] == 3
        assert summary["completed_trials"] == 1
        assert summary["failed_trials"] == 1
        assert summary["empty_trials"] == 1
        assert summary["avg_latency_ms"] == 200.0
        assert summary["total_tokens_used"] == 15
        assert summary["total_retries"] == 2

    def test_metrics_dict(self):
        """Test the log record of one trial."""
        metrics = TrialMetrics(cell="x", status="completed", latency_ms=12.345, items_returned=4)
        assert metrics.to_dict()["latency_ms"] == 12.3
        assert metrics.to_dict()["items_returned"] == 4


class TestTraceFunction:
    """Tests for trace_function with tracing disabled."""

    def test_sync_passthrough(self):
        """Test a traced sync function still returns its value."""

        @trace_function(name="double")
        def double(value):
            return value * 2

        assert double(4) == 8
        assert double.__name__ == "double"

    async def test_async_passthrough(self):
        """Test a traced coroutine still returns its value."""

        @trace_function(run_type="llm")
        async def echo(value):
            return value

        assert await echo("x") == "x"
