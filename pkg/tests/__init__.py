"""GraphBench tests."""
