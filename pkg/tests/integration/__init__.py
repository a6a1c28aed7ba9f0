"""Integration tests for GraphBench."""
