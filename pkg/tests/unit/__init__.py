"""Unit tests for GraphBench."""
