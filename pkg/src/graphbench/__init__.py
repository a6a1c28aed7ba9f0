"""GraphBench - benchmark harness for LLM graph generation."""

__version__ = "0.1.0"
