"""Pytest configuration and fixtures."""

import os
from pathlib import Path

import pytest
from tenacity import wait_none

# Set test environment
os.environ["ENVIRONMENT"] = "development"
os.environ["LOG_LEVEL"] = "DEBUG"
os.environ["GRAPHBENCH_TEST_KEY"] = "test-key"

from graphbench.config.settings import Settings  # noqa: E402
from graphbench.distributions import motif_template, wheel  # noqa: E402
from graphbench.graphs import serialize_graph  # noqa: E402
from graphbench.llm import ScriptedClient, TranscriptStore  # noqa: E402
from graphbench.models import Graph, ModelEndpoint, MotifKind  # noqa: E402


@pytest.fixture
def c5() -> Graph:
    """Five-node cycle."""
    return Graph.from_edges(5, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)])


@pytest.fixture
def p5() -> Graph:
    """Five-node path."""
    return Graph.from_edges(5, [(1, 2), (2, 3), (3, 4), (4, 5)])


@pytest.fixture
def k4() -> Graph:
    """Complete graph on four nodes."""
    return Graph.from_edges(4, [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)])


@pytest.fixture
def k5() -> Graph:
    """Complete graph on five nodes."""
    return Graph.from_edges(5, [(u, v) for u in range(1, 6) for v in range(u + 1, 6)])


@pytest.fixture
def house() -> Graph:
    return motif_template(MotifKind.HOUSE)


@pytest.fixture
def crane() -> Graph:
    return motif_template(MotifKind.CRANE)


@pytest.fixture
def wheel7() -> Graph:
    """Wheel on seven nodes with hub 1."""
    return wheel(7)


@pytest.fixture
def star5() -> Graph:
    """Star with centre 1 and four leaves."""
    return Graph.from_edges(5, [(1, 2), (1, 3), (1, 4), (1, 5)])


@pytest.fixture
def test_settings() -> Settings:
    """Settings with small transport limits and no rate cap."""
    return Settings(
        retry_attempts=5,
        retry_max_wait=0.0,
        max_concurrency=2,
        requests_per_second=0.0,
        langsmith_tracing=False,
    )


@pytest.fixture
def test_endpoint() -> ModelEndpoint:
    """Endpoint whose key comes from the test environment."""
    return ModelEndpoint(
        base_url="https://llm.test/v1",
        model_name="test-model",
        api_key_env="GRAPHBENCH_TEST_KEY",
        temperature=0.8,
        request_timeout=5.0,
    )


@pytest.fixture
def no_wait():
    """Tenacity wait strategy that never sleeps."""
    return wait_none()


@pytest.fixture
def transcript_store(tmp_path: Path) -> TranscriptStore:
    return TranscriptStore(tmp_path / "transcripts.jsonl")


@pytest.fixture
def tree_reply() -> str:
    """Reply listing ten copies of a valid 15-node path."""
    path = Graph.from_edges(15, [(i, i + 1) for i in range(1, 15)])
    return "\n".join(serialize_graph(path) for _ in range(10))


@pytest.fixture
def scripted_client(tree_reply: str) -> ScriptedClient:
    """Client answering every request with ten valid 15-node trees."""
    return ScriptedClient(tree_reply)


@pytest.fixture
def molecule_csv(tmp_path: Path) -> Path:
    """Small dataset with positives, negatives and one malformed row."""
    path = tmp_path / "molhiv.csv"
    path.write_text(
        "smiles,label\n"
        "C1=CC=CC=C1,1\n"
        "CCO,0\n"
        "CC(,1\n"
        "CC(=O)Nc1ccc(O)cc1,1\n"
        "CCN(CC)CC,1\n"
        "O=C=O,0\n",
        encoding="utf-8",
    )
    return path
