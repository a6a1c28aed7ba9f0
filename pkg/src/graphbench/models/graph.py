from collections.abc import Iterable, Sequence

import networkx as nx
from pydantic import BaseModel, ConfigDict, Field, model_validator

from graphbench.errors import EndpointOutOfRange, SelfLoop


class Graph(BaseModel):
    """Undirected simple graph on nodes 1..node_count with a sorted edge list."""

    model_config = ConfigDict(frozen=True)

    node_count: int = Field(..., ge=1, description="Number of nodes, labelled 1..node_count")
    edges: tuple[tuple[int, int], ...] = Field(
        default=(),
        description="Edges (u, v) with u < v, sorted lexicographically and unique",
    )

    @model_validator(mode="after")
    def validate_edges(self) -> "Graph":
        """Ensure edges are in range, loop-free, unique and sorted."""
        previous: tuple[int, int] | None = None
        for u, v in self.edges:
            if not 1 <= u < v <= self.node_count:
                raise ValueError(f"edge ({u}, {v}) invalid for {self.node_count} nodes")
            if previous is not None and (u, v) <= previous:
                raise ValueError("edges must be sorted and unique")
            previous = (u, v)
        return self

    @classmethod
    def from_edges(
        cls,
        node_count: int,
        edges: Iterable[tuple[int, int]],
        warnings: list[str] | None = None,
    ) -> "Graph":
        """Build a graph from an unordered edge collection.

        Orientation is normalized and duplicates are collapsed; a
        ``duplicate_edges`` warning is appended when that happens.

        Raises:
            SelfLoop: If an edge joins a node to itself
            EndpointOutOfRange: If an endpoint is outside 1..node_count
        """
        normalized: set[tuple[int, int]] = set()
        seen = 0
        for u, v in edges:
            if u == v:
                raise SelfLoop(f"self-loop on node {u}", field="edges")
            for node in (u, v):
                if not 1 <= node <= node_count:
                    raise EndpointOutOfRange(
                        f"node {node} outside 1..{node_count}",
                        field="edges",
                    )
            normalized.add((u, v) if u < v else (v, u))
            seen += 1
        if warnings is not None and seen != len(normalized):
            warnings.append("duplicate_edges")
        return cls(node_count=node_count, edges=tuple(sorted(normalized)))

    @classmethod
    def from_networkx(cls, graph: nx.Graph, node_count: int | None = None) -> "Graph":
        """Convert a networkx graph whose nodes are 0..n-1 integers."""
        count = node_count if node_count is not None else graph.number_of_nodes()
        return cls.from_edges(count, ((u + 1, v + 1) for u, v in graph.edges()))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def nodes(self) -> range:
        return range(1, self.node_count + 1)

    def adjacency(self) -> dict[int, set[int]]:
        """Neighbour sets keyed by node id."""
        adjacency: dict[int, set[int]] = {node: set() for node in self.nodes}
        for u, v in self.edges:
            adjacency[u].add(v)
            adjacency[v].add(u)
        return adjacency

    def degrees(self) -> dict[int, int]:
        degrees = dict.fromkeys(self.nodes, 0)
        for u, v in self.edges:
            degrees[u] += 1
            degrees[v] += 1
        return degrees

    def relabeled(self, mapping: Sequence[int]) -> "Graph":
        """Apply a node permutation given as a sequence where node i maps to mapping[i-1]."""
        return Graph.from_edges(self.node_count, ((mapping[u - 1], mapping[v - 1]) for u, v in self.edges))

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(self.nodes)
        graph.add_edges_from(self.edges)
        return graph
