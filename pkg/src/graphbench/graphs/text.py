"""Graph text form "(n, [(u, v), ...])" and the one-graph-per-line file format."""

import re
from collections.abc import Iterable
from dataclasses import dataclass, field
from pathlib import Path

import structlog

from graphbench.errors import EndpointOutOfRange, GraphFormatError, MalformedSyntax, SelfLoop
from graphbench.models import Graph

logger = structlog.get_logger(__name__)

MAX_TEXT_NODES = 1_000
GRAPH_START = re.compile(r"\(\s*[+-]?\d+\s*,\s*\[")
_INTEGER = re.compile(r"[+-]?\d{1,12}")


@dataclass
class GraphMatch:
    """One graph tuple located inside a larger text."""

    start: int
    end: int
    graph: Graph | None = None
    error: GraphFormatError | None = None
    warnings: list[str] = field(default_factory=list)


class _Scanner:
    """Cursor over text for the tuple grammar."""

    def __init__(self, text: str, pos: int):
        self.text = text
        self.pos = pos

    def skip_space(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_space()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, char: str) -> None:
        found = self.peek()
        if found != char:
            shown = repr(found) if found else "end of text"
            raise MalformedSyntax(f"expected {char!r} at offset {self.pos}, found {shown}")
        self.pos += 1

    def integer(self) -> int:
        self.skip_space()
        match = _INTEGER.match(self.text, self.pos)
        if match is None:
            raise MalformedSyntax(f"expected integer at offset {self.pos}")
        end = match.end()
        if end < len(self.text) and (self.text[end].isalnum() or self.text[end] in "._"):
            raise MalformedSyntax(f"non-integer token at offset {self.pos}")
        self.pos = end
        return int(match.group())


def _read_tuple(text: str, start: int) -> tuple[int, list[tuple[int, int]], int]:
    scanner = _Scanner(text, start)
    scanner.expect("(")
    node_count = scanner.integer()
    scanner.expect(",")
    scanner.expect("[")
    edges: list[tuple[int, int]] = []
    if scanner.peek() == "]":
        scanner.pos += 1
    else:
        while True:
            scanner.expect("(")
            u = scanner.integer()
            scanner.expect(",")
            v = scanner.integer()
            scanner.expect(")")
            edges.append((u, v))
            nxt = scanner.peek()
            if nxt == ",":
                scanner.pos += 1
                if scanner.peek() == "]":
                    scanner.pos += 1
                    break
                continue
            scanner.expect("]")
            break
    if scanner.peek() == ",":
        scanner.pos += 1
    scanner.expect(")")
    return node_count, edges, scanner.pos


def _build_graph(node_count: int, edges: list[tuple[int, int]], warnings: list[str]) -> Graph:
    if node_count < 1:
        raise MalformedSyntax(f"node count must be positive, got {node_count}")
    if node_count > MAX_TEXT_NODES:
        raise MalformedSyntax(f"node count {node_count} exceeds {MAX_TEXT_NODES}")

    endpoints = [node for edge in edges for node in edge]
    if endpoints and min(endpoints) == 0 and max(endpoints) <= node_count - 1:
        edges = [(u + 1, v + 1) for u, v in edges]
        warnings.append("zero_indexed")

    for u, v in edges:
        if u == v and 1 <= u <= node_count:
            raise SelfLoop(f"self-loop on node {u}", field="edges")
    for node in (node for edge in edges for node in edge):
        if not 1 <= node <= node_count:
            raise EndpointOutOfRange(f"node {node} outside 1..{node_count}", field="edges")
    return Graph.from_edges(node_count, edges, warnings=warnings)


def parse_graph_text(text: str, warnings: list[str] | None = None) -> Graph:
    """Parse one "(n, [(u, v), ...])" expression.

    Text before the first "(n, [" opening (a label such as "Graph 3:" or a
    parenthetical remark) is skipped.
    Ids given as exactly 0..n-1 are shifted to 1..n and duplicate edges are
    collapsed; both add a code to ``warnings`` when a list is supplied.

    Raises:
        MalformedSyntax: Unbalanced brackets or non-integer tokens
        EndpointOutOfRange: A node id outside 1..n
        SelfLoop: An edge (u, u)
    """
    found = GRAPH_START.search(text)
    start = found.start() if found is not None else text.find("(")
    if start < 0:
        raise MalformedSyntax("no graph tuple found")
    node_count, edges, _ = _read_tuple(text, start)
    sink = warnings if warnings is not None else []
    graph = _build_graph(node_count, edges, sink)
    if sink:
        logger.debug("Graph normalized", warnings=sink)
    return graph


def scan_graphs(text: str) -> list[GraphMatch]:
    """Locate every "(n, [" tuple in free text and try to parse each one."""
    matches: list[GraphMatch] = []
    pos = 0
    while True:
        found = GRAPH_START.search(text, pos)
        if found is None:
            break
        try:
            node_count, edges, end = _read_tuple(text, found.start())
            warnings: list[str] = []
            graph = _build_graph(node_count, edges, warnings)
            matches.append(GraphMatch(found.start(), end, graph=graph, warnings=warnings))
            pos = end
        except GraphFormatError as e:
            matches.append(GraphMatch(found.start(), found.end(), error=e))
            pos = found.end()
    return matches


def serialize_graph(graph: Graph) -> str:
    """Render a graph with edges in sorted order."""
    edges = ", ".join(f"({u}, {v})" for u, v in graph.edges)
    return f"({graph.node_count}, [{edges}])"


def read_graph_file(path: Path) -> list[Graph]:
    """Read one serialized graph per line; blank lines and '#' comments are ignored.

    Raises:
        GraphFormatError: With ``field`` naming the offending line
    """
    graphs: list[Graph] = []
    for number, line in enumerate(path.read_text(encoding="utf-8").splitlines(), 1):
        stripped = line.split("#", 1)[0].strip()
        if not stripped:
            continue
        try:
            graphs.append(parse_graph_text(stripped))
        except GraphFormatError as e:
            e.field = f"line {number}"
            raise
    logger.debug("Read graph file", path=str(path), graphs=len(graphs))
    return graphs


def write_graph_file(path: Path, graphs: Iterable[Graph], header: str | None = None) -> None:
    """Write graphs one per line, with an optional '#' header comment."""
    lines = [f"# {header}"] if header else []
    lines.extend(serialize_graph(graph) for graph in graphs)
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
