"""Tests for the graph text form and graph file I/O."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graphbench.errors import EndpointOutOfRange, MalformedSyntax, SelfLoop
from graphbench.graphs import (
    parse_graph_text,
    read_graph_file,
    scan_graphs,
    serialize_graph,
    write_graph_file,
)
from graphbench.models import Graph


class TestParseGraphText:
    """Tests for parse_graph_text."""

    def test_triangle(self):
        """Test a plain triangle parses."""
        graph = parse_graph_text("(3, [(1, 2), (2, 3), (1, 3)])")
        assert graph.node_count == 3
        assert graph.edges == ((1, 2), (1, 3), (2, 3))

    def test_isolated_nodes(self):
        """Test an edgeless graph keeps its node count."""
        graph = parse_graph_text("(4, [])")
        assert graph.node_count == 4
        assert graph.edge_count == 0

    def test_label_prefix_skipped(self):
        """Test a leading label is ignored."""
        graph = parse_graph_text("Graph 3: (2, [(1, 2)])")
        assert graph.edges == ((1, 2),)

    def test_prose_parentheses_skipped(self):
        """Test parentheses in prose before the tuple are not mistaken for it."""
        text = "Sure (as requested), here is one: (3, [(1, 2), (2, 3)])"
        graph = parse_graph_text(text)
        assert graph.edges == ((1, 2), (2, 3))
        assert scan_graphs(text)[0].graph == graph

    def test_trailing_commas(self):
        """Test trailing commas inside the tuple are accepted."""
        graph = parse_graph_text("(3, [(1, 2), (2, 3),],)")
        assert graph.edge_count == 2

    def test_duplicate_edges_collapsed(self):
        """Test duplicates collapse with a warning."""
        warnings: list[str] = []
        graph = parse_graph_text("(3, [(1, 2), (2, 1), (2, 3)])", warnings)
        assert graph.edges == ((1, 2), (2, 3))
        assert "duplicate_edges" in warnings

    def test_zero_indexed_shifted(self):
        """Test ids exactly 0..n-1 are shifted to 1..n."""
        warnings: list[str] = []
        graph = parse_graph_text("(3, [(0, 1), (1, 2)])", warnings)
        assert graph.edges == ((1, 2), (2, 3))
        assert warnings == ["zero_indexed"]

    def test_self_loop(self):
        """Test a self-loop is rejected."""
        with pytest.raises(SelfLoop) as exc_info:
            parse_graph_text("(3, [(2, 2)])")
        assert exc_info.value.code == "self_loop"

    def test_endpoint_out_of_range(self):
        """Test an id above n is rejected."""
        with pytest.raises(EndpointOutOfRange) as exc_info:
            parse_graph_text("(3, [(1, 4)])")
        assert exc_info.value.code == "endpoint_out_of_range"

    def test_unbalanced_brackets(self):
        """Test an unterminated edge list is malformed."""
        with pytest.raises(MalformedSyntax) as exc_info:
            parse_graph_text("(3, [(1, 2), (2, 3)")
        assert exc_info.value.code == "malformed_syntax"

    def test_non_integer_token(self):
        """Test a float id is malformed."""
        with pytest.raises(MalformedSyntax):
            parse_graph_text("(3, [(1.5, 2)])")

    def test_no_tuple(self):
        """Test text without a tuple is malformed."""
        with pytest.raises(MalformedSyntax):
            parse_graph_text("no graph here")


class TestScanGraphs:
    """Tests for scanning free text."""

    def test_finds_every_graph(self):
        """Test graphs embedded in prose are all found."""
        text = "Here you go:\n1. (2, [(1, 2)])\n2. (3, [(1, 2), (2, 3)])\nDone."
        matches = scan_graphs(text)
        assert [match.graph.node_count for match in matches if match.graph] == [2, 3]

    def test_bad_graph_reported_not_raised(self):
        """Test a broken tuple becomes an error entry and scanning continues."""
        matches = scan_graphs("(3, [(1, 1)])\n(2, [(1, 2)])")
        assert matches[0].error is not None
        assert matches[0].error.code == "self_loop"
        assert matches[1].graph is not None


class TestSerialize:
    """Tests for serialization."""

    def test_sorted_output(self):
        """Test edges are written sorted."""
        graph = Graph.from_edges(3, [(3, 2), (2, 1)])
        assert serialize_graph(graph) == "(3, [(1, 2), (2, 3)])"

    def test_file_round_trip(self, tmp_path, c5, k4):
        """Test graph files keep their graphs and skip comments."""
        path = tmp_path / "graphs.txt"
        write_graph_file(path, [c5, k4], header="two graphs")
        assert path.read_text().startswith("# two graphs\n")
        assert read_graph_file(path) == [c5, k4]

    def test_file_error_names_line(self, tmp_path):
        """Test the failing line number is reported."""
        path = tmp_path / "graphs.txt"
        path.write_text("(2, [(1, 2)])\n(2, [(1, 3)])\n")
        with pytest.raises(EndpointOutOfRange) as exc_info:
            read_graph_file(path)
        assert exc_info.value.field == "line 2"


@st.composite
def graphs(draw: st.DrawFn) -> Graph:
    n = draw(st.integers(min_value=1, max_value=9))
    pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)


@st.composite
def graph_like_text(draw: st.DrawFn) -> str:
    """Graph text with random characters spliced in."""
    text = serialize_graph(draw(graphs()))
    position = draw(st.integers(min_value=0, max_value=len(text)))
    noise = draw(st.text(alphabet="()[],-0123456789 \n", max_size=8))
    return text[:position] + noise + text[position:]


class TestProperties:
    """Property tests for the codec."""

    @given(graphs())
    @settings(max_examples=200, deadline=None)
    def test_parse_inverts_serialize(self, graph):
        """Test parsing a serialized graph gives the same graph."""
        assert parse_graph_text(serialize_graph(graph)) == graph

    @given(st.text(max_size=200))
    @settings(max_examples=300, deadline=None)
    def test_scan_never_raises(self, text):
        """Test scanning arbitrary text never raises."""
        for match in scan_graphs(text):
            assert (match.graph is None) != (match.error is None)

    @pytest.mark.slow
    @given(graphs())
    @settings(max_examples=10_000, deadline=None)
    def test_parse_inverts_serialize_thorough(self, graph):
        """Test the round trip over 10,000 generated graphs."""
        assert parse_graph_text(serialize_graph(graph)) == graph

    @pytest.mark.slow
    @given(st.one_of(st.text(max_size=200), graph_like_text()))
    @settings(max_examples=100_000, deadline=None)
    def test_scan_never_raises_thorough(self, text):
        """Test 100,000 arbitrary and near-graph strings."""
        for match in scan_graphs(text):
            assert (match.graph is None) != (match.error is None)
