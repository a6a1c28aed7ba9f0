"""Extract graphs, p estimates and SMILES strings from raw model text."""

import re

import structlog

from graphbench.graphs import scan_graphs
from graphbench.models import Diagnostic, ExpectedOutput, Graph, OutputKind, ParsedResponse
from graphbench.utils import normalize_smiles, sanitize_text, tokenize_smiles

logger = structlog.get_logger(__name__)

ANSWER_MARKER = re.compile(r"^[ \t>*#_]*answer[ \t*_]*:", re.IGNORECASE | re.MULTILINE)

_NUMBER = r"(?P<num>[+-]?(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?)\s*(?:(?P<pct>%)|/\s*(?P<den>\d+(?:\.\d+)?))?"
P_BOUND = re.compile(
    r"\bp(?:_?pred|_?hat)?\b\s*(?:=|:|≈|~|\bis\b|\bequals\b|\bof\b)?\s*"
    r"(?:(?:about|approximately|around|roughly|close\s+to|estimated\s+(?:to\s+be|as))\s*)*"
    r"\$?" + _NUMBER,
    re.IGNORECASE,
)
STANDALONE_PERCENT = re.compile(r"(?<![\w.])(?P<num>\d+(?:\.\d+)?)\s*(?P<pct>%)")

LIST_PREFIX = re.compile(r"^(?:\d+\s*[.):]\s+|[-*•]\s+)")
LINE_LABEL = re.compile(r"^[A-Za-z][A-Za-z ]*\d*\s*:\s+")


def answer_section(text: str) -> str:
    """Text after the last ANSWER marker, or the whole text without one."""
    markers = list(ANSWER_MARKER.finditer(text))
    return text[markers[-1].end() :] if markers else text


def _interpret(match: re.Match[str]) -> float | None:
    try:
        value = float(match.group("num"))
        if match.groupdict().get("pct"):
            value /= 100.0
        elif match.groupdict().get("den"):
            denominator = float(match.group("den"))
            if denominator == 0:
                return None
            value /= denominator
        elif 1.0 < value <= 100.0:
            value /= 100.0
    except (ValueError, OverflowError):
        return None
    if not 0.0 <= value <= 1.0:
        return None
    return value


def parse_p_estimate(text: str, diagnostics: list[Diagnostic] | None = None) -> float | None:
    """First number bound to p, as a fraction, percentage or ratio.

    Falls back to the first standalone percentage. Values outside [0, 1]
    yield None and a ``p_out_of_range`` diagnostic.
    """
    sink = diagnostics if diagnostics is not None else []
    match = P_BOUND.search(text) or STANDALONE_PERCENT.search(text)
    if match is None:
        sink.append(Diagnostic(code="no_p_estimate", message="no estimate of p found"))
        return None
    value = _interpret(match)
    if value is None:
        sink.append(
            Diagnostic(code="p_out_of_range", message=f"cannot read {match.group(0)!r} as a probability")
        )
    return value


def _parse_graphs(section: str, diagnostics: list[Diagnostic]) -> list[Graph]:
    graphs: list[Graph] = []
    for index, match in enumerate(scan_graphs(section)):
        if match.error is not None:
            diagnostics.append(Diagnostic(code=match.error.code, message=match.error.message, item=index))
            continue
        assert match.graph is not None
        for warning in match.warnings:
            diagnostics.append(Diagnostic(code=warning, message=f"graph normalized: {warning}", item=index))
        graphs.append(match.graph)
    return graphs


def smiles_candidate(line: str) -> str | None:
    """The SMILES token on a line, with numbering, bullets and labels removed."""
    value = LIST_PREFIX.sub("", line.strip())
    value = LINE_LABEL.sub("", value)
    value = normalize_smiles(value)
    if not value or any(ch.isspace() for ch in value):
        return None
    if "".join(tokenize_smiles(value)) != value:
        return None
    if not any(ch.isalpha() for ch in value):
        return None
    return value


def _parse_smiles(section: str) -> list[str]:
    return [
        candidate
        for candidate in (smiles_candidate(line) for line in section.splitlines())
        if candidate is not None
    ]


def parse_response(text: str | bytes, expected: ExpectedOutput) -> ParsedResponse:
    """Turn raw model text into structured output.

    Never raises on malformed content: each bad item becomes a diagnostic.
    Items beyond the requested count are dropped in order of appearance.

    Args:
        text: Raw model reply (bytes are decoded leniently)
        expected: Output kind and requested count

    Returns:
        ParsedResponse with graphs or SMILES, the p estimate when asked for,
        and diagnostics
    """
    clean = sanitize_text(text)
    section = answer_section(clean)
    diagnostics: list[Diagnostic] = []
    graphs: list[Graph] = []
    smiles: list[str] = []
    p_estimate: float | None = None

    if expected.kind == OutputKind.SMILES_LIST:
        smiles = _parse_smiles(section)
        returned = len(smiles)
        if not smiles:
            diagnostics.append(Diagnostic(code="no_molecules", message="no SMILES strings found"))
        smiles = smiles[: expected.count]
    else:
        if expected.kind == OutputKind.P_ESTIMATE_AND_GRAPH_LIST:
            p_estimate = parse_p_estimate(section, [])
            if p_estimate is None:
                p_estimate = parse_p_estimate(clean, diagnostics)
        graphs = _parse_graphs(section, diagnostics)
        returned = len(graphs)
        if not graphs:
            diagnostics.append(Diagnostic(code="no_graphs", message="no graphs found"))
        graphs = graphs[: expected.count]

    if returned > expected.count:
        diagnostics.append(
            Diagnostic(code="truncated", message=f"kept {expected.count} of {returned} items")
        )
    if diagnostics:
        logger.debug("Response diagnostics", codes=[diagnostic.code for diagnostic in diagnostics])
    return ParsedResponse(
        graphs=graphs,
        p_estimate=p_estimate,
        smiles=smiles,
        diagnostics=diagnostics,
        returned_count=returned,
    )
