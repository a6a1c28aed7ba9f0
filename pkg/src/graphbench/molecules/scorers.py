"""Pluggable molecule property scorers.

Every scorer speaks the same protocol: newline-delimited SMILES in, one
decimal probability per line out, in input order.
"""

import asyncio
from typing import Protocol

import httpx
import structlog

from graphbench.errors import ScorerProtocolViolation, ScorerUnavailable
from graphbench.models import MoleculeScores, ScorerConfig
from graphbench.utils import check_smiles_syntax

logger = structlog.get_logger(__name__)


class MoleculeScorer(Protocol):
    async def score(self, smiles: list[str]) -> list[float]: ...


def encode_lines(values: list[str]) -> str:
    return "".join(f"{value}\n" for value in values)


def parse_scores(text: str, expected: int) -> list[float]:
    """Read one probability per non-blank line.

    Raises:
        ScorerProtocolViolation: On a count mismatch, a non-number or a value outside [0, 1]
    """
    lines = [line.strip() for line in text.splitlines() if line.strip()]
    if len(lines) != expected:
        raise ScorerProtocolViolation(f"scorer returned {len(lines)} values for {expected} molecules")
    scores: list[float] = []
    for position, line in enumerate(lines):
        try:
            value = float(line)
        except ValueError as e:
            raise ScorerProtocolViolation(f"line {position + 1} is not a number: {line!r}") from e
        if not 0.0 <= value <= 1.0:
            raise ScorerProtocolViolation(f"line {position + 1} is not a probability: {value}")
        scores.append(value)
    return scores


async def run_pipe(command: list[str], lines: list[str], timeout: float) -> str:
    """Feed lines to a process on stdin and return its stdout.

    Raises:
        ScorerUnavailable: If the process cannot start, times out or exits non-zero
    """
    try:
        process = await asyncio.create_subprocess_exec(
            *command,
            stdin=asyncio.subprocess.PIPE,
            stdout=asyncio.subprocess.PIPE,
            stderr=asyncio.subprocess.PIPE,
        )
    except OSError as e:
        raise ScorerUnavailable(f"cannot start {command[0]!r}: {e}", field="command") from e
    try:
        stdout, stderr = await asyncio.wait_for(
            process.communicate(encode_lines(lines).encode()), timeout=timeout
        )
    except TimeoutError as e:
        process.kill()
        await process.wait()
        raise ScorerUnavailable(f"{command[0]!r} timed out after {timeout}s", field="command") from e
    if process.returncode != 0:
        raise ScorerUnavailable(
            f"{command[0]!r} exited with {process.returncode}: {stderr.decode(errors='replace')[:200]}",
            field="command",
        )
    return stdout.decode(errors="replace")


class CommandScorer:
    """Scores molecules through an external process pipe."""

    def __init__(self, command: list[str], timeout: float = 60.0):
        self.command = command
        self.timeout = timeout

    async def score(self, smiles: list[str]) -> list[float]:
        output = await run_pipe(self.command, smiles, self.timeout)
        return parse_scores(output, len(smiles))


class HttpScorer:
    """Scores molecules through an HTTP POST with a newline-delimited body."""

    def __init__(
        self,
        url: str,
        timeout: float = 60.0,
        transport: httpx.AsyncBaseTransport | None = None,
    ):
        self.url = url
        self.timeout = timeout
        self._transport = transport

    async def score(self, smiles: list[str]) -> list[float]:
        try:
            async with httpx.AsyncClient(timeout=self.timeout, transport=self._transport) as client:
                response = await client.post(
                    self.url,
                    content=encode_lines(smiles),
                    headers={"Content-Type": "text/plain"},
                )
                response.raise_for_status()
        except httpx.HTTPError as e:
            raise ScorerUnavailable(f"scorer at {self.url} failed: {e}", field="url") from e
        return parse_scores(response.text, len(smiles))


class ConstantScorer:
    """Stub returning the same probability for every molecule."""

    def __init__(self, value: float = 0.5):
        self.value = value

    async def score(self, smiles: list[str]) -> list[float]:
        return [self.value] * len(smiles)


def build_scorer(config: ScorerConfig) -> MoleculeScorer:
    if config.kind == "command":
        assert config.command is not None
        return CommandScorer(config.command, timeout=config.timeout)
    if config.kind == "http":
        assert config.url is not None
        return HttpScorer(config.url, timeout=config.timeout)
    return ConstantScorer(config.value)


async def score_molecules(smiles: list[str], scorer: MoleculeScorer) -> MoleculeScores:
    """Score molecules, giving syntactically invalid ones 0 without asking the scorer.

    Raises:
        ScorerUnavailable: If the scorer cannot be reached
        ScorerProtocolViolation: If the scorer breaks the one-value-per-input contract
    """
    invalid = [not check_smiles_syntax(value)[0] for value in smiles]
    to_score = [value for value, bad in zip(smiles, invalid, strict=True) if not bad]
    scored = await scorer.score(to_score) if to_score else []
    if len(scored) != len(to_score):
        raise ScorerProtocolViolation(f"scorer returned {len(scored)} values for {len(to_score)} molecules")

    values = iter(scored)
    scores = [0.0 if bad else next(values) for bad in invalid]
    if any(invalid):
        logger.debug("Invalid SMILES scored 0", count=sum(invalid))
    return MoleculeScores(scores=scores, invalid=invalid)
