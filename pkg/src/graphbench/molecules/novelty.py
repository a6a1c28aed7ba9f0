"""Novelty and uniqueness of generated SMILES strings."""

from collections.abc import Mapping

import structlog

from graphbench.errors import EmptyInput, ScorerProtocolViolation
from graphbench.molecules.scorers import run_pipe
from graphbench.utils import normalize_smiles

logger = structlog.get_logger(__name__)


def molecule_novel_unique(
    generated: list[str],
    exemplars: list[str],
    canonical: Mapping[str, str] | None = None,
) -> tuple[float, float]:
    """Percent of generated molecules not among the exemplars, and percent distinct.

    Strings are compared after trimming whitespace and surrounding quotes,
    then mapped through ``canonical`` when given.

    Raises:
        EmptyInput: If nothing was generated
    """
    if not generated:
        raise EmptyInput("no generated molecules", field="generated")

    def key(value: str) -> str:
        value = normalize_smiles(value)
        return canonical.get(value, value) if canonical is not None else value

    keys = [key(value) for value in generated]
    seen = {key(value) for value in exemplars}
    novel = 100.0 * sum(1 for value in keys if value not in seen) / len(keys)
    unique = 100.0 * len(set(keys)) / len(keys)
    return novel, unique


class CommandCanonicalizer:
    """Maps SMILES to canonical SMILES through an external process, one per line."""

    def __init__(self, command: list[str], timeout: float = 60.0):
        self.command = command
        self.timeout = timeout

    async def canonicalize(self, smiles: list[str]) -> dict[str, str]:
        """Mapping from each normalized input string to its canonical form.

        Raises:
            ScorerUnavailable: If the process fails
            ScorerProtocolViolation: If it returns a different number of lines
        """
        inputs = sorted({normalize_smiles(value) for value in smiles})
        if not inputs:
            return {}
        output = await run_pipe(self.command, inputs, self.timeout)
        lines = [line.strip() for line in output.splitlines() if line.strip()]
        if len(lines) != len(inputs):
            raise ScorerProtocolViolation(
                f"canonicalizer returned {len(lines)} lines for {len(inputs)} molecules"
            )
        logger.debug("SMILES canonicalized", count=len(inputs))
        return dict(zip(inputs, lines, strict=True))
