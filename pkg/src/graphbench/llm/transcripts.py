"""Append-only JSON Lines transcript store."""

import asyncio
from pathlib import Path

import structlog
from pydantic import ValidationError

from graphbench.errors import ConfigError, TranscriptNotFound
from graphbench.models import Transcript

logger = structlog.get_logger(__name__)


class TranscriptStore:
    """One transcript per line; later records win on duplicate request ids.

    Appends from concurrent trials are serialized by an asyncio lock so lines
    never interleave.
    """

    def __init__(self, path: Path):
        self.path = Path(path)
        self._lock = asyncio.Lock()
        self._index: dict[str, Transcript] | None = None

    async def append(self, transcript: Transcript) -> None:
        line = transcript.model_dump_json() + "\n"
        async with self._lock:
            await asyncio.to_thread(self._write_line, line)
            if self._index is not None:
                self._index[transcript.request_id] = transcript

    def _write_line(self, line: str) -> None:
        self.path.parent.mkdir(parents=True, exist_ok=True)
        with open(self.path, "a", encoding="utf-8") as f:
            f.write(line)

    def load(self) -> list[Transcript]:
        """Every transcript in file order.

        Raises:
            ConfigError: If the file is missing or a line is not a transcript
        """
        if not self.path.exists():
            raise ConfigError(f"transcript file {self.path} does not exist", field="replay_store")
        transcripts: list[Transcript] = []
        with open(self.path, encoding="utf-8") as f:
            for number, line in enumerate(f, start=1):
                if not line.strip():
                    continue
                try:
                    transcripts.append(Transcript.model_validate_json(line))
                except ValidationError as e:
                    raise ConfigError(
                        f"{self.path}:{number} is not a transcript record: {e.error_count()} errors",
                        field="replay_store",
                    ) from e
        logger.debug("Transcripts loaded", path=str(self.path), count=len(transcripts))
        return transcripts

    def _ensure_index(self) -> dict[str, Transcript]:
        if self._index is None:
            self._index = {transcript.request_id: transcript for transcript in self.load()}
        return self._index

    def get(self, request_id: str) -> Transcript:
        """Recorded transcript for a request id.

        Raises:
            TranscriptNotFound: If no record carries that id
        """
        index = self._ensure_index()
        if request_id not in index:
            raise TranscriptNotFound(f"no transcript recorded for {request_id!r}", field=request_id)
        return index[request_id]

    def request_ids(self) -> list[str]:
        return sorted(self._ensure_index())


def replay(store: TranscriptStore, request_id: str) -> str:
    """Recorded response text, byte-identical to what the endpoint returned."""
    return store.get(request_id).response_text
