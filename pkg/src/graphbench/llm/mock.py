"""Offline completion clients: scripted replies and transcript replay."""

from collections.abc import Callable, Sequence
from datetime import datetime, timezone

UTC = timezone.utc
from typing import Any

import structlog

from graphbench.llm.client import build_transcript
from graphbench.llm.transcripts import TranscriptStore
from graphbench.models import PromptBundle, Transcript

logger = structlog.get_logger(__name__)

Script = str | Sequence[str] | dict[str, str] | Callable[[str, PromptBundle], str]


class ScriptedClient:
    """Returns canned replies without any network traffic.

    The script is one of: a single reply for every request, a list consumed
    in call order, a mapping keyed by request id, or a callable receiving the
    request id and the prompt bundle.
    """

    def __init__(self, script: Script, model_name: str = "scripted"):
        self.script = script
        self.model_name = model_name
        self.calls: list[str] = []
        self._position = 0

    @property
    def descriptor(self) -> dict[str, Any]:
        return {"base_url": "scripted://", "model_name": self.model_name}

    def _reply(self, request_id: str, bundle: PromptBundle) -> str:
        if isinstance(self.script, str):
            return self.script
        if isinstance(self.script, dict):
            return self.script[request_id]
        if callable(self.script):
            return self.script(request_id, bundle)
        reply = self.script[self._position % len(self.script)]
        self._position += 1
        return reply

    async def complete_transcript(
        self,
        bundle: PromptBundle,
        request_id: str,
        seed_lineage: list[int] | None = None,
        temperature: float | None = None,
    ) -> Transcript:
        self.calls.append(request_id)
        return build_transcript(
            request_id=request_id,
            bundle=bundle,
            response_text=self._reply(request_id, bundle),
            started_at=datetime.now(UTC),
            duration_ms=0.0,
            endpoint=self.descriptor,
            seed_lineage=seed_lineage,
        )

    async def close(self) -> None:
        pass


class ReplayClient:
    """Answers from a transcript store instead of a live endpoint.

    A prompt whose hash differs from the recorded one still gets the
    recorded reply; the drift is logged as a warning.
    """

    def __init__(self, store: TranscriptStore):
        self.store = store
        self.drifted: list[str] = []

    @property
    def descriptor(self) -> dict[str, Any]:
        return {"base_url": "replay://", "store": str(self.store.path)}

    async def complete_transcript(
        self,
        bundle: PromptBundle,
        request_id: str,
        seed_lineage: list[int] | None = None,
        temperature: float | None = None,
    ) -> Transcript:
        recorded = self.store.get(request_id)
        if recorded.prompt_hash != bundle.prompt_hash:
            self.drifted.append(request_id)
            logger.warning(
                "Prompt drift against recorded transcript",
                request_id=request_id,
                recorded_hash=recorded.prompt_hash,
                current_hash=bundle.prompt_hash,
            )
        return recorded

    async def close(self) -> None:
        pass
