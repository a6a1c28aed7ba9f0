from graphbench.llm.client import ChatCompletionClient, CompletionClient, build_transcript
from graphbench.llm.mock import ReplayClient, ScriptedClient
from graphbench.llm.transcripts import TranscriptStore, replay

__all__ = [
    "ChatCompletionClient",
    "CompletionClient",
    "ReplayClient",
    "ScriptedClient",
    "TranscriptStore",
    "build_transcript",
    "replay",
]
