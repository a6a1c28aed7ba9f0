import os
from datetime import datetime
from typing import Any

from pydantic import BaseModel, ConfigDict, Field

from graphbench.models.prompt import PromptBundle


class ModelEndpoint(BaseModel):
    """Chat-completion endpoint plus sampling parameters."""

    model_config = ConfigDict(frozen=True)

    base_url: str = Field(..., description="Base URL, e.g. https://api.openai.com/v1")
    model_name: str = Field(..., description="Model identifier sent in the request body")
    api_key_env: str = Field(
        default="OPENAI_API_KEY",
        description="Environment variable holding the API key",
    )
    temperature: float = Field(default=0.8, ge=0.0, le=2.0, description="Sampling temperature")
    max_tokens: int = Field(default=2048, ge=1, description="Maximum reply tokens")
    request_timeout: float = Field(default=120.0, gt=0.0, description="Timeout in seconds")

    def resolve_api_key(self) -> str | None:
        """Read the key from the environment; None when unset or blank."""
        value = os.environ.get(self.api_key_env, "").strip()
        return value or None

    def descriptor(self) -> dict[str, Any]:
        """Endpoint description safe to persist (no secrets)."""
        return {
            "base_url": self.base_url,
            "model_name": self.model_name,
            "api_key_env": self.api_key_env,
            "temperature": self.temperature,
            "max_tokens": self.max_tokens,
            "request_timeout": self.request_timeout,
        }

    def with_temperature(self, temperature: float) -> "ModelEndpoint":
        return self.model_copy(update={"temperature": temperature})


class TokenUsage(BaseModel):
    prompt_tokens: int = 0
    completion_tokens: int = 0

    @property
    def total_tokens(self) -> int:
        return self.prompt_tokens + self.completion_tokens


class AttemptRecord(BaseModel):
    """One failed attempt that led to a retry."""

    attempt: int = Field(..., ge=1)
    status_code: int | None = Field(default=None, description="HTTP status, when a reply arrived")
    error: str = Field(..., description="Error class or short message")


class Transcript(BaseModel):
    """Append-only record of one model request and its reply."""

    request_id: str
    bundle: PromptBundle
    response_text: str
    started_at: datetime
    duration_ms: float = Field(default=0.0, ge=0.0)
    usage: TokenUsage = Field(default_factory=TokenUsage)
    endpoint: dict[str, Any] = Field(default_factory=dict)
    template_hash: str
    prompt_hash: str
    seed_lineage: list[int] = Field(default_factory=list)
    retries: list[AttemptRecord] = Field(default_factory=list)
