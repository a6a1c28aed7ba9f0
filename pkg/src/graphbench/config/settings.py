from functools import lru_cache
from typing import TYPE_CHECKING, Literal

from pydantic import AliasChoices, Field
from pydantic_settings import BaseSettings, SettingsConfigDict

if TYPE_CHECKING:
    from graphbench.models import ModelEndpoint


class Settings(BaseSettings):
    """Harness settings loaded from environment variables."""

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    # Default chat-completion endpoint
    base_url: str = Field(
        default="https://api.openai.com/v1",
        description="Base URL of the chat-completion endpoint",
    )
    model_name: str = Field(
        default="gpt-4",
        description="Model name sent with every request",
    )
    api_key_env: str = Field(
        default="OPENAI_API_KEY",
        description="Name of the environment variable holding the API key",
    )
    max_tokens: int = Field(
        default=2048,
        description="Maximum tokens for a model reply",
    )
    request_timeout: float = Field(
        default=120.0,
        description="Per-request timeout in seconds",
    )

    # Transport policy
    retry_attempts: int = Field(
        default=5,
        description="Attempts per request, including the first one",
    )
    retry_max_wait: float = Field(
        default=60.0,
        description="Upper bound for one backoff sleep in seconds",
    )
    max_concurrency: int = Field(
        default=4,
        description="Maximum in-flight requests",
    )
    requests_per_second: float = Field(
        default=0.0,
        description="Request rate cap (0 disables the cap)",
    )

    # Artifacts
    transcripts_filename: str = Field(
        default="transcripts.jsonl",
        description="Transcript file name inside the run output directory",
    )

    # LangSmith observability
    langsmith_tracing: bool = Field(
        default=False,
        validation_alias=AliasChoices("langsmith_tracing", "langchain_tracing_v2"),
        description="Enable LangSmith tracing",
    )
    langsmith_api_key: str = Field(
        default="",
        validation_alias=AliasChoices("langsmith_api_key", "langchain_api_key"),
        description="LangSmith API key",
    )
    langsmith_project: str = Field(
        default="graphgen-bench",
        validation_alias=AliasChoices("langsmith_project", "langchain_project"),
        description="LangSmith project name",
    )

    # Environment
    environment: Literal["development", "staging", "production"] = Field(
        default="development",
        description="Application environment",
    )
    log_level: Literal["DEBUG", "INFO", "WARNING", "ERROR"] = Field(
        default="INFO",
        description="Logging level",
    )

    @property
    def rate_limited(self) -> bool:
        return self.requests_per_second > 0

    @property
    def langsmith_enabled(self) -> bool:
        return self.langsmith_tracing and bool(self.langsmith_api_key)

    def default_endpoint(self) -> "ModelEndpoint":
        """Endpoint used when a run configuration names none."""
        from graphbench.models import ModelEndpoint

        return ModelEndpoint(
            base_url=self.base_url,
            model_name=self.model_name,
            api_key_env=self.api_key_env,
            max_tokens=self.max_tokens,
            request_timeout=self.request_timeout,
        )


@lru_cache
def get_settings() -> Settings:
    """Get cached settings instance."""
    return Settings()
