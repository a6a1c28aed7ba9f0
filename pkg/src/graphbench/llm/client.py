"""Chat-completion endpoint client."""

import time
from datetime import datetime, timezone

UTC = timezone.utc
from typing import Any, Protocol

import httpx
import structlog
from tenacity import (
    AsyncRetrying,
    RetryCallState,
    retry_if_exception_type,
    stop_after_attempt,
    wait_random_exponential,
)
from tenacity.wait import wait_base

from graphbench.config.settings import Settings, get_settings
from graphbench.errors import (
    AuthError,
    EndpointError,
    EndpointTimeout,
    EndpointUnavailable,
    MalformedEndpointReply,
    RateLimited,
)
from graphbench.models import AttemptRecord, ModelEndpoint, PromptBundle, TokenUsage, Transcript
from graphbench.observability import trace_function
from graphbench.utils import ConcurrencyLimiter, RateLimiter

logger = structlog.get_logger(__name__)

TRANSIENT_ERRORS = (RateLimited, EndpointTimeout, EndpointUnavailable)


class CompletionClient(Protocol):
    """Anything that turns a prompt bundle into a recorded reply."""

    @property
    def descriptor(self) -> dict[str, Any]: ...

    async def complete_transcript(
        self,
        bundle: PromptBundle,
        request_id: str,
        seed_lineage: list[int] | None = None,
        temperature: float | None = None,
    ) -> Transcript: ...

    async def close(self) -> None: ...


def build_transcript(
    request_id: str,
    bundle: PromptBundle,
    response_text: str,
    started_at: datetime,
    duration_ms: float,
    endpoint: dict[str, Any],
    seed_lineage: list[int] | None = None,
    usage: TokenUsage | None = None,
    retries: list[AttemptRecord] | None = None,
) -> Transcript:
    return Transcript(
        request_id=request_id,
        bundle=bundle,
        response_text=response_text,
        started_at=started_at,
        duration_ms=duration_ms,
        usage=usage or TokenUsage(),
        endpoint=endpoint,
        template_hash=bundle.template_hash,
        prompt_hash=bundle.prompt_hash,
        seed_lineage=seed_lineage or [],
        retries=retries or [],
    )


class ChatCompletionClient:
    """Client for chat-completion style HTTP endpoints.

    Retries timeouts, HTTP 429 and 5xx replies with jittered exponential
    backoff; authentication failures and other client errors are raised at
    once.
    """

    def __init__(
        self,
        endpoint: ModelEndpoint,
        settings: Settings | None = None,
        transport: httpx.AsyncBaseTransport | None = None,
        wait: wait_base | None = None,
        concurrency: ConcurrencyLimiter | None = None,
        rate_limiter: RateLimiter | None = None,
    ):
        """Initialize the client.

        Args:
            endpoint: Endpoint and sampling parameters
            settings: Transport policy (defaults to the cached settings)
            transport: httpx transport override, e.g. a MockTransport in tests
            wait: tenacity wait strategy override
            concurrency: Shared in-flight cap
            rate_limiter: Shared request pacing
        """
        settings = settings or get_settings()
        self.endpoint = endpoint
        self.retry_attempts = settings.retry_attempts
        self.wait = wait or wait_random_exponential(multiplier=1, max=settings.retry_max_wait)
        self.concurrency = concurrency or ConcurrencyLimiter(settings.max_concurrency)
        if rate_limiter is None and settings.rate_limited:
            rate_limiter = RateLimiter(settings.requests_per_second)
        self.rate_limiter = rate_limiter
        self._transport = transport
        self._client: httpx.AsyncClient | None = None

        logger.info(
            "Completion client initialized",
            model=endpoint.model_name,
            base_url=endpoint.base_url,
            max_concurrency=self.concurrency.max_concurrent,
            retry_attempts=self.retry_attempts,
        )

    async def __aenter__(self) -> "ChatCompletionClient":
        return self

    async def __aexit__(self, exc_type: Any, exc_val: Any, exc_tb: Any) -> None:
        await self.close()

    @property
    def client(self) -> httpx.AsyncClient:
        """Get HTTP client, creating if needed."""
        if self._client is None:
            self._client = httpx.AsyncClient(
                timeout=self.endpoint.request_timeout,
                transport=self._transport,
            )
        return self._client

    @property
    def descriptor(self) -> dict[str, Any]:
        return self.endpoint.descriptor()

    @property
    def url(self) -> str:
        return f"{self.endpoint.base_url.rstrip('/')}/chat/completions"

    def _payload(self, bundle: PromptBundle, endpoint: ModelEndpoint) -> dict[str, Any]:
        return {
            "model": endpoint.model_name,
            "messages": [
                {"role": "system", "content": bundle.system_text},
                {"role": "user", "content": bundle.user_text},
            ],
            "temperature": endpoint.temperature,
            "max_tokens": endpoint.max_tokens,
        }

    async def _post(self, api_key: str, payload: dict[str, Any]) -> dict[str, Any]:
        async with self.concurrency:
            if self.rate_limiter is not None:
                await self.rate_limiter.acquire()
            try:
                response = await self.client.post(
                    self.url,
                    json=payload,
                    headers={"Authorization": f"Bearer {api_key}"},
                )
            except httpx.TimeoutException as e:
                raise EndpointTimeout(f"request timed out after {self.endpoint.request_timeout}s") from e
            except httpx.TransportError as e:
                raise EndpointUnavailable(f"transport error: {e}") from e

        status = response.status_code
        if status in (401, 403):
            raise AuthError(
                f"endpoint rejected credentials (HTTP {status})",
                field=self.endpoint.api_key_env,
                status_code=status,
            )
        if status == 429:
            raise RateLimited("HTTP 429 from endpoint", status_code=status)
        if status >= 500:
            raise EndpointUnavailable(f"HTTP {status} from endpoint", status_code=status)
        if status >= 400:
            raise EndpointError(f"HTTP {status} from endpoint: {response.text[:200]}", status_code=status)
        try:
            body: dict[str, Any] = response.json()
        except ValueError as e:
            raise MalformedEndpointReply("reply is not JSON") from e
        return body

    @staticmethod
    def _extract(body: dict[str, Any]) -> tuple[str, TokenUsage]:
        try:
            content = body["choices"][0]["message"]["content"]
        except (KeyError, IndexError, TypeError) as e:
            raise MalformedEndpointReply("reply has no choices[0].message.content") from e
        if not isinstance(content, str):
            raise MalformedEndpointReply("message content is not text")
        usage = body.get("usage") or {}
        return content, TokenUsage(
            prompt_tokens=int(usage.get("prompt_tokens", 0) or 0),
            completion_tokens=int(usage.get("completion_tokens", 0) or 0),
        )

    @trace_function(name="chat_completion", run_type="llm")
    async def complete_transcript(
        self,
        bundle: PromptBundle,
        request_id: str,
        seed_lineage: list[int] | None = None,
        temperature: float | None = None,
    ) -> Transcript:
        """Send one prompt and record the exchange.

        Args:
            bundle: Rendered prompt
            request_id: Deterministic id the transcript is stored under
            seed_lineage: Seed path that produced the prompt inputs
            temperature: Per-request override of the endpoint temperature

        Raises:
            AuthError: Missing API key or rejected credentials
            RateLimited: HTTP 429 persisted through every attempt
            EndpointTimeout: Timeouts persisted through every attempt
            EndpointUnavailable: 5xx or transport failures persisted
            MalformedEndpointReply: Reply without assistant text
        """
        api_key = self.endpoint.resolve_api_key()
        if api_key is None:
            raise AuthError(
                f"API key variable {self.endpoint.api_key_env} is not set",
                field=self.endpoint.api_key_env,
            )

        endpoint = self.endpoint if temperature is None else self.endpoint.with_temperature(temperature)
        payload = self._payload(bundle, endpoint)
        retries: list[AttemptRecord] = []

        def record_failure(state: RetryCallState) -> None:
            error = state.outcome.exception() if state.outcome else None
            retries.append(
                AttemptRecord(
                    attempt=state.attempt_number,
                    status_code=getattr(error, "status_code", None),
                    error=type(error).__name__ if error else "unknown",
                )
            )
            logger.debug(
                "Retry scheduled",
                request_id=request_id,
                attempt=state.attempt_number,
                error=str(error),
            )

        started_at = datetime.now(UTC)
        start = time.perf_counter()
        body: dict[str, Any] = {}
        async for attempt in AsyncRetrying(
            stop=stop_after_attempt(self.retry_attempts),
            wait=self.wait,
            retry=retry_if_exception_type(TRANSIENT_ERRORS),
            before_sleep=record_failure,
            reraise=True,
        ):
            with attempt:
                body = await self._post(api_key, payload)

        text, usage = self._extract(body)
        duration_ms = (time.perf_counter() - start) * 1000
        logger.debug(
            "Completion received",
            request_id=request_id,
            duration_ms=round(duration_ms, 1),
            retries=len(retries),
            completion_tokens=usage.completion_tokens,
        )
        return build_transcript(
            request_id=request_id,
            bundle=bundle,
            response_text=text,
            started_at=started_at,
            duration_ms=duration_ms,
            endpoint=endpoint.descriptor(),
            seed_lineage=seed_lineage,
            usage=usage,
            retries=retries,
        )

    async def complete(self, bundle: PromptBundle, request_id: str = "adhoc") -> str:
        """Assistant text for one prompt."""
        transcript = await self.complete_transcript(bundle, request_id)
        return transcript.response_text

    async def close(self) -> None:
        """Close the HTTP client."""
        if self._client:
            await self._client.aclose()
            self._client = None
