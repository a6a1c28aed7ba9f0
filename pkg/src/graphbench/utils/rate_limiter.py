"""Request pacing and in-flight caps for endpoint traffic."""

import asyncio
import time
from types import TracebackType

import structlog

logger = structlog.get_logger(__name__)


class RateLimiter:
    """Token bucket limiting requests per second."""

    def __init__(
        self,
        rate: float,
        burst: int | None = None,
    ):
        """Initialize rate limiter.

        Args:
            rate: Maximum requests per second (> 0)
            burst: Maximum burst size (defaults to max(1, rate))
        """
        if rate <= 0:
            raise ValueError("rate must be positive")
        self.rate = rate
        self.burst = burst or max(1, int(rate))
        self.tokens = float(self.burst)
        self.last_update = time.monotonic()
        self._lock = asyncio.Lock()

    async def acquire(self, tokens: int = 1) -> float:
        """Take tokens, sleeping until enough are available.

        Returns:
            Seconds spent waiting
        """
        async with self._lock:
            waited = 0.0
            while True:
                self._refill()
                if self.tokens >= tokens:
                    self.tokens -= tokens
                    return waited

                wait_time = (tokens - self.tokens) / self.rate
                logger.debug("Request pacing: waiting", wait_seconds=round(wait_time, 3))
                await asyncio.sleep(wait_time)
                waited += wait_time

    def _refill(self) -> None:
        now = time.monotonic()
        elapsed = now - self.last_update
        self.last_update = now
        self.tokens = min(self.burst, self.tokens + elapsed * self.rate)

    async def __aenter__(self) -> "RateLimiter":
        await self.acquire()
        return self

    async def __aexit__(
        self,
        exc_type: type[BaseException] | None,
        exc_val: BaseException | None,
        exc_tb: TracebackType | None,
    ) -> None:
        pass


class ConcurrencyLimiter:
    """Semaphore capping the number of in-flight requests."""

    def __init__(self, max_concurrent: int):
        """Initialize concurrency limiter.

        Args:
            max_concurrent: Maximum concurrent operations (>= 1)
        """
        if max_concurrent < 1:
            raise ValueError("max_concurrent must be at least 1")
        self.max_concurrent = max_concurrent
        self._semaphore = asyncio.Semaphore(max_concurrent)
        self._in_flight = 0
        self._peak = 0

    async def acquire(self) -> None:
        await self._semaphore.acquire()
        self._in_flight += 1
        self._peak = max(self._peak, self._in_flight)
        logger.debug("Request slot acquired", in_flight=self._in_flight, cap=self.max_concurrent)

    def release(self) -> None:
        self._in_flight -= 1
        self._semaphore.release()

    async def __aenter__(self) -> "ConcurrencyLimiter":
        await self.acquire()
        return self

    async def __aexit__(
        self,
        exc_type: type[BaseException] | None,
        exc_val: BaseException | None,
        exc_tb: TracebackType | None,
    ) -> None:
        self.release()

    @property
    def in_flight(self) -> int:
        return self._in_flight

    @property
    def peak(self) -> int:
        """Highest number of simultaneous holders seen so far."""
        return self._peak
