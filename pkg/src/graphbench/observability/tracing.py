"""Optional LangSmith tracing for endpoint calls."""

from __future__ import annotations

import asyncio
import os
from collections.abc import Callable
from functools import wraps
from typing import Any, TypeVar

import structlog

from graphbench.config.settings import get_settings

logger = structlog.get_logger(__name__)

# Optional LangSmith import
try:
    from langsmith import Client as LangSmithClient
    from langsmith import traceable

    LANGSMITH_AVAILABLE = True
except ImportError:
    LANGSMITH_AVAILABLE = False
    LangSmithClient = None
    traceable = None

def init_langsmith() -> bool:
    """Initialize the LangSmith client when tracing is enabled.

    Returns:
        True if LangSmith was initialized successfully
    """
    settings = get_settings()

    if not LANGSMITH_AVAILABLE:
        logger.warning("LangSmith not installed, tracing disabled")
        return False

    if not settings.langsmith_enabled:
        logger.info("LangSmith tracing not enabled")
        return False

    try:
        os.environ["LANGSMITH_API_KEY"] = settings.langsmith_api_key
        os.environ["LANGSMITH_PROJECT"] = settings.langsmith_project
        LangSmithClient(api_key=settings.langsmith_api_key)
        logger.info("LangSmith client initialized", project=settings.langsmith_project)
        return True
    except Exception as e:
        logger.error("Failed to initialize LangSmith", error=str(e))
        return False


F = TypeVar("F", bound=Callable[..., Any])


def trace_function(
    name: str | None = None,
    run_type: str = "chain",
    metadata: dict[str, Any] | None = None,
) -> Callable[[F], F]:
    """Decorator tracing a sync or async function with LangSmith.

    A plain pass-through when langsmith is missing or tracing is disabled.

    Args:
        name: Name for the trace (defaults to function name)
        run_type: Type of run (chain, tool, llm)
        metadata: Additional metadata to attach to the trace
    """

    def decorator(func: F) -> F:
        trace_name = name or func.__name__

        def traced() -> Callable[..., Any] | None:
            if LANGSMITH_AVAILABLE and traceable is not None and get_settings().langsmith_enabled:
                return traceable(name=trace_name, run_type=run_type, metadata=metadata or {})(func)  # type: ignore[no-any-return]
            return None

        if asyncio.iscoroutinefunction(func):

            @wraps(func)
            async def async_wrapper(*args: Any, **kwargs: Any) -> Any:
                traced_func = traced()
                if traced_func is not None:
                    return await traced_func(*args, **kwargs)
                return await func(*args, **kwargs)

            return async_wrapper  # type: ignore[return-value]

        @wraps(func)
        def sync_wrapper(*args: Any, **kwargs: Any) -> Any:
            traced_func = traced()
            if traced_func is not None:
                return traced_func(*args, **kwargs)
            return func(*args, **kwargs)

        return sync_wrapper  # type: ignore[return-value]

    return decorator
