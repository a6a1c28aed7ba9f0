"""Prompt template loading and versioning registry."""

import hashlib
import json
from pathlib import Path
from typing import Any

import structlog

logger = structlog.get_logger(__name__)

PROMPTS_DIR = Path(__file__).parent
RESOURCE_SUFFIXES = (".txt", ".json")


class PromptRegistry:
    """Registry for loading prompt templates and description tables."""

    def __init__(self, prompts_dir: Path | None = None):
        self.prompts_dir = prompts_dir or PROMPTS_DIR
        self._cache: dict[str, str] = {}
        self._hash: str | None = None

    def load(self, category: str, name: str, use_cache: bool = True) -> str:
        """Load a template from file.

        Args:
            category: Template category (system, templates)
            name: Template name (without extension)
            use_cache: Whether to use cached version

        Returns:
            Template content as string

        Raises:
            FileNotFoundError: If the template does not exist
        """
        cache_key = f"{category}/{name}"

        if use_cache and cache_key in self._cache:
            return self._cache[cache_key]

        path = self.prompts_dir / category / f"{name}.txt"

        if not path.exists():
            logger.error("Prompt not found", category=category, name=name, path=str(path))
            raise FileNotFoundError(f"Prompt not found: {path}")

        content = path.read_text(encoding="utf-8").strip()

        if use_cache:
            self._cache[cache_key] = content

        logger.debug("Loaded prompt", category=category, name=name)
        return content

    def load_json(self, category: str, name: str) -> Any:
        """Load a JSON description table."""
        path = self.prompts_dir / category / f"{name}.json"

        if not path.exists():
            logger.error("JSON file not found", category=category, name=name, path=str(path))
            raise FileNotFoundError(f"JSON file not found: {path}")

        with open(path, encoding="utf-8") as f:
            return json.load(f)

    def format_prompt(self, category: str, name: str, **kwargs: Any) -> str:
        """Load and format a template.

        Raises:
            KeyError: If a placeholder has no value
        """
        template = self.load(category, name)
        try:
            return template.format(**kwargs)
        except KeyError as e:
            logger.error("Missing template variable", category=category, name=name, missing=str(e))
            raise

    def template_hash(self) -> str:
        """SHA-256 over every template resource, keyed by relative path."""
        if self._hash is None:
            digest = hashlib.sha256()
            resources = sorted(
                path
                for path in self.prompts_dir.rglob("*")
                if path.is_file() and path.suffix in RESOURCE_SUFFIXES
            )
            for path in resources:
                digest.update(path.relative_to(self.prompts_dir).as_posix().encode("utf-8"))
                digest.update(b"\x00")
                digest.update(path.read_bytes())
                digest.update(b"\x00")
            self._hash = digest.hexdigest()
        return self._hash

    def clear_cache(self) -> None:
        self._cache.clear()
        self._hash = None
        logger.debug("Prompt cache cleared")


# Global registry instance
_registry = PromptRegistry()


def get_registry() -> PromptRegistry:
    return _registry


def template_hash() -> str:
    return _registry.template_hash()
