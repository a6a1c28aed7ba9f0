"""GraphBench CLI entrypoint."""

import asyncio
import os
import sys
from pathlib import Path
from typing import Any

import click
import structlog
from pydantic import ValidationError

from graphbench.config.settings import Settings, get_settings
from graphbench.errors import BenchError
from graphbench.models import ReportTable, RunConfig


def setup_logging(log_level: str) -> None:
    """Configure structured logging."""
    structlog.configure(
        processors=[
            structlog.stdlib.filter_by_level,
            structlog.stdlib.add_logger_name,
            structlog.stdlib.add_log_level,
            structlog.stdlib.PositionalArgumentsFormatter(),
            structlog.processors.TimeStamper(fmt="iso"),
            structlog.processors.StackInfoRenderer(),
            structlog.processors.format_exc_info,
            structlog.processors.UnicodeDecoder(),
            structlog.dev.ConsoleRenderer() if log_level == "DEBUG" else structlog.processors.JSONRenderer(),
        ],
        wrapper_class=structlog.stdlib.BoundLogger,
        context_class=dict,
        logger_factory=structlog.stdlib.LoggerFactory(),
        cache_logger_on_first_use=True,
    )


def fail(message: str) -> None:
    click.echo(f"Error: {message}", err=True)
    sys.exit(1)


def error_message(error: Exception) -> str:
    if isinstance(error, BenchError):
        return error.message
    if isinstance(error, ValidationError):
        first = error.errors()[0]
        location = ".".join(str(part) for part in first["loc"])
        return f"invalid configuration at {location or 'top level'}: {first['msg']}"
    return str(error)


async def execute(config: RunConfig, settings: Settings) -> ReportTable:
    """Run a configuration with the client it names, closing the client afterwards."""
    from graphbench.runner import build_client, run

    client = build_client(config, settings)
    try:
        return await run(config, client, settings)
    finally:
        await client.close()


def finish(table: ReportTable, output_dir: Path, formats: tuple[str, ...]) -> None:
    from graphbench.runner import emit_report, render_text

    emit_report(table, output_dir, formats)
    click.echo(render_text(table))
    click.echo(f"Report written to {output_dir}")


FORMAT_OPTION = click.option(
    "--format",
    "formats",
    type=click.Choice(["text", "csv"]),
    multiple=True,
    default=("text", "csv"),
    help="Report formats to write (repeatable)",
)


@click.group()
@click.option(
    "--log-level",
    type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR"]),
    default=None,
    help="Set logging level",
)
@click.pass_context
def cli(ctx: click.Context, log_level: str | None) -> None:
    """GraphBench - benchmark LLMs on graph generation tasks."""
    ctx.ensure_object(dict)

    settings = get_settings()
    effective_log_level = log_level or settings.log_level

    setup_logging(effective_log_level)
    ctx.obj["settings"] = settings


@cli.command("run")
@click.option(
    "--config",
    "config_path",
    type=click.Path(exists=True, dir_okay=False, path_type=Path),
    required=True,
    help="Run configuration (TOML)",
)
@click.option("--seed", type=int, default=None, help="Master seed override")
@click.option(
    "--output-dir",
    type=click.Path(file_okay=False, path_type=Path),
    default=None,
    help="Output directory override",
)
@click.option("--profile", default=None, help="Endpoint profile from the config's [profiles] table")
@click.option("--trials", type=int, default=None, help="Trials per cell override")
@FORMAT_OPTION
@click.pass_context
def run_command(
    ctx: click.Context,
    config_path: Path,
    seed: int | None,
    output_dir: Path | None,
    profile: str | None,
    trials: int | None,
    formats: tuple[str, ...],
) -> None:
    """Run an experiment against a live endpoint.

    Example:
        graphbench run --config configs/rules.toml --profile gpt4
    """
    from graphbench.observability import init_langsmith

    settings: Settings = ctx.obj["settings"]
    overrides: dict[str, Any] = {
        "master_seed": seed,
        "output_dir": output_dir,
        "profile": profile,
        "trial_count": trials,
    }
    try:
        config = RunConfig.from_toml(config_path, overrides)
        init_langsmith()
        table = asyncio.run(execute(config, settings))
        finish(table, config.output_dir, formats)
    except (BenchError, ValidationError) as e:
        fail(error_message(e))


@cli.command()
@click.option(
    "--config",
    "config_path",
    type=click.Path(exists=True, dir_okay=False, path_type=Path),
    required=True,
    help="Run configuration the transcripts were recorded with",
)
@click.option(
    "--store",
    type=click.Path(exists=True, dir_okay=False, path_type=Path),
    required=True,
    help="Recorded transcripts (JSON Lines)",
)
@click.option(
    "--output-dir",
    type=click.Path(file_okay=False, path_type=Path),
    default=None,
    help="Output directory for the replayed report",
)
@FORMAT_OPTION
@click.pass_context
def replay(
    ctx: click.Context,
    config_path: Path,
    store: Path,
    output_dir: Path | None,
    formats: tuple[str, ...],
) -> None:
    """Recompute a report from recorded transcripts without network access.

    Example:
        graphbench replay --config configs/rules.toml --store runs/rules/transcripts.jsonl
    """
    settings: Settings = ctx.obj["settings"]
    try:
        config = RunConfig.from_toml(config_path)
        config = config.with_overrides(
            endpoint=None,
            profile=None,
            replay_store=store,
            output_dir=output_dir or config.output_dir.with_name(config.output_dir.name + "-replay"),
        )
        table = asyncio.run(execute(config, settings))
        finish(table, config.output_dir, formats)
    except (BenchError, ValidationError) as e:
        fail(error_message(e))


@cli.command()
@click.option(
    "--rule",
    "kind",
    type=click.Choice(["Tree", "Cycle", "Components", "Planar", "KRegular", "Wheel", "Bipartite", "KColor", "TwoComponents"]),
    required=True,
    help="Rule kind",
)
@click.option("--preset", type=click.Choice(["Small", "Medium", "Large"]), default=None, help="Size preset")
@click.option("--n", "n", type=int, default=None, help="Node count")
@click.option("--m", "m", type=int, default=None, help="Edge count")
@click.option("--k", "k", type=int, default=None, help="Components, degree or colours")
@click.option("--samples", type=int, default=10_000, help="Monte-Carlo samples")
@click.option("--seed", type=int, default=0, help="Sampling seed")
def calibrate(
    kind: str,
    preset: str | None,
    n: int | None,
    m: int | None,
    k: int | None,
    samples: int,
    seed: int,
) -> None:
    """Estimate how often a random graph already satisfies a rule.

    Example:
        graphbench calibrate --rule Planar --n 15 --m 24
    """
    from graphbench.models import RuleSpec
    from graphbench.rules import estimate_random_valid_prob

    params = {key: value for key, value in {"n": n, "m": m, "k": k}.items() if value is not None}
    if preset is None and not params:
        preset = "Medium"
    try:
        spec = RuleSpec.model_validate({"kind": kind, "preset": preset, **params})
        estimate = estimate_random_valid_prob(spec, samples, seed)
    except (BenchError, ValidationError, ValueError) as e:
        fail(error_message(e))
        return

    click.echo(
        f"{spec.label}: {estimate.probability:.4f} ± {estimate.standard_error:.4f} "
        f"({estimate.hits}/{estimate.samples} random graphs valid)"
    )


@cli.command()
@click.argument("path", type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.option(
    "--format",
    "output_format",
    type=click.Choice(["text", "csv"]),
    default="text",
    help="Output format",
)
def report(path: Path, output_format: str) -> None:
    """Re-render a saved report.json.

    Example:
        graphbench report runs/rules/report.json --format csv
    """
    from graphbench.runner import load_report, render_csv, render_text

    try:
        table = load_report(path)
    except BenchError as e:
        fail(e.message)
        return
    click.echo(render_text(table) if output_format == "text" else render_csv(table), nl=False)


@cli.command()
@click.pass_context
def config(ctx: click.Context) -> None:
    """Show current configuration."""
    from graphbench.prompts import template_hash

    settings: Settings = ctx.obj["settings"]

    click.echo("GraphBench Configuration")
    click.echo("=" * 40)
    click.echo(f"Environment: {settings.environment}")
    click.echo(f"Log Level: {settings.log_level}")
    click.echo(f"Endpoint: {settings.base_url}")
    click.echo(f"Model: {settings.model_name}")
    click.echo()
    click.echo("Transport:")
    click.echo(f"  Retry attempts: {settings.retry_attempts}")
    click.echo(f"  Max concurrency: {settings.max_concurrency}")
    click.echo(f"  Rate limit: {settings.requests_per_second if settings.rate_limited else 'none'}")
    click.echo()
    click.echo("API Keys:")
    click.echo(f"  {settings.api_key_env}: {'✓ Set' if os.environ.get(settings.api_key_env) else '✗ Not set'}")
    click.echo(f"  LangSmith: {'✓ Set' if settings.langsmith_api_key else '✗ Not set'}")
    click.echo()
    click.echo("Features:")
    click.echo(f"  LangSmith Tracing: {'Enabled' if settings.langsmith_enabled else 'Disabled'}")
    click.echo(f"  Template hash: {template_hash()[:16]}")


@cli.command()
def version() -> None:
    """Show version information."""
    from graphbench import __version__

    click.echo(f"GraphBench v{__version__}")


def main() -> None:
    """Main entry point."""
    cli(obj={})


if __name__ == "__main__":
    main()
