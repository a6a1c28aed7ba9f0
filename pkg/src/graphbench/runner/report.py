"""Render report tables as aligned text, CSV and JSON."""

from collections.abc import Iterable
from pathlib import Path

import polars as pl
import structlog
from pydantic import ValidationError

from graphbench.errors import ConfigError
from graphbench.models import ReportTable

logger = structlog.get_logger(__name__)

REPORT_STEM = "report"
FORMAT_SUFFIXES = {"text": ".txt", "csv": ".csv"}


def _header(table: ReportTable) -> list[str]:
    leading = ["Setting", "Prompt"] if table.has_settings else ["Prompt"]
    return leading + [column.header for column in table.columns]


def _body(table: ReportTable) -> list[list[str]]:
    rows = []
    for row in table.rows:
        leading = [row.setting, row.style] if table.has_settings else [row.style]
        rows.append(leading + [cell.render() for cell in row.cells])
    return rows


def render_text(table: ReportTable) -> str:
    """Aligned plain-text table followed by the footer."""
    header = _header(table)
    body = _body(table)
    widths = [max(len(line[i]) for line in [header, *body]) for i in range(len(header))]

    def line(values: list[str]) -> str:
        return "  ".join(value.ljust(width) for value, width in zip(values, widths, strict=True)).rstrip()

    lines = [table.title, line(header), "  ".join("-" * width for width in widths)]
    lines.extend(line(values) for values in body)
    if table.footer:
        lines.append("")
        lines.extend(table.footer)
    return "\n".join(lines) + "\n"


def render_csv(table: ReportTable) -> str:
    """One CSV row per report row; footer lines are not included."""
    header = _header(table)
    body = _body(table)
    frame = pl.DataFrame(
        {name: [values[i] for values in body] for i, name in enumerate(header)},
        schema={name: pl.String for name in header},
    )
    return frame.write_csv()


def emit_report(
    table: ReportTable,
    output_dir: Path,
    formats: Iterable[str] = ("text", "csv"),
) -> list[Path]:
    """Write the table in each format plus ``report.json``.

    Returns:
        Paths written, JSON last
    """
    output_dir.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []
    for name in formats:
        if name not in FORMAT_SUFFIXES:
            raise ConfigError(f"unknown report format {name!r}", field="format")
        path = output_dir / f"{REPORT_STEM}{FORMAT_SUFFIXES[name]}"
        path.write_text(render_text(table) if name == "text" else render_csv(table), encoding="utf-8")
        written.append(path)

    json_path = output_dir / f"{REPORT_STEM}.json"
    json_path.write_text(table.model_dump_json(indent=2) + "\n", encoding="utf-8")
    written.append(json_path)
    logger.info("Report written", output_dir=str(output_dir), files=[path.name for path in written])
    return written


def load_report(path: Path) -> ReportTable:
    """Read a saved ``report.json``.

    Raises:
        ConfigError: If the file is missing or not a report table
    """
    try:
        return ReportTable.model_validate_json(path.read_text(encoding="utf-8"))
    except OSError as e:
        raise ConfigError(f"cannot read report {path}: {e}", field="report") from e
    except ValidationError as e:
        raise ConfigError(f"{path} is not a saved report: {e.error_count()} errors", field="report") from e
