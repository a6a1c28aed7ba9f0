"""Molecule dataset ingestion."""

from pathlib import Path

import polars as pl
import structlog
from pydantic import ValidationError

from graphbench.errors import FileUnreadable, NoPositives
from graphbench.models import DatasetLoadResult, MoleculeRecord
from graphbench.utils import SeedLike, as_random

logger = structlog.get_logger(__name__)


def _reason(error: ValidationError) -> str:
    first = error.errors()[0]
    return str(first.get("msg", "invalid row")).removeprefix("Value error, ")


def load_dataset(
    path: Path,
    smiles_column: str = "smiles",
    label_column: str = "label",
) -> DatasetLoadResult:
    """Read a comma-separated molecule file with a header row.

    Every column is read as text; rows whose SMILES fails the syntax check
    or whose label is not 0/1 are collected as rejects instead of raising.

    Raises:
        FileUnreadable: If the file is missing, unparsable or lacks a column
        NoPositives: If no accepted row has label 1
    """
    try:
        frame = pl.read_csv(path, infer_schema_length=0, truncate_ragged_lines=True)
    except (OSError, pl.exceptions.PolarsError) as e:
        raise FileUnreadable(f"cannot read dataset {path}: {e}", field="dataset_path") from e

    missing = [column for column in (smiles_column, label_column) if column not in frame.columns]
    if missing:
        raise FileUnreadable(f"dataset {path} lacks columns {missing}", field="dataset_path")

    result = DatasetLoadResult()
    rows = frame.select(smiles_column, label_column).iter_rows()
    # Header is line 1
    for number, (smiles, label) in enumerate(rows, start=2):
        raw = f"{smiles or ''},{label or ''}"
        if smiles is None or label is None:
            result.rejects.append((number, raw, "missing field"))
            continue
        label_text = label.strip()
        if label_text not in ("0", "1"):
            result.rejects.append((number, raw, f"label {label_text!r} is not 0 or 1"))
            continue
        try:
            result.records.append(MoleculeRecord(smiles=smiles, label=int(label_text)))  # type: ignore[arg-type]
        except ValidationError as e:
            result.rejects.append((number, raw, _reason(e)))

    if result.rejects:
        logger.warning("Dataset rows rejected", path=str(path), rejected=len(result.rejects))
    if not result.positives:
        raise NoPositives(f"dataset {path} has no rows labelled 1", field=label_column)

    logger.info(
        "Dataset loaded",
        path=str(path),
        records=len(result.records),
        positives=len(result.positives),
    )
    return result


def sample_positives(dataset: DatasetLoadResult, count: int, seed: SeedLike) -> list[str]:
    """Draw up to ``count`` distinct positive SMILES with the given seed."""
    positives = [record.smiles for record in dataset.positives]
    rng = as_random(seed)
    return rng.sample(positives, min(count, len(positives)))
