from graphbench.runner.experiment import (
    ExperimentRunner,
    Setting,
    TrialRecord,
    build_client,
    resolve_settings,
    run,
    task_label,
)
from graphbench.runner.report import emit_report, load_report, render_csv, render_text

__all__ = [
    "ExperimentRunner",
    "Setting",
    "TrialRecord",
    "build_client",
    "emit_report",
    "load_report",
    "render_csv",
    "render_text",
    "resolve_settings",
    "run",
    "task_label",
]
