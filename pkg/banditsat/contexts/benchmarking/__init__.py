"""
Benchmarking Context

Responsibilities:
- Batch runs over instance directories (parallel, incremental, resumable)
- BatchRecord CSV schema, cactus-plot data and PAR-2 summaries
- Single-run statistics reports and experiment presets

Owns: result files and their formats
Never: Changes solver behaviour (every run is a plain engine.solve call)
"""

from banditsat.contexts.benchmarking.cactus import CACTUS_COLUMNS, cactus_rows, write_cactus_csv
from banditsat.contexts.benchmarking.exceptions import BatchInputError, CactusInputError
from banditsat.contexts.benchmarking.presets import (
    EXPERIMENT_PRESETS_PATH,
    load_experiment_presets,
    resolve_preset,
)
from banditsat.contexts.benchmarking.records import (
    BATCH_COLUMNS,
    ERROR_VERDICT,
    BatchRecord,
    read_batch_csv,
    write_batch_csv,
)
from banditsat.contexts.benchmarking.report import (
    build_stats_report,
    record_from_result,
    write_stats_json,
)
from banditsat.contexts.benchmarking.runner import (
    find_instances,
    load_instance,
    plan_tasks,
    run_batch,
    run_instance,
)
from banditsat.contexts.benchmarking.summary import (
    DEFAULT_TIMEOUT_S,
    SUMMARY_COLUMNS,
    PolicySummary,
    par2_score,
    summarize_records,
)

__all__ = [
    # Records
    "BatchRecord",
    "BATCH_COLUMNS",
    "ERROR_VERDICT",
    "read_batch_csv",
    "write_batch_csv",
    # Running
    "load_instance",
    "find_instances",
    "plan_tasks",
    "run_instance",
    "run_batch",
    # Analysis
    "cactus_rows",
    "write_cactus_csv",
    "CACTUS_COLUMNS",
    "summarize_records",
    "par2_score",
    "PolicySummary",
    "SUMMARY_COLUMNS",
    "DEFAULT_TIMEOUT_S",
    # Reports and presets
    "build_stats_report",
    "record_from_result",
    "write_stats_json",
    "load_experiment_presets",
    "resolve_preset",
    "EXPERIMENT_PRESETS_PATH",
    # Errors
    "BatchInputError",
    "CactusInputError",
]
