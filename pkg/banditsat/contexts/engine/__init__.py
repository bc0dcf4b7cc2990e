"""
Engine Context

Responsibilities:
- CDCL search: two-watched-literal propagation, first-UIP learning, EVSIDS branching
- Luby restart schedule and glue-protected clause database reduction
- Solver configuration (YAML defaults, policy descriptors) and run statistics

Owns: the search state (trail, watches, activity table, phases, clause database)
Never: Decides between restart and reset (the reset context does, through the boundary hook)
"""

from banditsat.contexts.engine.activity import ActivityTable
from banditsat.contexts.engine.config import (
    ALL,
    SOLVER_DEFAULTS_PATH,
    PolicySpec,
    SolverConfig,
    load_solver_config,
)
from banditsat.contexts.engine.exceptions import ConfigError, InvariantViolation, SolverStateError
from banditsat.contexts.engine.luby import luby, restart_threshold
from banditsat.contexts.engine.solver import (
    ClauseRef,
    ConflictAnalysis,
    Solver,
    backjump_level,
    compute_lbd,
    solve,
)
from banditsat.contexts.engine.stats import RunStats, SolveResult

__all__ = [
    # Search
    "Solver",
    "solve",
    "SolveResult",
    "RunStats",
    "ClauseRef",
    "ConflictAnalysis",
    "compute_lbd",
    "backjump_level",
    "ActivityTable",
    "luby",
    "restart_threshold",
    # Configuration
    "SolverConfig",
    "PolicySpec",
    "ALL",
    "SOLVER_DEFAULTS_PATH",
    "load_solver_config",
    # Errors
    "ConfigError",
    "SolverStateError",
    "InvariantViolation",
]
