"""
Solver configuration.

Defaults live in configs/solver_defaults.yaml and are loaded with OmegaConf, merged
with caller overrides, then validated into frozen dataclasses. A policy can also be
given as a compact descriptor string, the form used on the command line and in
batch CSVs:

    baseline | fixed=<p> | thompson | thompson-decay | swucb   [ :k=<k> | :k=all ]

Examples:
    >>> load_solver_config({"policy": "fixed=0.2", "seed": 7}).descriptor()
    'fixed=0.2'
    >>> load_solver_config({"policy": "thompson-decay:k=10"}).partial_k
    10
"""

from __future__ import annotations

import os
from dataclasses import asdict, dataclass, field, replace
from pathlib import Path
from typing import Any, Mapping, Optional, Union

from dotenv import load_dotenv
from omegaconf import OmegaConf

from banditsat.contexts.engine.exceptions import ConfigError

load_dotenv()
_REPO_DEFAULTS = Path(__file__).resolve().parents[3] / "configs" / "solver_defaults.yaml"
SOLVER_DEFAULTS_PATH = Path(os.getenv("SOLVER_DEFAULTS_PATH", str(_REPO_DEFAULTS)))

ALL = "all"
POLICY_KINDS = ("baseline", "fixed", "thompson", "swucb")

PartialK = Union[int, str, None]


@dataclass(frozen=True)
class PolicySpec:
    """
    Which bandit policy drives the restart boundaries, with its hyperparameters.

    `probability` is used by kind 'fixed'; `decay_enabled` and `decay` by
    'thompson'; `window` and `explore` by 'swucb'.
    """

    kind: str = "baseline"
    probability: float = 0.0
    decay_enabled: bool = True
    decay: float = 0.8
    window: int = 30
    explore: float = 0.2

    def __post_init__(self):
        if self.kind not in POLICY_KINDS:
            raise ConfigError("policy.kind", self.kind, f"one of {', '.join(POLICY_KINDS)}")
        if not 0.0 <= self.probability <= 1.0:
            raise ConfigError("policy.probability", self.probability, "p in [0, 1]")
        if not 0.0 < self.decay < 1.0:
            raise ConfigError("policy.decay", self.decay, "d in (0, 1)")
        if isinstance(self.window, bool) or not isinstance(self.window, int) or self.window < 1:
            raise ConfigError("policy.window", self.window, "integer tau >= 1")
        if not self.explore > 0.0:
            raise ConfigError("policy.explore", self.explore, "c > 0")

    @classmethod
    def from_descriptor(cls, text: str, base: Optional[PolicySpec] = None) -> PolicySpec:
        """
        Parse the policy half of a descriptor (no ':k=' suffix).

        Hyperparameters not expressed by the descriptor are taken from `base`.
        """
        base = base or cls()
        name = text.strip().lower()
        if name == "baseline":
            return replace(base, kind="baseline")
        if name == "thompson":
            return replace(base, kind="thompson", decay_enabled=False)
        if name == "thompson-decay":
            return replace(base, kind="thompson", decay_enabled=True)
        if name == "swucb":
            return replace(base, kind="swucb")
        if name.startswith("fixed="):
            raw = name.split("=", 1)[1]
            try:
                p = float(raw)
            except ValueError:
                raise ConfigError("policy.probability", raw, "a number in [0, 1]") from None
            return replace(base, kind="fixed", probability=p)
        raise ConfigError(
            "policy", text, "baseline, fixed=<p>, thompson, thompson-decay or swucb"
        )

    def descriptor(self) -> str:
        if self.kind == "fixed":
            return f"fixed={self.probability:g}"
        if self.kind == "thompson":
            return "thompson-decay" if self.decay_enabled else "thompson"
        return self.kind


def _check_partial_k(value: Any) -> PartialK:
    if value is None:
        return None
    if isinstance(value, str):
        if value.strip().lower() == ALL:
            return ALL
        try:
            value = int(value)
        except ValueError:
            raise ConfigError("partial_k", value, "an integer >= 0, 'all' or null") from None
    if isinstance(value, bool) or not isinstance(value, int) or value < 0:
        raise ConfigError("partial_k", value, "an integer >= 0, 'all' or null")
    return value


@dataclass(frozen=True)
class SolverConfig:
    """
    Everything that determines a run besides the formula.

    partial_k: None for full resets, an integer k for k-partial resets
    (0 behaves as a full reset), or ALL to keep the whole order (no reset at all).
    """

    policy: PolicySpec = field(default_factory=PolicySpec)
    partial_k: PartialK = None
    seed: int = 0
    max_conflicts: Optional[int] = None
    time_limit_s: Optional[float] = None
    luby_unit: int = 256
    activity_decay: float = 0.95
    clause_decay: float = 0.999
    ema_decay: float = 0.8
    flip_success: bool = False
    learnt_limit: int = 2000
    learnt_limit_growth: float = 1.1
    check_invariants: bool = False
    record_search_trace: bool = False

    def __post_init__(self):
        object.__setattr__(self, "partial_k", _check_partial_k(self.partial_k))
        if not isinstance(self.seed, int) or self.seed < 0:
            raise ConfigError("seed", self.seed, "a non-negative integer")
        if self.max_conflicts is not None and self.max_conflicts < 0:
            raise ConfigError("max_conflicts", self.max_conflicts, "null or >= 0")
        if self.time_limit_s is not None and not self.time_limit_s > 0:
            raise ConfigError("time_limit_s", self.time_limit_s, "null or > 0")
        if self.luby_unit < 1:
            raise ConfigError("luby_unit", self.luby_unit, ">= 1")
        if not 0.0 < self.activity_decay < 1.0:
            raise ConfigError("activity_decay", self.activity_decay, "in (0, 1)")
        if not 0.0 < self.clause_decay <= 1.0:
            raise ConfigError("clause_decay", self.clause_decay, "in (0, 1]")
        if not 0.0 < self.ema_decay < 1.0:
            raise ConfigError("ema_decay", self.ema_decay, "lambda in (0, 1)")
        if self.learnt_limit < 1:
            raise ConfigError("learnt_limit", self.learnt_limit, ">= 1")
        if self.learnt_limit_growth < 1.0:
            raise ConfigError("learnt_limit_growth", self.learnt_limit_growth, ">= 1")

    @classmethod
    def from_descriptor(cls, text: str, base: Optional[SolverConfig] = None) -> SolverConfig:
        """Apply a full descriptor such as 'thompson-decay:k=10' on top of `base`."""
        base = base or cls()
        policy_text, _, suffix = text.partition(":")
        partial_k: PartialK = None
        if suffix:
            key, _, raw = suffix.partition("=")
            if key.strip().lower() != "k" or not raw:
                raise ConfigError("policy", text, "a ':k=<k>' or ':k=all' suffix")
            partial_k = _check_partial_k(raw.strip())
        return replace(
            base,
            policy=PolicySpec.from_descriptor(policy_text, base.policy),
            partial_k=partial_k,
        )

    def descriptor(self) -> str:
        text = self.policy.descriptor()
        if self.partial_k is not None:
            text += f":k={self.partial_k}"
        return text

    def to_dict(self) -> dict:
        return asdict(self)


def load_solver_config(
    overrides: Optional[Mapping[str, Any]] = None,
    config_path: Optional[Path] = None,
) -> SolverConfig:
    """
    Load solver defaults from YAML and apply overrides.

    Args:
        overrides: Nested mapping merged over the defaults. A string under
                   'policy' is read as a descriptor (e.g. 'fixed=0.2:k=5').
        config_path: Optional YAML path (defaults to SOLVER_DEFAULTS_PATH)

    Returns:
        Validated SolverConfig

    Raises:
        ConfigError: If any value is out of range or the descriptor is malformed
    """
    config_path = config_path or SOLVER_DEFAULTS_PATH
    merged = OmegaConf.load(config_path) if config_path.exists() else OmegaConf.create({})

    overrides = dict(overrides or {})
    descriptor = overrides.pop("policy", None)
    if isinstance(descriptor, Mapping):
        overrides["policy"] = dict(descriptor)
        descriptor = None

    merged = OmegaConf.merge(merged, OmegaConf.create(overrides))
    data = OmegaConf.to_container(merged, resolve=True)

    known = set(SolverConfig.__dataclass_fields__)
    unknown = sorted(set(data) - known)
    if unknown:
        raise ConfigError("config keys", unknown, f"a subset of {sorted(known)}")

    policy_data = data.pop("policy", None) or {}
    policy_known = set(PolicySpec.__dataclass_fields__)
    unknown = sorted(set(policy_data) - policy_known)
    if unknown:
        raise ConfigError("policy keys", unknown, f"a subset of {sorted(policy_known)}")

    policy = PolicySpec(**policy_data)
    config = SolverConfig(policy=policy, **data)
    if descriptor is not None:
        # Descriptor suffix decides partial_k unless the override also set it
        explicit_k = "partial_k" in overrides
        config = SolverConfig.from_descriptor(str(descriptor), config)
        if explicit_k:
            config = replace(config, partial_k=overrides["partial_k"])
    return config
