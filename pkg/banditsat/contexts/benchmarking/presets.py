"""
Experiment presets for the batch harness.

Named lists of policy descriptors in configs/experiment_presets.yaml. Nested entries
are flattened the same way everywhere: category.name -> category_name. A top-level
list is a preset under its own name.

Examples:
    >>> resolve_preset("sweep_fixed")
    ['baseline', 'fixed=0.05', 'fixed=0.1', 'fixed=0.2', 'fixed=0.5']
"""

import os
from pathlib import Path
from typing import Optional

from dotenv import load_dotenv
from omegaconf import OmegaConf

load_dotenv()
_REPO_PRESETS = Path(__file__).resolve().parents[3] / "configs" / "experiment_presets.yaml"
EXPERIMENT_PRESETS_PATH = Path(os.getenv("EXPERIMENT_PRESETS_PATH", str(_REPO_PRESETS)))


def load_experiment_presets(config_path: Optional[Path] = None) -> dict[str, list[str]]:
    """
    Load experiment_presets.yaml and flatten to a single-level dict.

    Args:
        config_path: Optional path (defaults to EXPERIMENT_PRESETS_PATH)

    Returns:
        Mapping preset name -> policy descriptors
    """
    if config_path is None:
        config_path = EXPERIMENT_PRESETS_PATH

    nested = OmegaConf.to_container(OmegaConf.load(config_path), resolve=True)

    flattened = {}
    for category, presets in nested.items():
        if isinstance(presets, list):
            flattened[category] = [str(p) for p in presets]
            continue
        for name, descriptors in presets.items():
            flattened[f"{category}_{name}"] = [str(p) for p in descriptors]

    return flattened


def resolve_preset(name: str, config_path: Optional[Path] = None) -> list[str]:
    """
    Policy descriptors of a named preset.

    Raises:
        ValueError: If the preset does not exist
    """
    presets = load_experiment_presets(config_path)
    if name not in presets:
        raise ValueError(f"Preset '{name}' not found. Available presets: {sorted(presets)}")
    return presets[name]
