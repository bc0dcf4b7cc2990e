"""Shared fixtures for the banditsat test suite."""

import importlib.util
from pathlib import Path

import numpy as np
import pytest
from loguru import logger

from banditsat.contexts.formula import Formula

REPO_ROOT = Path(__file__).resolve().parents[1]
FIXTURES_PATH = REPO_ROOT / "data" / "instances" / "fixtures"
SCRIPTS_PATH = REPO_ROOT / "scripts"


@pytest.fixture(autouse=True)
def isolated_logs(tmp_path, monkeypatch):
    """Send Tier 1 and Tier 2 logs into the test's tmp directory."""
    monkeypatch.setattr("banditsat.utils.logger.LOGS_PATH", tmp_path / "logs")
    monkeypatch.setattr("banditsat.utils.event_logging.BATCH_EVENTS_FILE", tmp_path / "logs" / "events.log")
    yield
    logger.remove()


@pytest.fixture
def fixtures_path() -> Path:
    return FIXTURES_PATH


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(12345)


@pytest.fixture
def two_var_unsat() -> Formula:
    return Formula.from_lists(2, [[1, 2], [-1, 2], [1, -2], [-1, -2]])


@pytest.fixture
def php_3_2() -> Formula:
    from banditsat.contexts.formula.generators import pigeonhole

    return pigeonhole(3, 2)


def load_script(name: str):
    """Import scripts/<name>.py as a module (scripts are not a package)."""
    spec = importlib.util.spec_from_file_location(name, SCRIPTS_PATH / f"{name}.py")
    module = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(module)
    return module


@pytest.fixture(scope="session")
def run_solver_cli():
    return load_script("run_solver")


@pytest.fixture(scope="session")
def generate_cli():
    return load_script("generate_instances")


@pytest.fixture(scope="session")
def tail_log_cli():
    return load_script("tail_log")
