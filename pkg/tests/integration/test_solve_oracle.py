"""
End-to-end solver correctness against the brute-force oracle.

Small Luby units make restart boundaries (and so resets) frequent even on
instances with a handful of conflicts.
"""

import numpy as np
import pytest

from banditsat.contexts.engine import SolverConfig, solve
from banditsat.contexts.formula import Formula, Verdict, brute_force_solve, evaluate, parse_dimacs
from banditsat.contexts.formula.generators import pigeonhole, random_3cnf

POLICIES = ["baseline", "fixed=0.2", "thompson-decay", "swucb"]


def config_for(descriptor, seed=0, **kwargs):
    base = SolverConfig(seed=seed, luby_unit=1, check_invariants=True, **kwargs)
    return SolverConfig.from_descriptor(descriptor, base)


def assert_matches_oracle(seeds, policies=POLICIES):
    for seed in seeds:
        formula = random_3cnf(12, 4.26, np.random.default_rng(seed))
        expected = brute_force_solve(formula).verdict
        for descriptor in policies:
            result = solve(formula, config_for(descriptor, seed=seed))
            assert result.verdict is expected, f"seed {seed}, policy {descriptor}"
            if expected is Verdict.SAT:
                assert evaluate(formula, result.model)


@pytest.mark.integration
@pytest.mark.parametrize(
    "clauses, num_vars",
    [([[1], [-1]], 1), ([[1, 2], [-1, 2], [1, -2], [-1, -2]], 2), ([[1, 2], []], 2)],
)
def test_small_unsat_examples(clauses, num_vars):
    """Test small UNSAT formulas."""
    assert solve(Formula.from_lists(num_vars, clauses)).verdict is Verdict.UNSAT


@pytest.mark.integration
def test_empty_formula_is_sat():
    """Test that a formula without clauses is SAT."""
    result = solve(Formula.from_lists(3, []))
    assert result.verdict is Verdict.SAT
    assert set(result.model) == {1, 2, 3}


@pytest.mark.integration
def test_parsed_fixture_solves(fixtures_path):
    """Test solving a parsed fixture file."""
    formula = parse_dimacs((fixtures_path / "small_sat.cnf").read_bytes())
    result = solve(formula)
    assert result.verdict is Verdict.SAT
    assert evaluate(formula, result.model)


@pytest.mark.integration
@pytest.mark.parametrize("descriptor", POLICIES + ["thompson-decay:k=2", "fixed=1:k=0"])
def test_pigeonhole_unsat_with_asserting_checks(descriptor):
    """Test PHP refutation with invariant checks enabled."""
    result = solve(pigeonhole(3, 2), config_for(descriptor))
    assert result.verdict is Verdict.UNSAT


@pytest.mark.integration
def test_harder_pigeonhole_with_resets():
    """Test a larger PHP refutation under resets."""
    result = solve(pigeonhole(5, 4), config_for("fixed=0.5", seed=3))

    assert result.verdict is Verdict.UNSAT
    assert result.stats.restarts > 0
    assert 0 < result.stats.resets <= result.stats.restarts


@pytest.mark.integration
def test_conflict_budget_gives_indeterminate():
    """Test that an exhausted budget gives INDET."""
    result = solve(pigeonhole(6, 5), SolverConfig(max_conflicts=5))

    assert result.verdict is Verdict.INDETERMINATE
    assert result.stats.conflicts == 5
    assert result.model is None


@pytest.mark.integration
def test_oracle_equivalence_sample():
    """Test agreement with the brute-force oracle on sixty seeds."""
    assert_matches_oracle(range(60))


@pytest.mark.slow
def test_oracle_equivalence_full():
    """Test agreement with the brute-force oracle on five hundred seeds."""
    assert_matches_oracle(range(500))


@pytest.mark.integration
def test_reduce_db_runs_during_search():
    """Test that clause database reduction happens during search."""
    formula = random_3cnf(50, 4.26, np.random.default_rng(8))
    config = SolverConfig.from_descriptor("thompson-decay", SolverConfig(luby_unit=1, learnt_limit=5))
    result = solve(formula, config)

    expected = result.verdict
    assert expected in (Verdict.SAT, Verdict.UNSAT)
    assert result.stats.deleted_clauses > 0
    assert solve(formula, SolverConfig()).verdict is expected
