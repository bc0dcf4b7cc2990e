"""Unit tests for the CNF data model, evaluation and the brute-force oracle."""

import pytest

from banditsat.contexts.formula import (
    Clause,
    Formula,
    IncompleteAssignmentError,
    InvalidClauseError,
    Literal,
    OracleLimitError,
    Outcome,
    Verdict,
    brute_force_solve,
    evaluate,
)
from banditsat.contexts.formula.generators import random_3cnf


@pytest.mark.unit
def test_literal_negation_flips_polarity_only():
    """Test that negating a literal keeps its variable."""
    lit = Literal(4, True)

    assert -lit == Literal(4, False)
    assert -(-lit) == lit
    assert Literal.from_dimacs(-7).to_dimacs() == -7


@pytest.mark.unit
def test_clause_rejects_duplicates_and_tautologies():
    """Test that clauses refuse repeated and complementary literals."""
    with pytest.raises(InvalidClauseError):
        Clause.from_dimacs([1, 1])
    with pytest.raises(InvalidClauseError):
        Clause.from_dimacs([1, -1])


@pytest.mark.unit
def test_clause_lbd_present_iff_learnt():
    """Test that lbd is set exactly for learnt clauses."""
    with pytest.raises(InvalidClauseError):
        Clause((Literal(1),), learnt=True)
    with pytest.raises(InvalidClauseError):
        Clause((Literal(1),), lbd=2)
    assert Clause((Literal(1),), learnt=True, lbd=1).lbd == 1


@pytest.mark.unit
def test_formula_rejects_out_of_range_literal():
    """Test that literals above num_vars are rejected."""
    with pytest.raises(InvalidClauseError):
        Formula(1, (Clause.from_dimacs([2]),))


@pytest.mark.unit
def test_evaluate_examples():
    """Test model checking on small formulas."""
    formula = Formula.from_lists(2, [[1, -2], [2]])

    assert evaluate(formula, {1: True, 2: True})
    assert not evaluate(formula, {1: False, 2: True})
    assert evaluate(Formula.from_lists(3, []), {1: False, 2: True, 3: False})


@pytest.mark.unit
def test_evaluate_rejects_incomplete_assignment():
    """Test that evaluate names the unassigned variables."""
    formula = Formula.from_lists(3, [[1, 2, 3]])

    with pytest.raises(IncompleteAssignmentError) as exc_info:
        evaluate(formula, {1: True})

    assert exc_info.value.missing == [2, 3]


@pytest.mark.unit
def test_brute_force_examples():
    """Test oracle verdicts on small formulas."""
    assert brute_force_solve(Formula.from_lists(1, [[1], [-1]])).verdict is Verdict.UNSAT

    outcome = brute_force_solve(Formula.from_lists(2, [[1, 2]]))
    assert outcome.verdict is Verdict.SAT
    assert outcome.model == {1: False, 2: True}


@pytest.mark.unit
def test_brute_force_lexicographic_first_model():
    """Test that the oracle returns the lexicographically first model."""
    # Models of (x1 | x3) & (-x2): first in order (x1 most significant, False first) is 0,0,1
    outcome = brute_force_solve(Formula.from_lists(3, [[1, 3], [-2]]))
    assert outcome.model == {1: False, 2: False, 3: True}


@pytest.mark.unit
def test_brute_force_guard():
    """Test that the oracle refuses formulas above its variable limit."""
    with pytest.raises(OracleLimitError):
        brute_force_solve(Formula.from_lists(26, [[26]]))


@pytest.mark.unit
def test_brute_force_models_always_evaluate_true(rng):
    """Test that every oracle model satisfies its formula."""
    for _ in range(50):
        formula = random_3cnf(10, 3.5, rng)
        outcome = brute_force_solve(formula)
        if outcome.is_sat:
            assert evaluate(formula, outcome.model)


@pytest.mark.unit
def test_brute_force_handles_empty_clause():
    """Test that an empty clause makes the oracle answer UNSAT."""
    formula = Formula.from_lists(2, [[1], []])
    assert brute_force_solve(formula).is_unsat


@pytest.mark.unit
def test_outcome_model_literals():
    """Test the signed literal view of a model."""
    outcome = Outcome.sat({2: False, 1: True, 3: True})
    assert outcome.model_literals() == [1, -2, 3]
    assert Outcome.unsat().model_literals() == []
