"""Unit tests for DIMACS parsing and writing."""

import gzip

import pytest

from banditsat.contexts.formula import (
    DimacsParseError,
    Formula,
    InvalidTokenError,
    Literal,
    MissingHeaderError,
    UnterminatedClauseError,
    VariableOutOfRangeError,
    parse_dimacs,
    read_dimacs,
    write_dimacs,
)


@pytest.mark.unit
def test_parse_simple_formula():
    """Test parsing a small DIMACS file."""
    formula = parse_dimacs("p cnf 2 2\n1 -2 0\n2 0")

    assert formula.num_vars == 2
    assert formula.to_lists() == [[1, -2], [2]]
    assert formula.clauses[0].literals == (Literal(1, True), Literal(2, False))


@pytest.mark.unit
def test_tautology_dropped_and_counted():
    """Test that tautologies are dropped and counted."""
    formula = parse_dimacs("c comment\np cnf 1 1\n1 -1 0")

    assert formula.num_vars == 1
    assert formula.clauses == ()
    assert formula.tautologies_dropped == 1


@pytest.mark.unit
def test_variable_out_of_range_names_line():
    """Test that an out-of-range variable error names its line."""
    with pytest.raises(VariableOutOfRangeError) as exc_info:
        parse_dimacs("p cnf 1 1\n2 0")

    assert exc_info.value.variable == 2
    assert exc_info.value.num_vars == 1
    assert exc_info.value.line_number == 2
    assert "exceeds declared count 1" in str(exc_info.value)


@pytest.mark.unit
def test_duplicate_literals_deduplicated():
    """Test that repeated literals in a clause are merged."""
    formula = parse_dimacs("p cnf 3 1\n1 2 1 3 2 0\n")
    assert formula.to_lists() == [[1, 2, 3]]


@pytest.mark.unit
def test_empty_clause_marks_trivially_unsat():
    """Test that an empty clause marks the formula trivially UNSAT."""
    formula = parse_dimacs("p cnf 2 2\n1 2 0\n0\n")

    assert formula.trivially_unsat
    assert len(formula.clauses) == 2


@pytest.mark.unit
def test_clause_may_span_lines():
    """Test that a clause may continue over several lines."""
    formula = parse_dimacs("p cnf 3 1\n1\n-2\n3 0\n")
    assert formula.to_lists() == [[1, -2, 3]]


@pytest.mark.unit
def test_percent_end_marker_ignores_rest():
    """Test that a % line ends the clause section."""
    formula = parse_dimacs("p cnf 2 1\n1 2 0\n%\n0\n\n")
    assert formula.to_lists() == [[1, 2]]


@pytest.mark.unit
@pytest.mark.parametrize(
    "text, error, line_number",
    [
        ("1 2 0\n", MissingHeaderError, 1),
        ("p cnf x 2\n1 0\n", MissingHeaderError, 1),
        ("p dnf 2 1\n1 0\n", MissingHeaderError, 1),
        ("p cnf 2 1\n1 a 0\n", InvalidTokenError, 2),
        ("p cnf 2 2\n1 0\n2 -1\n", UnterminatedClauseError, 3),
    ],
)
def test_parse_errors_are_distinct_and_carry_line(text, error, line_number):
    """Test that each parse error has its own type and line number."""
    with pytest.raises(error) as exc_info:
        parse_dimacs(text)

    assert isinstance(exc_info.value, DimacsParseError)
    assert exc_info.value.line_number == line_number


@pytest.mark.unit
def test_missing_header_entirely():
    """Test that a file without a p-line is rejected."""
    with pytest.raises(MissingHeaderError):
        parse_dimacs("c only comments\n")


@pytest.mark.unit
def test_header_count_mismatch_is_not_an_error():
    """Test that a wrong declared clause count is tolerated."""
    formula = parse_dimacs("p cnf 2 5\n1 0\n")

    assert formula.declared_clauses == 5
    assert len(formula.clauses) == 1


@pytest.mark.unit
def test_parse_accepts_bytes_and_streams(fixtures_path):
    """Test parsing from bytes and from a binary stream."""
    raw = (fixtures_path / "small_sat.cnf").read_bytes()

    from_bytes = parse_dimacs(raw)
    with open(fixtures_path / "small_sat.cnf", "r", encoding="utf-8") as f:
        from_stream = parse_dimacs(f)

    assert from_bytes == from_stream == read_dimacs(fixtures_path / "small_sat.cnf")


@pytest.mark.unit
def test_round_trip_through_canonical_dimacs(tmp_path, rng):
    """Test that writing then reading a formula preserves it."""
    from banditsat.contexts.formula.generators import random_kcnf

    for _ in range(20):
        formula = random_kcnf(15, 40, 3, rng)
        path = tmp_path / "f.cnf"
        write_dimacs(formula, path, comments=["generated"])

        assert read_dimacs(path) == formula
        assert parse_dimacs(formula.to_dimacs()) == formula


@pytest.mark.unit
def test_canonical_output_shape():
    """Test the header and clause lines of written DIMACS."""
    formula = Formula.from_lists(3, [[1, -3], [2]])
    assert formula.to_dimacs() == "p cnf 3 2\n1 -3 0\n2 0\n"


@pytest.mark.unit
def test_gzip_instances_load_through_runner(tmp_path):
    """Test that gzip-compressed instances load like plain ones."""
    from banditsat.contexts.benchmarking import load_instance

    path = tmp_path / "x.cnf.gz"
    with gzip.open(path, "wb") as f:
        f.write(b"p cnf 2 1\n1 -2 0\n")

    assert load_instance(path).to_lists() == [[1, -2]]
