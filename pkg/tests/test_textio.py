import pytest
from hypothesis import given
from hypothesis import strategies as st

from compdna.channels import Deletion, ErrorPattern, Insertion, Loss, Substitution
from compdna.core import ChannelOutput, CompositeVector, StrandMatrix
from compdna.textio import (
    FormatError,
    format_matrix,
    format_pattern,
    format_vector,
    looks_like_vector,
    parse_matrix,
    parse_pattern,
    parse_vector,
)


def test_vector_format():
    x = CompositeVector((3, 5, 3, 2), 5)
    assert format_vector(x) == "5 4 : 3 5 3 2\n"
    assert parse_vector("5 4 : 3 5 3 2\n") == x
    assert looks_like_vector("5 4 : 3 5 3 2")
    for bad in ["5 4 3 5 3 2", "5 4 : 3 5 3", "5 : 1", "5 1 : x"]:
        with pytest.raises(FormatError):
            parse_vector(bad)


def test_matrix_format(example_x):
    text = format_matrix(example_x)
    assert text.splitlines()[:2] == ["5 4", "0110"]
    assert parse_matrix(text) == example_x
    assert isinstance(parse_matrix(text), StrandMatrix)


def test_ragged_and_empty_rows():
    R = ChannelOutput(((1, 0), (), (1,)))
    back = parse_matrix(format_matrix(R))
    assert back == R and not isinstance(back, StrandMatrix)
    assert parse_matrix("0 0\n") == ChannelOutput(())


def test_matrix_errors():
    for bad in ["2 2\n01\n", "1 2\n012\n", "1 1\n10\n", "x\n", "1 2\n01\n11\n"]:
        with pytest.raises(FormatError):
            parse_matrix(bad)


def test_pattern_format():
    p = ErrorPattern("ID", (Deletion(0, 2), Insertion(1, 0, 1)))
    assert format_pattern(p) == "ID 2\nD 0 2\nI 1 0 1\n"
    assert parse_pattern(format_pattern(p)) == p
    for q in [ErrorPattern("S", (Substitution(1, 2),)), ErrorPattern("L", (Loss(3), Loss(0))),
              ErrorPattern("D", ())]:
        assert parse_pattern(format_pattern(q)) == q
    for bad in ["S 1\n", "S 1\nX 0 0\n", "Q 0\n", "S 1\nS 0\n"]:
        with pytest.raises(FormatError):
            parse_pattern(bad)


@given(st.lists(st.lists(st.integers(0, 1), max_size=6), max_size=5))
def test_matrix_round_trip(rows):
    R = ChannelOutput(tuple(tuple(r) for r in rows))
    assert parse_matrix(format_matrix(R)) == R
