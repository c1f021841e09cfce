from __future__ import annotations

import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from stabcodes.formats import (
    MatrixFormatError,
    code_report,
    dump_json,
    format_bit_matrix,
    format_check_matrix,
    parse_bit_matrix,
    parse_check_matrix,
    read_check_matrix,
    write_check_matrix,
)
from stabcodes.gf2 import random_matrix
from stabcodes.symplectic import CheckMatrix

from .conftest import FIVE_QUBIT


@given(st.integers(1, 6), st.integers(1, 8), st.integers(0, 2**32 - 1))
def test_check_matrix_text_round_trip(r, n, seed):
    h = CheckMatrix.from_matrix(random_matrix(r, 2 * n, 0.5, seed), n)
    assert parse_check_matrix(format_check_matrix(h)) == h


@given(st.integers(1, 6), st.integers(1, 10), st.integers(0, 2**32 - 1))
def test_bit_matrix_text_round_trip(r, n, seed):
    m = random_matrix(r, n, 0.5, seed)
    assert parse_bit_matrix(format_bit_matrix(m)) == m


def test_pauli_rows_comments_and_blanks():
    text = "# five-qubit code\n\n" + "\n".join(FIVE_QUBIT) + "\n"
    assert parse_check_matrix(text) == CheckMatrix.from_paulis(FIVE_QUBIT)


def test_mixed_row_styles():
    h = parse_check_matrix("10|01\nZX  # same row as Pauli\n")
    assert h.to_strings() == ["10|01", "01|10"]


@pytest.mark.parametrize(
    "text, line",
    [
        ("10|01\n1|01\n", 2),
        ("10|01\n10|0a\n", 2),
        ("10|01|11\n", 1),
        ("10|01\n100|010\n", 2),
        ("1001\n", 1),
    ],
)
def test_malformed_check_rows_name_the_line(text, line):
    with pytest.raises(MatrixFormatError) as err:
        parse_check_matrix(text, "f.txt")
    assert err.value.line == line
    assert f"f.txt:{line}:" in str(err.value)


def test_empty_input_is_an_error():
    with pytest.raises(MatrixFormatError):
        parse_check_matrix("# nothing\n")
    with pytest.raises(MatrixFormatError):
        parse_bit_matrix("")


def test_bit_matrix_rejects_ragged_rows():
    with pytest.raises(MatrixFormatError):
        parse_bit_matrix("101\n10\n")


def test_file_round_trip(tmp_path, five_qubit):
    path = tmp_path / "h.txt"
    write_check_matrix(five_qubit.h, path)
    assert read_check_matrix(path) == five_qubit.h


def test_missing_file():
    with pytest.raises(MatrixFormatError):
        read_check_matrix("/nonexistent/h.txt")


def test_report_fields(five_qubit):
    rep = code_report(five_qubit.replace(d_exact=3), seed=4, budget=99)
    assert rep["schema"] == 1
    assert (rep["n"], rep["k"], rep["r"], rep["d_exact"], rep["seed"], rep["budget"]) == (5, 1, 4, 3, 4, 99)
    assert rep["params"] == "[[5,1,3]]"
    assert len(rep["g_dual"]) == 6
    assert json.loads(dump_json(rep)) == rep
