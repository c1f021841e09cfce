from __future__ import annotations

import functools
import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from stabcodes.gf2 import BitMatrix, random_matrix, rank
from stabcodes.symplectic import (
    CheckMatrix,
    SymplecticVector,
    dual_generator,
    format_pauli,
    generalized_weight,
    is_commutative,
    parse_pauli,
    stabilizer_code,
    symplectic_gram,
    symplectic_product,
    syndrome,
)

from .conftest import FIVE_QUBIT

_MATS = {
    "I": np.eye(2),
    "X": np.array([[0, 1], [1, 0]]),
    "Z": np.array([[1, 0], [0, -1]]),
    "Y": np.array([[0, -1j], [1j, 0]]),
}


def _dense(label: str) -> np.ndarray:
    return functools.reduce(np.kron, (_MATS[c] for c in label))


labels = st.integers(1, 3).flatmap(lambda n: st.tuples(*[st.text("IXYZ", min_size=n, max_size=n)] * 2))


@given(labels)
def test_symplectic_product_matches_matrix_commutator(pair):
    a, b = pair
    pa, pb = _dense(a), _dense(b)
    commute = np.allclose(pa @ pb, pb @ pa)
    assert symplectic_product(parse_pauli(a), parse_pauli(b)) == (0 if commute else 1)


@given(st.text("IXYZ", min_size=1, max_size=12))
def test_pauli_label_round_trip_and_weight(label):
    vec = parse_pauli(label)
    assert format_pauli(vec) == label
    assert generalized_weight(vec) == sum(c != "I" for c in label)


def test_parse_pauli_rejects_bad_characters():
    with pytest.raises(ValueError):
        parse_pauli("XQZ")
    with pytest.raises(ValueError):
        parse_pauli("")


def test_five_qubit_check_matrix(five_qubit):
    assert five_qubit.n == 5 and five_qubit.r == 4 and five_qubit.k == 1
    assert is_commutative(five_qubit.h)
    assert five_qubit.h.to_strings()[0] == "10010|01100"


def _random_check(n: int, r: int, seed: int) -> CheckMatrix:
    return CheckMatrix.from_matrix(random_matrix(r, 2 * n, 0.5, seed), n)


@settings(max_examples=1000)
@given(st.integers(1, 8), st.integers(1, 8), st.integers(0, 2**32 - 1))
def test_commutative_iff_hx_hz_t_symmetric(n, r, seed):
    h = _random_check(n, r, seed)
    pairwise = all(symplectic_product(x, y) == 0 for x in h.rows() for y in h.rows())
    a = h.hx.to_array().astype(int) @ h.hz.to_array().T.astype(int) % 2
    assert is_commutative(h) == pairwise == bool(np.array_equal(a, a.T))


@settings(max_examples=1000)
@given(st.integers(1, 10), st.integers(0, 2**32 - 1))
def test_syndrome_is_a_homomorphism(n, seed):
    rng = random.Random(seed)
    h = _random_check(n, rng.randint(1, 2 * n), seed)
    e1 = SymplecticVector(n, rng.getrandbits(n), rng.getrandbits(n))
    e2 = SymplecticVector(n, rng.getrandbits(n), rng.getrandbits(n))
    assert syndrome(h, e1 + e2) == syndrome(h, e1) ^ syndrome(h, e2)
    expected = sum(symplectic_product(row, e1) << i for i, row in enumerate(h.rows()))
    assert syndrome(h, e1) == expected


def test_syndrome_checks_size(five_qubit):
    with pytest.raises(ValueError):
        syndrome(five_qubit.h, SymplecticVector.zero(4))


@given(st.integers(1, 7), st.integers(0, 2**32 - 1))
def test_dual_generator_rank_and_orthogonality(n, seed):
    h = _random_check(n, n, seed).independent()
    g = dual_generator(h)
    assert g.n_rows == 2 * n - h.r
    assert rank(g) == g.n_rows
    assert symplectic_gram(h.matrix, g, n).is_zero()


def test_stabilizer_code_rejects_noncommuting_rows():
    with pytest.raises(ValueError, match="commutative"):
        stabilizer_code(CheckMatrix.from_paulis(["XI", "ZI"]), construction_tag="bad")


def test_stabilizer_code_rejects_dependent_rows():
    labels = FIVE_QUBIT + ["XZZXI"]
    with pytest.raises(ValueError, match="independent"):
        stabilizer_code(CheckMatrix.from_paulis(labels), construction_tag="bad")


def test_validate_catches_a_wrong_dual(five_qubit):
    broken = five_qubit.replace(g_dual=BitMatrix.identity(10).select_rows(range(6)))
    with pytest.raises(ValueError):
        broken.validate()


def test_params_formatting(five_qubit):
    assert five_qubit.params() == "[[5,1,?]]"
    assert five_qubit.replace(d_lower=2).params() == "[[5,1,>=2]]"
    assert five_qubit.replace(d_lower=2, d_exact=3).params() == "[[5,1,3]]"
