from __future__ import annotations

import itertools
import math

import numpy as np
import pytest

from stabcodes.constructions import ConstructionError
from stabcodes.distance import classical_min_distance, quantum_min_distance
from stabcodes.gf2 import BitMatrix, rank
from stabcodes.reed_muller import (
    RmCode,
    check_rm_permutation,
    coordinate_vector,
    quantum_rm,
    quantum_rm_permuted,
    rm_dimension,
    rm_generator,
    rm_generator_recursive,
    rm_orthogonality_check,
    rm_shift_permutations,
)
from stabcodes.symplectic import CheckMatrix, is_commutative, symplectic_gram

ORDERS = [(r, m) for m in range(1, 8) for r in range(0, m + 1)]


def _same_row_space(a: BitMatrix, b: BitMatrix) -> bool:
    return rank(a) == rank(b) == rank(a.vstack(b))


def _evaluation_generator(r: int, m: int) -> np.ndarray:
    """Monomials evaluated at every point of GF(2)^m, point x at column x."""
    points = np.array([[(x >> i) & 1 for i in range(m)] for x in range(1 << m)], dtype=np.uint8)
    rows = []
    for deg in range(r + 1):
        for mono in itertools.combinations(range(m), deg):
            rows.append(np.prod(points[:, list(mono)], axis=1) if mono else np.ones(1 << m, dtype=np.uint8))
    return np.array(rows, dtype=np.uint8)


def test_coordinate_vectors_in_column_order():
    assert coordinate_vector(1, 3) == int("10101010", 2)
    from stabcodes.gf2 import bits_to_str

    assert bits_to_str(coordinate_vector(1, 3), 8) == "01010101"
    assert bits_to_str(coordinate_vector(3, 3), 8) == "00001111"


@pytest.mark.parametrize("r, m", ORDERS)
def test_generator_matches_polynomial_evaluation(r, m):
    g = rm_generator(r, m)
    assert np.array_equal(g.to_array(), _evaluation_generator(r, m))
    assert g.n_rows == rm_dimension(r, m) == rank(g)


@pytest.mark.parametrize("r, m", ORDERS)
def test_recursive_generator_spans_the_same_code(r, m):
    assert _same_row_space(rm_generator(r, m), rm_generator_recursive(r, m))


@pytest.mark.parametrize("r, m", [(r, m) for r, m in ORDERS if m <= 5])
def test_minimum_distance(r, m):
    code = RmCode.build(r, m)
    hp = code.parity_check() if r < m else BitMatrix.zeros(0, code.n)
    if hp.n_rows == 0:
        assert code.d == 1
        return
    assert classical_min_distance(hp).d == code.d


@pytest.mark.parametrize("r, m", [(r, m) for r, m in ORDERS if r < m])
def test_dual_is_complementary_order(r, m):
    assert rm_orthogonality_check(r, m - r - 1, m)
    g, h = rm_generator(r, m), rm_generator(m - r - 1, m)
    assert g.n_rows + h.n_rows == 1 << m
    if r + 1 < m:
        assert not rm_orthogonality_check(r, m - r, m)


@pytest.mark.parametrize("r, m", [(r, m) for m in range(2, 8) for r in range(1, m // 2 + 1)])
def test_split_generator_is_commutative(r, m):
    g = rm_generator(r, m + 1)
    assert is_commutative(CheckMatrix.from_matrix(g, 1 << m))


@pytest.mark.parametrize("r, m", [(1, 2), (1, 3), (1, 4), (2, 4), (2, 5), (3, 6)])
def test_quantum_rm_parameters(r, m):
    code = quantum_rm(r, m)
    assert code.k == (1 << m) - sum(math.comb(m + 1, i) for i in range(r + 1))
    assert code.d_classical == 1 << (r + 1)
    assert symplectic_gram(code.h.matrix, code.g_dual, code.n).is_zero()


@pytest.mark.parametrize("r, m, d", [(1, 2, 2), (1, 3, 2), (2, 4, 4)])
def test_quantum_rm_small_distances(r, m, d):
    assert quantum_min_distance(quantum_rm(r, m)).d == d


def test_quantum_rm_rejects_small_m():
    with pytest.raises(ValueError):
        quantum_rm(2, 3)


def test_shift_permutations():
    perms = rm_shift_permutations(3)
    assert perms["T"].image == (0, 2, 4, 6, 1, 3, 5, 7)
    assert perms["Q"].image == (0, 1, 2, 3, 5, 4, 7, 6)
    assert perms["P"] == perms["T"] @ perms["Q"]
    # T rotates the index bits, so it permutes the coordinate vectors
    from stabcodes.gf2 import apply_column_permutation

    coords = BitMatrix(3, 8, tuple(coordinate_vector(i, 3) for i in (1, 2, 3)))
    moved = apply_column_permutation(coords, perms["T"])
    assert sorted(moved.rows) == sorted(coords.rows)


@pytest.mark.parametrize("r, m", [(1, 3), (1, 4), (1, 5), (2, 6)])
def test_tq_passes_every_condition(r, m):
    assert check_rm_permutation(r, m, rm_shift_permutations(m)["P"]).passed


@pytest.mark.parametrize("r, m", [(1, 3), (1, 4), (2, 4), (2, 5)])
def test_plain_shift_fails_condition_ten(r, m):
    assert "10" in check_rm_permutation(r, m, rm_shift_permutations(m)["T"]).failed()


def test_tq_on_two_five_fails_only_the_strict_check():
    conds = check_rm_permutation(2, 5, rm_shift_permutations(5)["P"])
    assert conds.failed() == ["10_strict"]


def test_permuted_builder_refuses_failing_permutation():
    with pytest.raises(ConstructionError):
        quantum_rm_permuted(1, 3, rm_shift_permutations(3)["T"])


def test_permuted_rm_one_three():
    code = quantum_rm_permuted(1, 3, rm_shift_permutations(3)["P"])
    assert (code.n, code.k, code.d_lower) == (8, 3, 3)
    assert quantum_min_distance(code).d == 3
