from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from stabcodes.constructions import ConstructionError
from stabcodes.cyclic import (
    circulant,
    circulant_code,
    circulant_rank,
    circulant_search,
    exhaustive_space,
    extended_parity_rule,
    extended_qr_css,
    is_prime,
    k1_code,
    necklace_representatives,
    qr_circulant,
    qr_css,
    qr_css_bound_holds,
    qr_generator_matrices,
    quadratic_residues,
)
from stabcodes.distance import quantum_min_distance
from stabcodes.gf2 import BitMatrix, rank
from stabcodes.symplectic import symplectic_gram

from .conftest import K1_VECTORS


def _np_circulant(bits: list[int]) -> np.ndarray:
    n = len(bits)
    return np.array([[bits[(j - i) % n] for j in range(n)] for i in range(n)], dtype=np.uint8)


@given(st.lists(st.integers(0, 1), min_size=1, max_size=14))
def test_circulant_rows_are_right_rotations(bits):
    g = "".join(map(str, bits))
    assert np.array_equal(circulant(g).to_array(), _np_circulant(bits))


@settings(max_examples=200)
@given(st.integers(2, 12), st.data())
def test_circulant_rank_formula_matches_elimination(n, data):
    g1 = data.draw(st.integers(0, (1 << n) - 1))
    g2 = data.draw(st.integers(0, (1 << n) - 1))
    direct = rank(circulant(g1, n).hstack(circulant(g2, n)))
    assert circulant_rank(g1, g2, n) == direct


@pytest.mark.parametrize("n", range(1, 11))
def test_necklace_count_matches_brute_force(n):
    classes = {min(((g << s) | (g >> (n - s))) & ((1 << n) - 1) for s in range(n)) for g in range(1, 1 << n)}
    assert sorted(classes) == necklace_representatives(n)


def test_circulant_code_five_qubit():
    code = circulant_code("11000", "00101")
    assert (code.n, code.k) == (5, 1)
    assert quantum_min_distance(code).d == 3


def test_circulant_code_rejects_noncommuting_pair():
    with pytest.raises(ConstructionError):
        circulant_code("1000", "0100")


@pytest.mark.parametrize("n, k, d", [(5, 1, 3), (6, 2, 2), (7, 1, 3)])
def test_circulant_search_small_cells(n, k, d):
    res = circulant_search(n, k)
    assert res.exhaustive
    assert res.d == d
    code = circulant_code(res.g1, res.g2)
    assert code.k == k
    assert quantum_min_distance(code).d == d


def test_exhaustive_space_grows_like_four_to_the_n():
    assert exhaustive_space(5) < exhaustive_space(6) < 4**6


@pytest.mark.parametrize("p", range(2, 60))
def test_is_prime(p):
    assert is_prime(p) == all(p % q for q in range(2, p))


@pytest.mark.parametrize("p", [5, 7, 13, 17, 23, 29, 31, 41])
def test_quadratic_residue_partition(p):
    data = quadratic_residues(p)
    assert len(data.residues) == len(data.nonresidues) == (p - 1) // 2
    assert data.residues | data.nonresidues == set(range(1, p))
    # Euler's criterion as an independent oracle
    assert data.residues == {j for j in range(1, p) if pow(j, (p - 1) // 2, p) == 1}


@pytest.mark.parametrize("p", [7, 17, 23, 31, 41, 47])
def test_qr_generators_are_cyclic_and_nested(p):
    gens = qr_generator_matrices(p)
    # cyclic: the row space is closed under rotation
    for g in (gens.q, gens.q_bar, gens.n, gens.n_bar):
        shifted = BitMatrix(g.n_rows, p, tuple(((r << 1) | (r >> (p - 1))) & ((1 << p) - 1) for r in g.rows))
        assert rank(g.vstack(shifted)) == g.n_rows
    assert rank(gens.q.vstack(gens.q_bar)) == gens.q.n_rows


def test_qr_generators_need_two_as_residue():
    with pytest.raises(ValueError):
        qr_generator_matrices(13)


@pytest.mark.parametrize("p, d", [(7, 3), (17, 5), (23, 7)])
def test_qr_css_distances(p, d):
    code = qr_css(p)
    assert code.k == 1
    assert symplectic_gram(code.h.matrix, code.g_dual, p).is_zero()
    assert quantum_min_distance(code).d == d
    assert qr_css_bound_holds(p, d)


@pytest.mark.parametrize("p, d", [(7, 4), (17, 6), (23, 8)])
def test_extended_qr_css_distances(p, d):
    code = extended_qr_css(p)
    assert (code.n, code.k) == (p + 1, 0)
    assert quantum_min_distance(code).d == d
    assert extended_parity_rule(p, d)


def test_qr_css_rejects_wrong_residue_class():
    with pytest.raises(ValueError):
        qr_css(13)


@pytest.mark.parametrize("p", [p for p in range(5, 30) if is_prime(p) and p % 4 == 1])
def test_qr_circulant_structure(p):
    code = qr_circulant(p)
    checks = code.info["structure_checks"]
    assert checks["rank"] == p - 1
    assert code.k == 1
    data = quadratic_residues(p)
    hx = circulant(data.indicator("Q"), p).to_array()
    hz = circulant(data.indicator("N"), p).to_array()
    assert np.array_equal(hx, hx.T) and np.array_equal(hz, hz.T)
    assert np.array_equal(hx ^ hz, 1 - np.eye(p, dtype=np.uint8))


@pytest.mark.parametrize("p, d", [(5, 3), (13, 5), (17, 5)])
def test_qr_circulant_distances(p, d):
    assert quantum_min_distance(qr_circulant(p)).d == d


@pytest.mark.long
def test_qr_circulant_twenty_nine():
    assert quantum_min_distance(qr_circulant(29), 1 << 31).d == 11


def _complement(a: str) -> str:
    return "0" + "".join("1" if c == "0" else "0" for c in a[1:])


@pytest.mark.parametrize("a", K1_VECTORS + [_complement(v) for v in K1_VECTORS])
def test_k1_vectors_give_seventeen_one_seven(a):
    code = k1_code(a)
    assert (code.n, code.k) == (17, 1)
    assert quantum_min_distance(code).d == 7


@given(st.integers(3, 15), st.data())
def test_k1_code_is_valid_for_any_symmetric_vector(n, data):
    half = data.draw(st.lists(st.integers(0, 1), min_size=n // 2, max_size=n // 2))
    bits = [0] * n
    for i, b in enumerate(half, start=1):
        bits[i] = bits[n - i] = b
    code = k1_code("".join(map(str, bits)))
    assert code.k == 1
    assert symplectic_gram(code.h.matrix, code.g_dual, n).is_zero()


def test_k1_code_rejects_asymmetric_vector():
    with pytest.raises(ConstructionError) as err:
        k1_code("0110")
    assert err.value.kind == "symmetry"
