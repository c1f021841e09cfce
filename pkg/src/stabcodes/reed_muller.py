"""Reed-Muller generator matrices and the quantum codes built from them."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .constructions import ConstructionError, UuvConditions, uuv_conditions
from .gf2 import BitMatrix, Permutation, apply_column_permutation, rank
from .symplectic import CheckMatrix, StabilizerCode, stabilizer_code

__all__ = [
    "RmCode",
    "check_rm_permutation",
    "coordinate_vector",
    "quantum_rm",
    "quantum_rm_permuted",
    "rm_dimension",
    "rm_generator",
    "rm_generator_recursive",
    "rm_monomials",
    "rm_orthogonality_check",
    "rm_shift_permutations",
]


def coordinate_vector(i: int, m: int) -> int:
    """``v_i`` (1-based) as an int: bit ``j`` is bit ``i-1`` of ``j``."""
    out = 0
    for j in range(1 << m):
        if (j >> (i - 1)) & 1:
            out |= 1 << j
    return out


def rm_monomials(r: int, m: int) -> list[tuple[int, ...]]:
    """Index sets of the monomial rows, degree-major and lexicographic in each degree."""
    return [s for deg in range(r + 1) for s in itertools.combinations(range(1, m + 1), deg)]


def rm_dimension(r: int, m: int) -> int:
    return sum(math.comb(m, i) for i in range(r + 1)) if r >= 0 else 0


def _check_order(r: int, m: int) -> None:
    if m < 0:
        raise ValueError("m must be non-negative")
    if r > m:
        raise ValueError(f"order r={r} exceeds m={m}")


def rm_generator(r: int, m: int) -> BitMatrix:
    """Generator of ``RM(r, m)`` from bitwise ANDs of the coordinate vectors.

    ``r = -1`` gives the empty matrix of the zero code.
    """
    _check_order(r, m)
    n = 1 << m
    if r < 0:
        return BitMatrix.zeros(0, n)
    coords = [coordinate_vector(i, m) for i in range(1, m + 1)]
    full = (1 << n) - 1
    rows = []
    for mono in rm_monomials(r, m):
        row = full
        for i in mono:
            row &= coords[i - 1]
        rows.append(row)
    return BitMatrix(len(rows), n, tuple(rows))


def rm_generator_recursive(r: int, m: int) -> BitMatrix:
    """The same code via ``G(r, m+1) = [G(r, m) G(r, m); O G(r-1, m)]``."""
    _check_order(r, m)
    n = 1 << m
    if r < 0:
        return BitMatrix.zeros(0, n)
    if r == 0:
        return BitMatrix.ones(1, n)
    if r == m:
        return BitMatrix.identity(n)
    top = rm_generator_recursive(r, m - 1)
    bottom = rm_generator_recursive(r - 1, m - 1)
    half = n // 2
    upper = top.hstack(top)
    lower = BitMatrix.zeros(bottom.n_rows, half).hstack(bottom)
    return upper.vstack(lower)


@dataclass(frozen=True)
class RmCode:
    r: int
    m: int
    generator: BitMatrix

    @classmethod
    def build(cls, r: int, m: int) -> RmCode:
        return cls(r, m, rm_generator(r, m))

    @property
    def n(self) -> int:
        return 1 << self.m

    @property
    def k(self) -> int:
        return rm_dimension(self.r, self.m)

    @property
    def d(self) -> int:
        return 1 << (self.m - self.r)

    def parity_check(self) -> BitMatrix:
        return rm_generator(self.m - self.r - 1, self.m)


def rm_orthogonality_check(r: int, s: int, m: int) -> bool:
    """True iff ``G(r, m) G(s, m)^T = O``."""
    return (rm_generator(r, m) @ rm_generator(s, m).T).is_zero()


def _split(g: BitMatrix, n: int) -> CheckMatrix:
    return CheckMatrix.from_matrix(g, n)


def quantum_rm(r: int, m: int) -> StabilizerCode:
    """``[[2^m, 2^m - sum C(m+1, i), 2^r]]`` code with check matrix ``G(r, m+1)``."""
    if r < 1 or m < 2 * r:
        raise ValueError(f"need r >= 1 and m >= 2r, got r={r}, m={m}")
    n = 1 << m
    h = _split(rm_generator(r, m + 1), n)
    d_classical = 1 << (r + 1)
    # the stated distance is exact; guarantee from the classical distance is 2t'+1
    t_prime = (d_classical - 1) // 4
    code = stabilizer_code(
        h,
        construction_tag=f"quantum-rm(r={r},m={m})",
        d_lower=2 * t_prime + 1,
        d_classical=d_classical,
        t_star=t_prime,
    )
    code.info["stated_d"] = 1 << r
    return code


def rm_shift_permutations(m: int) -> dict[str, Permutation]:
    """``T`` (cyclic shift of the coordinate vectors), ``Q`` and ``P = T Q``."""
    if m < 2:
        raise ValueError("m must be at least 2")
    n = 1 << m
    half = n // 2
    t = [0] * n
    for i in range(half):
        t[i] = 2 * i
        t[half + i] = 2 * i + 1
    q = list(range(half))
    for i in range(half, n, 2):
        q += [i + 1, i]
    tp, qp = Permutation(tuple(t)), Permutation(tuple(q))
    return {"T": tp, "Q": qp, "P": tp @ qp}


def _rm_condition_inputs(r: int, m: int) -> tuple[BitMatrix, BitMatrix, BitMatrix, BitMatrix]:
    h1 = rm_generator(r, m)
    h2 = rm_generator(r - 1, m)
    g1 = rm_generator(m - r - 1, m)
    g2 = rm_generator(m - r, m)
    return h1, h2, g1, g2.select_rows(range(g1.n_rows, g2.n_rows))


def check_rm_permutation(r: int, m: int, p: Permutation) -> UuvConditions:
    """Evaluate the permuted ``|u|u+v|`` conditions with ``C_1 = RM(m-r-1, m)``, ``C_2 = RM(m-r, m)``."""
    if r < 1 or m < 2 * r:
        raise ValueError(f"need r >= 1 and m >= 2r, got r={r}, m={m}")
    return uuv_conditions(*_rm_condition_inputs(r, m), p)


def quantum_rm_permuted(r: int, m: int, p: Permutation, *, check: bool = True) -> StabilizerCode:
    """Check matrix ``G(r, m+1) P'`` with ``P' = diag(I, P)``; distance at least ``2^r + 2^(r-1)``."""
    if r < 1 or m < 2 * r:
        raise ValueError(f"need r >= 1 and m >= 2r, got r={r}, m={m}")
    n = 1 << m
    conds = check_rm_permutation(r, m, p)
    if check and not conds.passed:
        raise ConstructionError("condition-" + "/".join(conds.failed()), f"conditions {', '.join(conds.failed())} fail")
    g = _split(rm_generator(r, m + 1), n)
    h = CheckMatrix(n, g.hx, apply_column_permutation(g.hz, p))
    d_classical = 1 << (r + 1)
    t_prime = (d_classical - 1) // 4
    code = stabilizer_code(
        h,
        construction_tag=f"quantum-rm-permuted(r={r},m={m})",
        d_lower=(1 << r) + (1 << (r - 1)) if conds.passed else None,
        d_classical=d_classical,
        t_star=t_prime,
    )
    t_bound = ((1 << r) + (1 << (r - 1)) - 1) // 2
    code.info.update(
        conditions=conds.as_dict(),
        permutation=list(p.image),
        additional_errors_expected=2 * t_prime > t_bound,
    )
    return code


def rm_rank_ok(r: int, m: int) -> bool:
    return rank(rm_generator(r, m)) == rm_dimension(r, m)
