"""Binary symplectic picture of the Pauli group.

A Pauli ``X_u Z_v`` is stored as the pair of n-bit ints ``(u, v)``.  Check
matrices are ``[H_X | H_Z]`` with the X block first; a full 2n-bit row is
packed as ``u | (v << n)``.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass, field
from typing import Any

from .gf2 import BitMatrix, bits_to_str, independent_rows, kernel_basis, rank

__all__ = [
    "CheckMatrix",
    "PauliOperator",
    "StabilizerCode",
    "SymplecticVector",
    "dual_generator",
    "format_pauli",
    "generalized_weight",
    "is_commutative",
    "parse_pauli",
    "stabilizer_code",
    "symplectic_gram",
    "symplectic_product",
    "syndrome",
]

_PAULI_BITS = {"I": (0, 0), "X": (1, 0), "Z": (0, 1), "Y": (1, 1)}
_BITS_PAULI = {v: k for k, v in _PAULI_BITS.items()}


@dataclass(frozen=True)
class SymplecticVector:
    n: int
    u: int
    v: int

    def __post_init__(self) -> None:
        limit = 1 << self.n
        if not (0 <= self.u < limit and 0 <= self.v < limit):
            raise ValueError(f"parts do not fit in n={self.n} bits")

    @classmethod
    def zero(cls, n: int) -> SymplecticVector:
        return cls(n, 0, 0)

    @classmethod
    def from_packed(cls, value: int, n: int) -> SymplecticVector:
        mask = (1 << n) - 1
        return cls(n, value & mask, value >> n)

    @classmethod
    def single(cls, n: int, qubit: int, pauli: str) -> SymplecticVector:
        a, b = _PAULI_BITS[pauli]
        return cls(n, a << qubit, b << qubit)

    @property
    def packed(self) -> int:
        return self.u | (self.v << self.n)

    def __add__(self, other: SymplecticVector) -> SymplecticVector:
        _check_size(self, other)
        return SymplecticVector(self.n, self.u ^ other.u, self.v ^ other.v)

    def weight(self) -> int:
        return generalized_weight(self)

    def __str__(self) -> str:
        return format_pauli(self)


@dataclass(frozen=True)
class PauliOperator:
    """``i^c X_u Z_v``; the phase is carried for display only."""

    phase_exponent: int
    vector: SymplecticVector

    def __post_init__(self) -> None:
        if self.phase_exponent not in (0, 1, 2, 3):
            raise ValueError("phase exponent must be in {0, 1, 2, 3}")

    def __str__(self) -> str:
        prefix = ("", "i", "-", "-i")[self.phase_exponent]
        return prefix + format_pauli(self.vector)


def _check_size(x: SymplecticVector, y: SymplecticVector) -> None:
    if x.n != y.n:
        raise ValueError(f"size mismatch: {x.n} vs {y.n} qubits")


def parse_pauli(label: str) -> SymplecticVector:
    if not label:
        raise ValueError("empty Pauli label")
    u = v = 0
    for j, ch in enumerate(label.upper()):
        try:
            a, b = _PAULI_BITS[ch]
        except KeyError:
            raise ValueError(f"illegal Pauli character {ch!r} at position {j}") from None
        u |= a << j
        v |= b << j
    return SymplecticVector(len(label), u, v)


def format_pauli(x: SymplecticVector) -> str:
    return "".join(_BITS_PAULI[((x.u >> j) & 1, (x.v >> j) & 1)] for j in range(x.n))


def symplectic_product(x: SymplecticVector, y: SymplecticVector) -> int:
    """``u1.v2 + v1.u2`` over GF(2); 0 iff the Paulis commute."""
    _check_size(x, y)
    return ((x.u & y.v) ^ (x.v & y.u)).bit_count() & 1


def generalized_weight(x: SymplecticVector) -> int:
    """Number of qubits on which the Pauli acts non-trivially."""
    return (x.u | x.v).bit_count()


@dataclass(frozen=True)
class CheckMatrix:
    """``r x 2n`` check matrix ``[H_X | H_Z]``."""

    n: int
    hx: BitMatrix
    hz: BitMatrix

    def __post_init__(self) -> None:
        if self.hx.n_cols != self.n or self.hz.n_cols != self.n:
            raise ValueError("H_X and H_Z must both have n columns")
        if self.hx.n_rows != self.hz.n_rows:
            raise ValueError("H_X and H_Z must have the same number of rows")

    @classmethod
    def from_matrix(cls, m: BitMatrix, n: int | None = None) -> CheckMatrix:
        if n is None:
            if m.n_cols % 2:
                raise ValueError("check matrix needs an even number of columns")
            n = m.n_cols // 2
        return cls(n, m.columns_slice(0, n), m.columns_slice(n, 2 * n))

    @classmethod
    def from_paulis(cls, labels: list[str]) -> CheckMatrix:
        vecs = [parse_pauli(s) for s in labels]
        n = vecs[0].n
        if any(x.n != n for x in vecs):
            raise ValueError("Pauli labels differ in length")
        return cls(n, BitMatrix.from_ints([x.u for x in vecs], n), BitMatrix.from_ints([x.v for x in vecs], n))

    @property
    def r(self) -> int:
        return self.hx.n_rows

    @property
    def matrix(self) -> BitMatrix:
        return self.hx.hstack(self.hz)

    @property
    def rank(self) -> int:
        return rank(self.matrix)

    def row(self, i: int) -> SymplecticVector:
        return SymplecticVector(self.n, self.hx.rows[i], self.hz.rows[i])

    def rows(self) -> list[SymplecticVector]:
        return [self.row(i) for i in range(self.r)]

    def to_strings(self) -> list[str]:
        return [f"{bits_to_str(a, self.n)}|{bits_to_str(b, self.n)}" for a, b in zip(self.hx.rows, self.hz.rows)]

    def independent(self) -> CheckMatrix:
        return CheckMatrix.from_matrix(independent_rows(self.matrix), self.n)


def symplectic_gram(a: BitMatrix, b: BitMatrix, n: int) -> BitMatrix:
    """``A Lambda B^T`` for 2n-column matrices in the packed layout."""
    mask = (1 << n) - 1
    out = []
    for x in a.rows:
        xu, xv = x & mask, x >> n
        row = 0
        for j, y in enumerate(b.rows):
            if ((xu & (y >> n)) ^ (xv & y & mask)).bit_count() & 1:
                row |= 1 << j
        out.append(row)
    return BitMatrix(a.n_rows, b.n_rows, tuple(out))


def is_commutative(h: CheckMatrix) -> bool:
    """``H_X H_Z^T + H_Z H_X^T = O``."""
    return (h.hx @ h.hz.T).is_symmetric()


def dual_generator(h: CheckMatrix) -> BitMatrix:
    """Full-rank generator of the symplectic dual of the row space of ``h``."""
    if rank(h.matrix) != h.r:
        raise ValueError("check matrix rows are not independent")
    # x in dual  <=>  [H_Z | H_X] x^T = 0
    return kernel_basis(h.hz.hstack(h.hx))


def syndrome(h: CheckMatrix, e: SymplecticVector) -> int:
    """Syndrome as an int whose bit ``i`` is the product with generator ``i``."""
    if e.n != h.n:
        raise ValueError(f"error acts on {e.n} qubits, code has {h.n}")
    s = 0
    for i, (a, b) in enumerate(zip(h.hx.rows, h.hz.rows)):
        if ((a & e.v) ^ (b & e.u)).bit_count() & 1:
            s |= 1 << i
    return s


@dataclass(frozen=True)
class StabilizerCode:
    """An ``[[n, k, d]]`` stabilizer code with its check matrix and dual generator."""

    h: CheckMatrix
    g_dual: BitMatrix
    d_lower: int | None = None
    d_exact: int | None = None
    d_classical: int | None = None
    t_star: int | None = None
    construction_tag: str = ""
    info: dict[str, Any] = field(default_factory=dict, compare=False)

    @property
    def n(self) -> int:
        return self.h.n

    @property
    def r(self) -> int:
        return self.h.r

    @property
    def k(self) -> int:
        return self.n - self.r

    @property
    def d(self) -> int | None:
        return self.d_exact if self.d_exact is not None else self.d_lower

    @property
    def t(self) -> int | None:
        d = self.d
        return None if d is None else (d - 1) // 2

    def replace(self, **changes: Any) -> StabilizerCode:
        return dataclasses.replace(self, **changes)

    def validate(self) -> None:
        """Re-check commutativity, ranks and ``H Lambda G^T = O``."""
        if rank(self.h.matrix) != self.r:
            raise ValueError("check matrix rows are not independent")
        if not is_commutative(self.h):
            raise ValueError("check matrix is not commutative")
        if self.g_dual.n_cols != 2 * self.n or self.g_dual.n_rows != 2 * self.n - self.r:
            raise ValueError("dual generator has the wrong shape")
        if rank(self.g_dual) != self.g_dual.n_rows:
            raise ValueError("dual generator is not full rank")
        if not symplectic_gram(self.h.matrix, self.g_dual, self.n).is_zero():
            raise ValueError("H Lambda G^T != O")
        if self.d_exact is not None and self.d_lower is not None and self.d_exact < self.d_lower:
            raise ValueError(f"exact distance {self.d_exact} below claimed bound {self.d_lower}")

    def params(self) -> str:
        d = "?" if self.d is None else str(self.d)
        if self.d_exact is None and self.d_lower is not None:
            d = f">={self.d_lower}"
        return f"[[{self.n},{self.k},{d}]]"


def stabilizer_code(
    h: CheckMatrix,
    g_dual: BitMatrix | None = None,
    *,
    construction_tag: str,
    **fields: Any,
) -> StabilizerCode:
    """Validate ``h`` (and ``g_dual`` when given) and wrap them in a code."""
    if rank(h.matrix) != h.r:
        raise ValueError("check matrix rows are not independent")
    if not is_commutative(h):
        raise ValueError("check matrix is not commutative")
    if g_dual is None:
        g_dual = dual_generator(h)
    code = StabilizerCode(h, g_dual, construction_tag=construction_tag, **fields)
    code.validate()
    return code
