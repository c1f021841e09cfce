"""Dense GF(2) matrices stored as one Python int per row.

Bit ``j`` of a row integer is column ``j``; column 0 is printed first.
Python ints are arbitrary-width packed words, so row XOR and
``int.bit_count`` are the word-wide primitives everything else builds on.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass

import numpy as np

__all__ = [
    "BitMatrix",
    "GaussResult",
    "Permutation",
    "SingularMatrixError",
    "apply_column_permutation",
    "bits_to_int",
    "bits_to_str",
    "gauss",
    "independent_rows",
    "int_to_bits",
    "invert",
    "kernel_basis",
    "random_matrix",
    "rank",
    "solve",
]


class SingularMatrixError(ValueError):
    """Raised when a GF(2) matrix that must be invertible is not."""


def bits_to_int(bits: str | Sequence[int]) -> int:
    """Pack a bit string/sequence (first element = bit 0) into an int."""
    value = 0
    for j, b in enumerate(bits):
        if b in ("1", 1, True):
            value |= 1 << j
        elif b not in ("0", 0, False):
            raise ValueError(f"illegal bit {b!r} at position {j}")
    return value


def int_to_bits(value: int, width: int) -> list[int]:
    return [(value >> j) & 1 for j in range(width)]


def bits_to_str(value: int, width: int) -> str:
    return "".join("1" if (value >> j) & 1 else "0" for j in range(width))


@dataclass(frozen=True)
class BitMatrix:
    """Immutable ``n_rows x n_cols`` matrix over GF(2)."""

    n_rows: int
    n_cols: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n_rows < 0 or self.n_cols < 0:
            raise ValueError("matrix dimensions must be non-negative")
        if len(self.rows) != self.n_rows:
            raise ValueError(f"expected {self.n_rows} rows, got {len(self.rows)}")
        limit = 1 << self.n_cols
        for i, row in enumerate(self.rows):
            if row < 0 or row >= limit:
                raise ValueError(f"row {i} does not fit in {self.n_cols} columns")

    # -- constructors -------------------------------------------------
    @classmethod
    def from_ints(cls, rows: Iterable[int], n_cols: int) -> BitMatrix:
        rows = tuple(int(r) for r in rows)
        return cls(len(rows), n_cols, rows)

    @classmethod
    def from_strings(cls, rows: Sequence[str]) -> BitMatrix:
        """Build from strings such as ``"10010"``; spaces and ``|`` are ignored."""
        cleaned = [r.replace(" ", "").replace("|", "") for r in rows]
        if not cleaned:
            raise ValueError("from_strings needs at least one row; use zeros() for empty")
        width = len(cleaned[0])
        for i, r in enumerate(cleaned):
            if len(r) != width:
                raise ValueError(f"row {i} has {len(r)} columns, expected {width}")
        return cls(len(cleaned), width, tuple(bits_to_int(r) for r in cleaned))

    @classmethod
    def from_array(cls, array: np.ndarray | Sequence[Sequence[int]]) -> BitMatrix:
        arr = np.asarray(array, dtype=np.int64)
        if arr.ndim != 2:
            raise ValueError("expected a 2-d array")
        arr = arr % 2
        return cls(arr.shape[0], arr.shape[1], tuple(bits_to_int(row.tolist()) for row in arr))

    @classmethod
    def zeros(cls, n_rows: int, n_cols: int) -> BitMatrix:
        return cls(n_rows, n_cols, (0,) * n_rows)

    @classmethod
    def identity(cls, n: int) -> BitMatrix:
        return cls(n, n, tuple(1 << i for i in range(n)))

    @classmethod
    def ones(cls, n_rows: int, n_cols: int) -> BitMatrix:
        return cls(n_rows, n_cols, ((1 << n_cols) - 1,) * n_rows)

    # -- views ----------------------------------------------------------
    @property
    def shape(self) -> tuple[int, int]:
        return (self.n_rows, self.n_cols)

    def __getitem__(self, index: tuple[int, int]) -> int:
        i, j = index
        if not 0 <= j < self.n_cols:
            raise IndexError(j)
        return (self.rows[i] >> j) & 1

    def __iter__(self) -> Iterator[int]:
        return iter(self.rows)

    def __len__(self) -> int:
        return self.n_rows

    def to_array(self) -> np.ndarray:
        out = np.zeros((self.n_rows, self.n_cols), dtype=np.uint8)
        for i, row in enumerate(self.rows):
            out[i] = int_to_bits(row, self.n_cols)
        return out

    def to_strings(self) -> list[str]:
        return [bits_to_str(r, self.n_cols) for r in self.rows]

    def __str__(self) -> str:
        return "\n".join(self.to_strings())

    def column(self, j: int) -> int:
        """Column ``j`` packed as an int whose bit ``i`` is row ``i``."""
        value = 0
        for i, row in enumerate(self.rows):
            if (row >> j) & 1:
                value |= 1 << i
        return value

    def columns(self) -> list[int]:
        return [self.column(j) for j in range(self.n_cols)]

    def is_zero(self) -> bool:
        return not any(self.rows)

    # -- algebra ----------------------------------------------------------
    @property
    def T(self) -> BitMatrix:
        return BitMatrix(self.n_cols, self.n_rows, tuple(self.columns()))

    def transpose(self) -> BitMatrix:
        return self.T

    def __add__(self, other: BitMatrix) -> BitMatrix:
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} + {other.shape}")
        return BitMatrix(self.n_rows, self.n_cols, tuple(a ^ b for a, b in zip(self.rows, other.rows)))

    def __matmul__(self, other: BitMatrix) -> BitMatrix:
        if self.n_cols != other.n_rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        out = []
        for row in self.rows:
            acc = 0
            k = 0
            while row:
                if row & 1:
                    acc ^= other.rows[k]
                row >>= 1
                k += 1
            out.append(acc)
        return BitMatrix(self.n_rows, other.n_cols, tuple(out))

    def hstack(self, *others: BitMatrix) -> BitMatrix:
        rows = list(self.rows)
        width = self.n_cols
        for other in others:
            if other.n_rows != self.n_rows:
                raise ValueError("hstack needs equal row counts")
            rows = [a | (b << width) for a, b in zip(rows, other.rows)]
            width += other.n_cols
        return BitMatrix(self.n_rows, width, tuple(rows))

    def vstack(self, *others: BitMatrix) -> BitMatrix:
        rows = list(self.rows)
        for other in others:
            if other.n_cols != self.n_cols:
                raise ValueError("vstack needs equal column counts")
            rows.extend(other.rows)
        return BitMatrix(len(rows), self.n_cols, tuple(rows))

    def columns_slice(self, start: int, stop: int) -> BitMatrix:
        mask = (1 << (stop - start)) - 1
        return BitMatrix(self.n_rows, stop - start, tuple((r >> start) & mask for r in self.rows))

    def select_rows(self, indices: Iterable[int]) -> BitMatrix:
        rows = tuple(self.rows[i] for i in indices)
        return BitMatrix(len(rows), self.n_cols, rows)

    @property
    def rank(self) -> int:
        return rank(self)

    def is_symmetric(self) -> bool:
        return self.n_rows == self.n_cols and self == self.T


@dataclass(frozen=True)
class GaussResult:
    rref: BitMatrix
    rank: int
    pivot_cols: tuple[int, ...]


def _eliminate(rows: list[int], n_cols: int, track: list[int] | None = None) -> list[int]:
    """In-place RREF; returns pivot columns. ``track`` mirrors every row operation."""
    pivots: list[int] = []
    lead = 0
    n = len(rows)
    for col in range(n_cols):
        if lead == n:
            break
        bit = 1 << col
        pivot = next((i for i in range(lead, n) if rows[i] & bit), None)
        if pivot is None:
            continue
        rows[lead], rows[pivot] = rows[pivot], rows[lead]
        if track is not None:
            track[lead], track[pivot] = track[pivot], track[lead]
        prow = rows[lead]
        for i in range(n):
            if i != lead and rows[i] & bit:
                rows[i] ^= prow
                if track is not None:
                    track[i] ^= track[lead]
        pivots.append(col)
        lead += 1
    return pivots


def gauss(m: BitMatrix) -> GaussResult:
    """Row-reduced echelon form using the lowest available pivot column."""
    rows = list(m.rows)
    pivots = _eliminate(rows, m.n_cols)
    return GaussResult(BitMatrix(m.n_rows, m.n_cols, tuple(rows)), len(pivots), tuple(pivots))


def rank(m: BitMatrix) -> int:
    # basis-insertion keyed by leading bit; cheaper than a full RREF
    basis: dict[int, int] = {}
    for row in m.rows:
        while row:
            top = row.bit_length() - 1
            if top in basis:
                row ^= basis[top]
            else:
                basis[top] = row
                break
    return len(basis)


def solve(a: BitMatrix, b: int) -> int | None:
    """Return ``x`` (bit ``i`` = coefficient of row ``i``) with ``x A = b``, or None."""
    if b < 0 or b >= (1 << a.n_cols):
        raise ValueError(f"vector does not fit in {a.n_cols} columns")
    rows = list(a.rows)
    track = [1 << i for i in range(a.n_rows)]
    pivots = _eliminate(rows, a.n_cols, track)
    x = 0
    residual = b
    for i, col in enumerate(pivots):
        if (residual >> col) & 1:
            residual ^= rows[i]
            x ^= track[i]
    return x if residual == 0 else None


def invert(a: BitMatrix) -> BitMatrix:
    if a.n_rows != a.n_cols:
        raise ValueError(f"cannot invert non-square {a.shape} matrix")
    n = a.n_rows
    rows = list(a.rows)
    track = [1 << i for i in range(n)]
    pivots = _eliminate(rows, n, track)
    if len(pivots) != n:
        raise SingularMatrixError("matrix is singular over GF(2)")
    # rows is now the identity, so track holds the inverse
    return BitMatrix(n, n, tuple(track))


def kernel_basis(a: BitMatrix) -> BitMatrix:
    """Basis of ``{x : A x^T = 0}`` as rows, one per free column."""
    res = gauss(a)
    pivot_set = set(res.pivot_cols)
    out = []
    for free in range(a.n_cols):
        if free in pivot_set:
            continue
        x = 1 << free
        for i, col in enumerate(res.pivot_cols):
            if (res.rref.rows[i] >> free) & 1:
                x |= 1 << col
        out.append(x)
    return BitMatrix(len(out), a.n_cols, tuple(out))


def independent_rows(m: BitMatrix) -> BitMatrix:
    """Keep the original rows that extend the span, in order."""
    basis: dict[int, int] = {}
    kept = []
    for row in m.rows:
        reduced = row
        while reduced:
            top = reduced.bit_length() - 1
            if top in basis:
                reduced ^= basis[top]
            else:
                basis[top] = reduced
                kept.append(row)
                break
    return BitMatrix(len(kept), m.n_cols, tuple(kept))


@dataclass(frozen=True)
class Permutation:
    """Column permutation; the matrix form has ``P[i, image[i]] = 1``.

    A row vector ``v`` maps to ``v P``: bit ``i`` of ``v`` lands at ``image[i]``.
    """

    image: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.image) != list(range(len(self.image))):
            raise ValueError("image is not a bijection on 0..n-1")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(n)))

    @classmethod
    def from_matrix(cls, m: BitMatrix) -> Permutation:
        image = []
        for row in m.rows:
            if row.bit_count() != 1:
                raise ValueError("not a permutation matrix")
            image.append(row.bit_length() - 1)
        if m.n_rows != m.n_cols:
            raise ValueError("not a permutation matrix")
        return cls(tuple(image))

    def __len__(self) -> int:
        return len(self.image)

    def matrix(self) -> BitMatrix:
        return BitMatrix(len(self.image), len(self.image), tuple(1 << j for j in self.image))

    def inverse(self) -> Permutation:
        inv = [0] * len(self.image)
        for i, j in enumerate(self.image):
            inv[j] = i
        return Permutation(tuple(inv))

    def __matmul__(self, other: Permutation) -> Permutation:
        """Matrix product ``self @ other``."""
        if len(other) != len(self):
            raise ValueError("permutation length mismatch")
        return Permutation(tuple(other.image[j] for j in self.image))

    def apply(self, value: int) -> int:
        out = 0
        i = 0
        while value:
            if value & 1:
                out |= 1 << self.image[i]
            value >>= 1
            i += 1
        return out

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.image))


def apply_column_permutation(m: BitMatrix, p: Permutation) -> BitMatrix:
    """Return ``M P``."""
    if len(p) != m.n_cols:
        raise ValueError(f"permutation of length {len(p)} on {m.n_cols} columns")
    return BitMatrix(m.n_rows, m.n_cols, tuple(p.apply(r) for r in m.rows))


def random_matrix(rows: int, cols: int, p1: float, seed: int) -> BitMatrix:
    """Bits drawn independently with ``P(1) = p1`` from numpy's PCG64."""
    if not 0.0 <= p1 <= 1.0:
        raise ValueError(f"p1={p1} outside [0, 1]")
    rng = np.random.default_rng(seed)
    return BitMatrix.from_array(rng.random((rows, cols)) < p1)
