"""Circulant stabilizer codes and codes from quadratic residues."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .distance import quantum_min_distance
from .gf2 import BitMatrix, bits_to_int, bits_to_str, independent_rows
from .symplectic import CheckMatrix, StabilizerCode, is_commutative, stabilizer_code
from .constructions import ConstructionError, css

__all__ = [
    "CirculantSearchResult",
    "QrData",
    "QrGenerators",
    "circulant",
    "circulant_code",
    "circulant_rank",
    "circulant_search",
    "extended_qr_css",
    "is_prime",
    "k1_code",
    "necklace_representatives",
    "qr_circulant",
    "qr_css",
    "qr_generator_matrices",
    "quadratic_residues",
]


def _rotate(g: int, s: int, n: int) -> int:
    """Right rotation by ``s``: bit ``j`` moves to ``(j + s) mod n``."""
    s %= n
    mask = (1 << n) - 1
    return ((g << s) | (g >> (n - s))) & mask


def _as_int(g: int | str, n: int | None = None) -> tuple[int, int]:
    if isinstance(g, str):
        return bits_to_int(g), len(g)
    if n is None:
        raise ValueError("length n required for integer generator vectors")
    if g >> n:
        raise ValueError(f"generator does not fit in {n} bits")
    return g, n


def circulant(g: int | str, n: int | None = None) -> BitMatrix:
    """``n x n`` matrix whose row ``i`` is ``g`` rotated right by ``i``."""
    value, length = _as_int(g, n)
    if n is not None and length != n:
        raise ValueError(f"generator has length {length}, expected {n}")
    return BitMatrix(length, length, tuple(_rotate(value, i, length) for i in range(length)))


def _poly_mod(a: int, b: int) -> int:
    db = b.bit_length()
    while a.bit_length() >= db:
        a ^= b << (a.bit_length() - db)
    return a


def _poly_gcd(a: int, b: int) -> int:
    while b:
        a, b = b, _poly_mod(a, b)
    return a


def circulant_rank(g1: int, g2: int, n: int) -> int:
    """Rank of ``[circ(g1) | circ(g2)]``: ``n - deg gcd(g1, g2, x^n - 1)``."""
    g = _poly_gcd(_poly_gcd((1 << n) | 1, g1), g2)
    return n - (g.bit_length() - 1)


def _correlation_symmetric(g1: int, g2: int, n: int) -> bool:
    """Whether ``circ(g1) circ(g2)^T`` is symmetric (it is circulant)."""
    for s in range(1, n // 2 + 1):
        a = (g1 & _rotate(g2, s, n)).bit_count() & 1
        b = (g1 & _rotate(g2, n - s, n)).bit_count() & 1
        if a != b:
            return False
    return True


def circulant_code(g1: int | str, g2: int | str, n: int | None = None) -> StabilizerCode:
    """Construction II with ``H_X = circ(g1)`` and ``H_Z = circ(g2)``, reduced to independent rows."""
    a, n1 = _as_int(g1, n)
    b, n2 = _as_int(g2, n)
    if n1 != n2:
        raise ValueError("generator vectors differ in length")
    hx, hz = circulant(a, n1), circulant(b, n1)
    h = CheckMatrix(n1, hx, hz)
    if not is_commutative(h):
        raise ConstructionError("commutativity", "circulant pair is not commutative")
    reduced = h.independent()
    if reduced.r == 0:
        raise ConstructionError("invalid-dimension", "both generators are zero")
    code = stabilizer_code(reduced, construction_tag="circulant")
    code.info["generators"] = {"g1": bits_to_str(a, n1), "g2": bits_to_str(b, n1)}
    return code


def necklace_representatives(n: int) -> list[int]:
    """Minimal rotation of each binary necklace of length ``n`` (zero excluded)."""
    out = []
    for g in range(1, 1 << n):
        if all(_rotate(g, s, n) >= g for s in range(1, n)):
            out.append(g)
    return out


def _canonical(g: int, n: int) -> int:
    return min(_rotate(g, s, n) for s in range(n))


@dataclass
class CirculantSearchResult:
    n: int
    k: int
    d: int | None
    g1: str | None
    g2: str | None
    exhaustive: bool
    candidates: int
    evaluated: int
    truncated: bool = False
    distribution: dict[int, int] = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "d": self.d,
            "g1": self.g1,
            "g2": self.g2,
            "exhaustive": self.exhaustive,
            "candidates": self.candidates,
            "evaluated": self.evaluated,
            "truncated": self.truncated,
            "distribution": {str(d): c for d, c in sorted(self.distribution.items())},
        }


def _rotate_array(g: np.ndarray, s: int, n: int) -> np.ndarray:
    s %= n
    mask = np.int64((1 << n) - 1)
    return ((g << s) | (g >> (n - s))) & mask


def _pairs_exhaustive(n: int):
    """Commutative pairs up to common rotation and X/Z swap."""
    everything = np.arange(1 << n, dtype=np.int64)
    canon = everything.copy()
    for s in range(1, n):
        canon = np.minimum(canon, _rotate_array(everything, s, n))
    rotations = [_rotate_array(everything, s, n) for s in range(n)]
    for g1 in necklace_representatives(n):
        keep = (canon >= g1) | (everything == 0)
        for s in range(1, n // 2 + 1):
            a = np.bitwise_count(rotations[s] & g1) & 1
            b = np.bitwise_count(rotations[n - s] & g1) & 1
            keep &= a == b
        for g2 in np.nonzero(keep)[0]:
            yield g1, int(g2), True


def _pairs_random(n: int, budget: int, seed: int):
    rng = np.random.default_rng(seed)
    for a, b in rng.integers(0, 1 << n, size=(budget, 2), dtype=np.int64):
        yield int(a), int(b), False


def exhaustive_space(n: int) -> int:
    """Approximate number of pairs the exhaustive walk visits."""
    return (1 << (2 * n)) // n


def circulant_search(
    n: int,
    k_target: int,
    budget: int = 1 << 23,
    seed: int = 0,
    *,
    target_d: int | None = None,
    cap: int | None = None,
) -> CirculantSearchResult:
    """Best distance among commutative circulant pairs with ``k = k_target``.

    The pair space is walked exhaustively (up to rotation and X/Z swap) when
    it fits ``budget``; otherwise ``budget`` seeded random pairs are drawn.
    ``target_d`` stops early once that distance is reached.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    exhaustive = exhaustive_space(n) <= budget
    pairs = _pairs_exhaustive(n) if exhaustive else _pairs_random(n, budget, seed)
    result = CirculantSearchResult(n, k_target, None, None, None, exhaustive, 0, 0)
    seen: set[tuple[int, int]] = set()
    r_target = n - k_target
    for g1, g2, commuting in pairs:
        result.candidates += 1
        if r_target <= 0 or circulant_rank(g1, g2, n) != r_target:
            continue
        if not commuting and not _correlation_symmetric(g1, g2, n):
            continue
        key = min((_rotate(g1, s, n), _rotate(g2, s, n)) for s in range(n))
        if key in seen:
            continue
        seen.add(key)
        h = CheckMatrix(n, circulant(g1, n), circulant(g2, n)).independent()
        code = stabilizer_code(h, construction_tag="circulant")
        res = quantum_min_distance(code, cap)
        result.evaluated += 1
        d = res.d_lower if res.truncated else res.d
        if d is None:
            continue
        result.distribution[d] = result.distribution.get(d, 0) + 1
        if result.d is None or d > result.d or (d == result.d and result.truncated and not res.truncated):
            result.d, result.truncated = d, res.truncated
            result.g1, result.g2 = bits_to_str(g1, n), bits_to_str(g2, n)
        if target_d is not None and result.d is not None and result.d >= target_d and not result.truncated:
            break
    return result


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % q for q in range(2, math.isqrt(p) + 1))


@dataclass(frozen=True)
class QrData:
    p: int
    residues: frozenset[int]
    nonresidues: frozenset[int]

    @property
    def case_mod4(self) -> int:
        return 1 if self.p % 4 == 1 else -1

    @property
    def two_is_residue(self) -> bool:
        return 2 in self.residues

    def indicator(self, which: str) -> int:
        members = self.residues if which == "Q" else self.nonresidues
        return sum(1 << j for j in members)


def quadratic_residues(p: int) -> QrData:
    if p == 2 or not is_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    q = frozenset(pow(l, 2, p) for l in range(1, p))
    return QrData(p, q, frozenset(range(1, p)) - q)


@dataclass(frozen=True)
class QrGenerators:
    """Full-rank generators of the four binary QR codes of length ``p``."""

    data: QrData
    q: BitMatrix
    q_bar: BitMatrix
    n: BitMatrix
    n_bar: BitMatrix


def qr_generator_matrices(p: int) -> QrGenerators:
    """Idempotent circulants of ``Q̄`` and ``N̄``, each stacked with the all-ones row for ``Q`` and ``N``."""
    data = quadratic_residues(p)
    if not data.two_is_residue:
        raise ValueError(f"2 is not a quadratic residue mod {p}; no binary QR code")
    ones = 1 << p
    iq, inn = data.indicator("Q"), data.indicator("N")
    if data.case_mod4 == -1:
        f_q, f_n = 1 | inn, 1 | iq
    else:
        f_q, f_n = inn, iq
    q_bar = independent_rows(circulant(f_q, p))
    n_bar = independent_rows(circulant(f_n, p))
    all_ones = BitMatrix(1, p, (ones - 1,))
    gens = QrGenerators(
        data,
        independent_rows(q_bar.vstack(all_ones)),
        q_bar,
        independent_rows(n_bar.vstack(all_ones)),
        n_bar,
    )
    half = (p - 1) // 2
    if (gens.q_bar.n_rows, gens.n_bar.n_rows, gens.q.n_rows, gens.n.n_rows) != (half, half, half + 1, half + 1):
        raise RuntimeError(f"unexpected QR code dimensions for p={p}")
    dual_of_q = gens.q_bar if data.case_mod4 == -1 else gens.n_bar
    if not (gens.q @ dual_of_q.T).is_zero():
        raise RuntimeError(f"QR duality relation fails for p={p}")
    return gens


def _require_pm1_mod8(p: int) -> None:
    if p % 8 not in (1, 7):
        raise ValueError(f"p={p} is not of the form 8m +/- 1")


def qr_css(p: int, cap: int | None = None) -> StabilizerCode:
    """``[[p, 1]]`` CSS code from ``Q̄ ⊂ Q``.

    The Z checks generate ``Q^⊥``, which is ``Q̄`` for ``p = 4j-1`` and
    ``N̄`` for ``p = 4j+1``.
    """
    _require_pm1_mod8(p)
    gens = qr_generator_matrices(p)
    parity_q = gens.q_bar if gens.data.case_mod4 == -1 else gens.n_bar
    code = css(gens.q_bar, parity_q, cap=cap)
    code = code.replace(construction_tag=f"qr-css(p={p})")
    code.info["qr_case_mod4"] = gens.data.case_mod4
    return code


def qr_css_bound_holds(p: int, d: int) -> bool:
    """``d >= sqrt(p)``, strengthened to ``d^2 - d + 1 >= p`` when ``p = 4j-1``."""
    if d * d < p:
        return False
    return p % 4 == 1 or d * d - d + 1 >= p


def _extend(g: BitMatrix) -> BitMatrix:
    n = g.n_cols
    return BitMatrix(g.n_rows, n + 1, tuple(row | ((row.bit_count() & 1) << n) for row in g.rows))


def extended_qr_css(p: int) -> StabilizerCode:
    """``[[p+1, 0]]`` CSS code from the parity-extended QR codes."""
    _require_pm1_mod8(p)
    gens = qr_generator_matrices(p)
    q_hat = _extend(gens.q)
    other = q_hat if gens.data.case_mod4 == -1 else _extend(gens.n)
    n = p + 1
    if not (q_hat @ other.T).is_zero():
        raise RuntimeError(f"extended QR pair not orthogonal for p={p}")
    hx = q_hat.vstack(BitMatrix.zeros(other.n_rows, n))
    hz = BitMatrix.zeros(q_hat.n_rows, n).vstack(other)
    code = stabilizer_code(CheckMatrix(n, hx, hz), construction_tag=f"extended-qr-css(p={p})")
    code.info["qr_case_mod4"] = gens.data.case_mod4
    return code


def extended_parity_rule(p: int, d: int) -> bool:
    """``d ≡ 0 or 3 (mod 4)`` for ``p = 4j-1``; ``d`` even for ``p = 4j+1``."""
    return d % 4 in (0, 3) if p % 4 == 3 else d % 2 == 0


def qr_circulant(p: int) -> StabilizerCode:
    """``H_X = circ(1_Q)``, ``H_Z = circ(1_N)`` for ``p = 4j+1``; rank ``p - 1``."""
    if p % 4 != 1:
        raise ValueError(f"p={p} is not 1 mod 4")
    data = quadratic_residues(p)
    hx = circulant(data.indicator("Q"), p)
    hz = circulant(data.indicator("N"), p)
    full = CheckMatrix(p, hx, hz)
    checks = {
        "hx_symmetric": hx.is_symmetric(),
        "hz_symmetric": hz.is_symmetric(),
        "hy_is_j_minus_i": (hx + hz) == BitMatrix.ones(p, p) + BitMatrix.identity(p),
        "commutative": is_commutative(full),
        "rank": full.rank,
    }
    if not all(checks[key] for key in ("hx_symmetric", "hz_symmetric", "hy_is_j_minus_i", "commutative")):
        raise RuntimeError(f"QR circulant structure check failed for p={p}: {checks}")
    if checks["rank"] != p - 1:
        raise RuntimeError(f"QR circulant rank {checks['rank']} != {p - 1}")
    code = stabilizer_code(full.independent(), construction_tag=f"qr-circulant(p={p})")
    code.info["structure_checks"] = checks
    return code


def k1_code(a: int | str, n: int | None = None) -> StabilizerCode:
    """``[[n, 1]]`` code from a symmetric vector ``a`` with ``a_0 = 0``.

    ``H_X`` pairs each of the first ``n-1`` qubits with the last one and
    ``(H_Z)_{ij} = a_{(j+1) mod n} + a_{(i-j) mod n}``; the last (zero) row
    is dropped.
    """
    value, length = _as_int(a, n)
    bits = [(value >> j) & 1 for j in range(length)]
    if bits[0]:
        raise ConstructionError("symmetry", "a_0 must be 0")
    if any(bits[i] != bits[length - i] for i in range(1, length)):
        raise ConstructionError("symmetry", "a_i != a_{n-i}")
    last = 1 << (length - 1)
    hx_rows, hz_rows = [], []
    for i in range(length - 1):
        hx_rows.append((1 << i) | last)
        row = 0
        for j in range(length):
            if bits[(j + 1) % length] ^ bits[(i - j) % length]:
                row |= 1 << j
        hz_rows.append(row)
    h = CheckMatrix(length, BitMatrix(length - 1, length, tuple(hx_rows)), BitMatrix(length - 1, length, tuple(hz_rows)))
    code = stabilizer_code(h, construction_tag="k1")
    code.info["a"] = bits_to_str(value, length)
    return code
