"""Exact minimum distances, correction-capability estimates and syndrome decoding."""

from __future__ import annotations

import itertools
import math
import os
from dataclasses import dataclass, field

import numpy as np

from . import _kernel
from .gf2 import BitMatrix, kernel_basis
from .symplectic import StabilizerCode, SymplecticVector, symplectic_gram, syndrome

__all__ = [
    "CapabilityReport",
    "DecoderTable",
    "DistanceResult",
    "SyndromeCollisionError",
    "additional_count",
    "build_decoder",
    "classical_min_distance",
    "decode",
    "default_budget",
    "enumerate_correctable",
    "enumerate_paulis",
    "estimate_capability",
    "logical_basis",
    "original_count",
    "quantum_min_distance",
    "verify_syndrome_uniqueness",
    "with_distance",
]

DEFAULT_BUDGET = 1 << 28
BUDGET_ENV = "STABCODES_BUDGET"
# below this many words plain enumeration beats setting up a collision search
_SMALL_SPAN = 1 << 18


def default_budget() -> int:
    value = os.environ.get(BUDGET_ENV)
    return int(value) if value else DEFAULT_BUDGET


class SyndromeCollisionError(RuntimeError):
    """Two errors that must be distinguishable share a syndrome."""

    def __init__(self, first: SymplecticVector, second: SymplecticVector) -> None:
        super().__init__(f"errors {first} and {second} share a syndrome")
        self.pair = (first, second)


@dataclass(frozen=True)
class DistanceResult:
    """Outcome of a distance search.

    ``d`` is exact unless ``truncated``; then only ``d_lower`` (and possibly
    ``d_upper``) is known.  ``d`` is None with ``truncated`` False when there
    is no qualifying nonzero word at all.
    """

    d: int | None
    d_lower: int
    truncated: bool
    enumerated: int
    method: str
    d_upper: int | None = None
    witness: int | None = None

    def as_dict(self) -> dict:
        out = {"truncated": self.truncated, "enumerated": self.enumerated, "method": self.method}
        if self.truncated:
            out["d_lower"] = self.d_lower
            if self.d_upper is not None:
                out["d_upper"] = self.d_upper
        else:
            out["d"] = self.d
        return out


def logical_basis(code: StabilizerCode) -> BitMatrix:
    """Rows of the dual generator completing the stabilizer rows to a basis."""
    basis: dict[int, int] = {}

    def insert(row: int) -> bool:
        while row:
            top = row.bit_length() - 1
            if top in basis:
                row ^= basis[top]
            else:
                basis[top] = row
                return True
        return False

    for row in code.h.matrix.rows:
        insert(row)
    logical = [row for row in code.g_dual.rows if insert(row)]
    return BitMatrix(len(logical), 2 * code.n, tuple(logical))


def _span_search(rows: list[int], n: int, required_from: int, quantum: bool, floor: int, threads: int | None):
    mask = (1 << n) - 1
    if quantum:
        xs = _kernel.pack([r & mask for r in rows], n)
        zs = _kernel.pack([r >> n for r in rows], n)
    else:
        xs = _kernel.pack(rows, n)
        zs = None
    return _kernel.span_min_weight(xs, zs, required_from=required_from, floor=floor, threads=threads)


def quantum_min_distance(
    code: StabilizerCode,
    cap: int | None = None,
    *,
    method: str = "auto",
    threads: int | None = None,
) -> DistanceResult:
    """Minimum weight of a Pauli in the normalizer but outside the stabilizer.

    For ``k = 0`` the normalizer equals the stabilizer and the minimum weight
    of a nonzero stabilizer element is reported instead.  ``cap`` bounds the
    number of enumerated words; beyond it the result is a proven lower bound
    flagged ``truncated``.  ``method`` is ``auto``, ``enumerate`` or
    ``collision``.
    """
    budget = cap if cap is not None else default_budget()
    n, r = code.n, code.r
    stab = list(code.h.matrix.rows)
    if code.k > 0:
        logical = list(logical_basis(code).rows)
        rows = stab + logical
        required_from = r
    else:
        logical = []
        rows = stab
        required_from = 0
    dim = len(rows)
    span = 1 << dim
    if method not in ("auto", "enumerate", "collision"):
        raise ValueError(f"unknown method {method!r}")

    def enumerate_all() -> DistanceResult:
        res = _span_search(rows, n, required_from, True, 1, threads)
        witness = None
        if res.index is not None:
            witness = 0
            for i in range(dim):
                if (res.index >> i) & 1:
                    witness ^= rows[i]
        return DistanceResult(res.weight, res.weight or 0, False, res.enumerated, "enumerate", witness=witness)

    if method == "enumerate" and span <= budget:
        return enumerate_all()
    if method == "auto" and span <= min(budget, _SMALL_SPAN):
        return enumerate_all()

    coll = _quantum_collision(code, logical, budget if method != "auto" else min(budget, span))
    if coll.weight is not None:
        u, v = coll.witness
        return DistanceResult(coll.weight, coll.weight, False, coll.enumerated, "collision", witness=u | (v << n))
    if coll.complete:
        return DistanceResult(None, 0, False, coll.enumerated, "collision")
    if method == "auto" and span <= budget:
        res = enumerate_all()
        return DistanceResult(res.d, res.d_lower, False, res.enumerated + coll.enumerated, "enumerate", witness=res.witness)
    return DistanceResult(None, 2 * coll.level + 1, True, coll.enumerated, "collision")


def _quantum_collision(code: StabilizerCode, logical: list[int], budget: int) -> _kernel.CollisionResult:
    n = code.n
    h = code.h
    # per qubit: X, Z, Y options; signature = syndrome, tag = logical products
    sig_vals, tag_vals, us, vs = [], [], [], []
    lmat = BitMatrix(len(logical), 2 * n, tuple(logical))
    for q in range(n):
        for pauli in ("X", "Z", "Y"):
            e = SymplecticVector.single(n, q, pauli)
            sig_vals.append(syndrome(h, e))
            tag_vals.append(
                symplectic_gram(BitMatrix(1, 2 * n, (e.packed,)), lmat, n).rows[0] if logical else 0
            )
            us.append(e.u)
            vs.append(e.v)
    sig = _kernel.pack(sig_vals, max(1, h.r))
    tag = _kernel.pack(tag_vals, max(1, len(logical))) if logical else None
    return _kernel.collision_min_weight(
        sig, _kernel.pack(us, n), _kernel.pack(vs, n), tag, n_positions=n, budget=budget
    )


def classical_min_distance(
    hp: BitMatrix,
    cap: int | None = None,
    *,
    method: str = "auto",
    threads: int | None = None,
) -> DistanceResult:
    """Minimum Hamming weight of a nonzero word of the code with parity-check ``hp``."""
    budget = cap if cap is not None else default_budget()
    length = hp.n_cols
    gen = kernel_basis(hp)
    dim = gen.n_rows
    if dim == 0:
        return DistanceResult(None, 0, False, 0, "enumerate")
    span = 1 << dim

    def enumerate_all() -> DistanceResult:
        res = _span_search(list(gen.rows), length, 0, False, 1, threads)
        witness = 0
        for i in range(dim):
            if (res.index >> i) & 1:
                witness ^= gen.rows[i]
        return DistanceResult(res.weight, res.weight, False, res.enumerated, "enumerate", witness=witness)

    if method == "enumerate" and span <= budget:
        return enumerate_all()
    if method == "auto" and span <= min(budget, _SMALL_SPAN):
        return enumerate_all()
    cols = hp.columns()
    sig = _kernel.pack(cols, max(1, hp.n_rows))
    su = _kernel.pack([1 << j for j in range(length)], length)
    sv = np.zeros_like(su)
    coll = _kernel.collision_min_weight(
        sig, su, sv, None, n_positions=length, budget=budget if method != "auto" else min(budget, span)
    )
    if coll.weight is not None:
        return DistanceResult(coll.weight, coll.weight, False, coll.enumerated, "collision", witness=coll.witness[0])
    if method == "auto" and span <= budget:
        res = enumerate_all()
        return DistanceResult(res.d, res.d, False, res.enumerated + coll.enumerated, "enumerate", witness=res.witness)
    return DistanceResult(None, 2 * coll.level + 1, True, coll.enumerated, "collision")


def with_distance(code: StabilizerCode, cap: int | None = None, **kwargs) -> StabilizerCode:
    """Return ``code`` with ``d_exact`` filled in (or ``d_lower`` raised) by search."""
    res = quantum_min_distance(code, cap, **kwargs)
    info = dict(code.info)
    info["distance_search"] = res.as_dict()
    if res.truncated:
        lower = max(res.d_lower, code.d_lower or 0)
        return code.replace(d_lower=lower, info=info)
    exact = code.replace(d_exact=res.d, info=info)
    exact.validate()
    return exact


def additional_count(n: int, t: int, t_star: int) -> int:
    """Count errors with ``w(u) + w(v) <= 2 t*`` whose weight exceeds ``t``."""
    total = 0
    for l in range(t + 1, 2 * t_star + 1):
        for m_y in range(0, 2 * t_star - l + 1):
            total += math.comb(n, l) * math.comb(l, m_y) * 2 ** (l - m_y)
    return total


def original_count(n: int, t: int) -> int:
    """Number of Paulis of weight at most ``t``."""
    return sum(math.comb(n, i) * 3**i for i in range(t + 1))


@dataclass(frozen=True)
class CapabilityReport:
    d_classical: int | None
    d_x: int | None
    d_z: int | None
    d_y: int | None
    t_star: int
    upgraded_by_y: bool
    t: int | None
    additional_count: int
    truncated: bool = False

    def as_dict(self) -> dict:
        return dict(self.__dict__)


def _as_bound(res: DistanceResult) -> float:
    if res.truncated:
        return float(res.d_lower)
    return math.inf if res.d is None else float(res.d)


def estimate_capability(code: StabilizerCode, cap: int | None = None) -> CapabilityReport:
    """t* from the classical distance of ``[H_X | H_Z]``, upgraded when ``C_Y`` allows."""
    h = code.h
    if code.d_classical is not None:
        d_cl = code.d_classical
        cl_truncated = False
    else:
        res = classical_min_distance(h.matrix, cap)
        cl_truncated = res.truncated
        d_cl = res.d_lower if res.truncated else res.d
    dx = classical_min_distance(h.hx, cap)
    dz = classical_min_distance(h.hz, cap)
    dy = classical_min_distance(h.hx + h.hz, cap)
    truncated = cl_truncated or dx.truncated or dz.truncated or dy.truncated
    if d_cl is None:
        # no nonzero word: every column set is independent
        d_cl_eff = 2 * code.n + 1
    else:
        d_cl_eff = d_cl
    t_star = (d_cl_eff - 1) // 4
    upgraded = False
    boosted = d_cl_eff // 4
    if boosted > t_star and _as_bound(dy) >= 2 * boosted + 1:
        t_star = boosted
        upgraded = True
    t = code.t
    extra = additional_count(code.n, t, t_star) if t is not None else 0

    def val(res: DistanceResult) -> int | None:
        return res.d_lower if res.truncated else res.d

    return CapabilityReport(d_cl, val(dx), val(dz), val(dy), t_star, upgraded, t, extra, truncated)


def enumerate_paulis(n: int, max_weight: int) -> list[SymplecticVector]:
    """Every Pauli of generalized weight at most ``max_weight`` (identity first)."""
    out = [SymplecticVector.zero(n)]
    for w in range(1, max_weight + 1):
        for support in itertools.combinations(range(n), w):
            for kinds in itertools.product(((1, 0), (0, 1), (1, 1)), repeat=w):
                u = v = 0
                for q, (a, b) in zip(support, kinds):
                    u |= a << q
                    v |= b << q
                out.append(SymplecticVector(n, u, v))
    return out


def enumerate_correctable(code: StabilizerCode | int, t_star: int, budget: int | None = None) -> list[SymplecticVector]:
    """All ``(u, v)`` with ``w(u) + w(v) <= 2 t*``, the zero vector included."""
    n = code if isinstance(code, int) else code.n
    limit = 2 * t_star
    size = sum(math.comb(n, a) * math.comb(n, b) for a in range(limit + 1) for b in range(limit + 1 - a))
    if size > (budget if budget is not None else default_budget()):
        raise ValueError(f"{size} errors exceed the enumeration budget")
    out = []
    for a in range(limit + 1):
        for us in itertools.combinations(range(n), a):
            u = sum(1 << q for q in us)
            for b in range(limit + 1 - a):
                for vs in itertools.combinations(range(n), b):
                    out.append(SymplecticVector(n, u, sum(1 << q for q in vs)))
    return out


def verify_syndrome_uniqueness(
    code: StabilizerCode, errors: list[SymplecticVector]
) -> tuple[SymplecticVector, SymplecticVector] | None:
    """None when all syndromes differ, else one colliding pair."""
    seen: dict[int, SymplecticVector] = {}
    for e in errors:
        s = syndrome(code.h, e)
        if s in seen:
            return seen[s], e
        seen[s] = e
    return None


@dataclass
class DecoderTable:
    """Syndrome -> error lookup; write-once after ``build_decoder``."""

    n: int
    r: int
    t_star: int | None
    entries: dict[int, SymplecticVector] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.entries)

    def decode(self, s: int) -> SymplecticVector | None:
        if s < 0 or s >= (1 << self.r):
            raise ValueError(f"syndrome does not fit in {self.r} bits")
        return self.entries.get(s)


def build_decoder(
    code: StabilizerCode,
    t_star: int | None = None,
    errors: list[SymplecticVector] | None = None,
) -> DecoderTable:
    """Tabulate syndromes of the correctable set; collisions are fatal.

    The set is ``errors`` when given, otherwise everything with
    ``w(u) + w(v) <= 2 t*`` (``t*`` defaulting to the code's own estimate).
    """
    if errors is None:
        if t_star is None:
            t_star = code.t_star if code.t_star is not None else estimate_capability(code).t_star
        errors = enumerate_correctable(code, t_star)
    table = DecoderTable(code.n, code.r, t_star)
    for e in errors:
        s = syndrome(code.h, e)
        prev = table.entries.get(s)
        if prev is not None:
            raise SyndromeCollisionError(prev, e)
        table.entries[s] = e
    return table


def decode(table: DecoderTable, s: int) -> SymplecticVector | None:
    """Stored error for syndrome ``s``; None marks a detected, uncorrectable error."""
    return table.decode(s)
