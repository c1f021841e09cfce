"""Generic stabilizer code builders and the effective-permutation search."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .distance import classical_min_distance
from .gf2 import BitMatrix, Permutation, SingularMatrixError, apply_column_permutation, invert, rank
from .symplectic import CheckMatrix, StabilizerCode, is_commutative, stabilizer_code

__all__ = [
    "ConstructionError",
    "PermutationSearchResult",
    "UuvConditions",
    "construction_i",
    "construction_ii",
    "construction_iii",
    "css",
    "enlarged_css",
    "find_effective_permutation",
    "permuted_uuv",
    "uuv_conditions",
]


class ConstructionError(ValueError):
    """A builder precondition failed; ``kind`` names which one."""

    def __init__(self, kind: str, message: str) -> None:
        super().__init__(f"{kind}: {message}")
        self.kind = kind


def _distance(parity: BitMatrix, supplied: int | None, cap: int | None) -> tuple[int | None, str]:
    if supplied is not None:
        return supplied, "supplied"
    res = classical_min_distance(parity, cap)
    if res.truncated:
        return res.d_lower, "lower-bound"
    return res.d, "computed"


def _min_known(*values: int | None) -> int | None:
    known = [v for v in values if v is not None]
    return min(known) if known else None


def _block(hx: BitMatrix, hz: BitMatrix) -> CheckMatrix:
    return CheckMatrix(hx.n_cols, hx, hz)


def _require_full_rank(m: BitMatrix, name: str) -> None:
    if rank(m) != m.n_rows:
        raise ConstructionError("rank", f"{name} rows are not linearly independent")


def css(
    g2: BitMatrix,
    h1: BitMatrix,
    *,
    d1: int | None = None,
    d2: int | None = None,
    cap: int | None = None,
) -> StabilizerCode:
    """CSS code from ``C_2 ⊂ C_1``: ``H = [G_2 | O; O | H_1]``.

    ``d1`` is the distance of ``C_1`` (parity ``h1``) and ``d2`` that of the
    dual of ``C_2`` (parity ``g2``); missing values are computed.
    """
    n = g2.n_cols
    if h1.n_cols != n:
        raise ConstructionError("shape", "g2 and h1 differ in length")
    _require_full_rank(g2, "g2")
    _require_full_rank(h1, "h1")
    if not (h1 @ g2.T).is_zero():
        raise ConstructionError("subcode", "C_2 is not contained in C_1 (h1 g2^T != O)")
    k = n - g2.n_rows - h1.n_rows
    if k <= 0:
        raise ConstructionError("invalid-dimension", f"k = {k}")
    h = CheckMatrix(n, g2.vstack(BitMatrix.zeros(h1.n_rows, n)), BitMatrix.zeros(g2.n_rows, n).vstack(h1))
    d1, s1 = _distance(h1, d1, cap)
    d2, s2 = _distance(g2, d2, cap)
    code = stabilizer_code(h, construction_tag="css", d_lower=_min_known(d1, d2))
    code.info["classical_distances"] = {"d1": d1, "d1_source": s1, "d2": d2, "d2_source": s2}
    return code


def enlarged_css(
    g1: BitMatrix,
    g3: BitMatrix,
    h2: BitMatrix,
    h3: BitMatrix,
    p: BitMatrix,
    *,
    d1: int | None = None,
    d2: int | None = None,
    cap: int | None = None,
) -> StabilizerCode:
    """Enlarge the CSS code of a dual-containing ``C_1`` by the extra rows ``G_3`` of ``C_2``.

    ``C_1`` has generator ``g1`` and parity ``[h2; h3]``; ``C_2`` has
    generator ``[g1; g3]`` and parity ``h2``.  ``p`` must be nonsingular with
    ``I + p`` nonsingular.  The guaranteed distance is
    ``min(d1, ceil(3 d2 / 2))``.
    """
    n = g1.n_cols
    extra = g3.n_rows
    if any(m.n_cols != n for m in (g3, h2, h3)):
        raise ConstructionError("shape", "all classical matrices need the same length")
    if extra == 1:
        raise ConstructionError(
            "no-valid-p", "a 1x1 matrix P over GF(2) cannot have both P and I+P nonsingular"
        )
    if p.shape != (extra, extra):
        raise ConstructionError("shape", f"P must be {extra}x{extra}")
    h1 = h2.vstack(h3)
    g2 = g1.vstack(g3)
    _require_full_rank(h1, "[h2; h3]")
    _require_full_rank(g2, "[g1; g3]")
    if not (h1 @ h1.T).is_zero():
        raise ConstructionError("dual-containing", "C_1 does not contain its dual (H_1 H_1^T != O)")
    if not (h1 @ g1.T).is_zero() or not (h2 @ g3.T).is_zero():
        raise ConstructionError("parity", "generator and parity-check matrices do not match")
    if h1.n_rows + g1.n_rows != n or h2.n_rows + g2.n_rows != n:
        raise ConstructionError("parity", "ranks of generators and checks do not add up to n")
    try:
        p_inv_t = invert(p.T)
    except SingularMatrixError:
        raise ConstructionError("singular-p", "P is singular") from None
    if rank(p + BitMatrix.identity(extra)) != extra:
        raise ConstructionError("singular-i-plus-p", "I + P is singular")
    m = h3 @ g3.T
    try:
        m_inv = invert(m)
    except SingularMatrixError:
        raise ConstructionError("singular-h3g3t", "H_3 G_3^T is singular") from None
    q = m @ p_inv_t @ m_inv
    zeros = BitMatrix.zeros(h2.n_rows, n)
    hx = h2.vstack(zeros, q @ h3)
    hz = zeros.vstack(h2, h3)
    gz1 = BitMatrix.zeros(g1.n_rows, n)
    g_dual = g1.hstack(gz1).vstack(gz1.hstack(g1), g3.hstack(p @ g3))
    h = CheckMatrix(n, hx, hz)
    d1, s1 = _distance(h1, d1, cap)
    d2, s2 = _distance(h2, d2, cap)
    bound = None if d1 is None or d2 is None else min(d1, math.ceil(3 * d2 / 2))
    code = stabilizer_code(h, g_dual, construction_tag="enlarged-css", d_lower=bound)
    code.info.update(
        q=q.to_strings(),
        classical_distances={"d1": d1, "d1_source": s1, "d2": d2, "d2_source": s2},
    )
    return code


def construction_i(
    h1: BitMatrix, h2: BitMatrix, *, d1: int | None = None, d2: int | None = None, cap: int | None = None
) -> StabilizerCode:
    """``H = [H_1 | O; O | H_2]``, commutative iff ``H_1 H_2^T = O``."""
    n = h1.n_cols if h1.n_rows else h2.n_cols
    if h1.n_cols != h2.n_cols:
        raise ConstructionError("shape", "h1 and h2 differ in length")
    _require_full_rank(h1, "h1")
    _require_full_rank(h2, "h2")
    if not (h1 @ h2.T).is_zero():
        raise ConstructionError("orthogonality", "H_1 H_2^T != O")
    k = n - h1.n_rows - h2.n_rows
    if k <= 0:
        raise ConstructionError("invalid-dimension", f"k = k_1 + k_2 - n = {k}")
    hx = h1.vstack(BitMatrix.zeros(h2.n_rows, n))
    hz = BitMatrix.zeros(h1.n_rows, n).vstack(h2)
    d1, s1 = _distance(h1, d1, cap)
    d2, s2 = _distance(h2, d2, cap)
    code = stabilizer_code(CheckMatrix(n, hx, hz), construction_tag="construction-i", d_lower=_min_known(d1, d2))
    code.info["classical_distances"] = {"d1": d1, "d1_source": s1, "d2": d2, "d2_source": s2}
    return code


def construction_ii(g1: BitMatrix, g2: BitMatrix) -> StabilizerCode:
    """``H = [G_1 | G_2]``; rows are reduced to an independent subset."""
    if g1.shape != g2.shape:
        raise ConstructionError("shape", "g1 and g2 must have equal shapes")
    h = _block(g1, g2)
    if not is_commutative(h):
        raise ConstructionError("commutativity", "G_1 G_2^T is not symmetric")
    h = h.independent()
    if h.r == 0:
        raise ConstructionError("invalid-dimension", "check matrix is zero")
    return stabilizer_code(h, construction_tag="construction-ii")


def construction_iii(
    h1: BitMatrix, h2: BitMatrix, *, d1: int | None = None, d2: int | None = None, cap: int | None = None
) -> StabilizerCode:
    """The ``|u|u+v|`` check matrix ``H = [H_2 | H_2; H_1 | O]``."""
    n = h2.n_cols
    if h1.n_cols != n:
        raise ConstructionError("shape", "h1 and h2 differ in length")
    _require_full_rank(h1, "h1")
    _require_full_rank(h2, "h2")
    if not (h1 @ h2.T).is_zero():
        raise ConstructionError("orthogonality", "H_1 H_2^T != O")
    k = n - h1.n_rows - h2.n_rows
    if k <= 0:
        raise ConstructionError("invalid-dimension", f"k = {k}")
    hx = h2.vstack(h1)
    hz = h2.vstack(BitMatrix.zeros(h1.n_rows, n))
    d1, s1 = _distance(h1, d1, cap)
    d2, s2 = _distance(h2, d2, cap)
    code = stabilizer_code(CheckMatrix(n, hx, hz), construction_tag="construction-iii", d_lower=_min_known(d1, d2))
    code.info["classical_distances"] = {"d1": d1, "d1_source": s1, "d2": d2, "d2_source": s2}
    return code


@dataclass(frozen=True)
class UuvConditions:
    """Outcome of the three condition groups for the permuted ``|u|u+v|`` builder.

    ``cond10`` is the literal test (``u G_3 P != u G_3`` for nonzero ``u``);
    ``cond10_strict`` additionally requires ``u G_3 (P + I)`` to avoid
    ``C_1``, which the distance argument relies on.
    """

    cond8: bool
    cond9: bool
    cond10: bool
    cond10_strict: bool

    @property
    def passed(self) -> bool:
        return self.cond8 and self.cond9 and self.cond10 and self.cond10_strict

    def failed(self) -> list[str]:
        names = ("8", "9", "10", "10_strict")
        flags = (self.cond8, self.cond9, self.cond10, self.cond10_strict)
        return [name for name, ok in zip(names, flags) if not ok]

    def as_dict(self) -> dict:
        return {"8": self.cond8, "9": self.cond9, "10": self.cond10, "10_strict": self.cond10_strict}


def _preserves(g: BitMatrix, p: Permutation) -> bool:
    return rank(g.vstack(apply_column_permutation(g, p))) == rank(g)


def uuv_conditions(h1: BitMatrix, h2: BitMatrix, g1: BitMatrix, g3: BitMatrix, p: Permutation) -> UuvConditions:
    pm = p.matrix()
    pt = pm.T
    c8 = (h1 @ pm @ h1.T) == (h1 @ pt @ h1.T) and (h1 @ pm @ h2.T).is_zero()
    g2 = g3.vstack(g1)
    c9 = _preserves(g1, p) and _preserves(g2, p)
    diff = apply_column_permutation(g3, p) + g3
    c10 = rank(diff) == g3.n_rows
    c10s = rank(diff.vstack(g1)) == g3.n_rows + rank(g1)
    return UuvConditions(c8, c9, c10, c10s)


def permuted_uuv(
    h1: BitMatrix,
    h2: BitMatrix,
    g1: BitMatrix,
    g3: BitMatrix,
    p: Permutation,
    *,
    d1: int | None = None,
    d2: int | None = None,
    cap: int | None = None,
) -> StabilizerCode:
    """``H = [H_1 | H_1 P; H_2 | O]`` for ``C_1 ⊂ C_2`` and a code-preserving permutation.

    ``C_1`` has generator ``g1`` and parity ``h1``; ``C_2`` has generator
    ``[g3; g1]`` and parity ``h2``.  Every condition is checked and failures
    are reported by number.
    """
    n = h1.n_cols
    if len(p) != n or any(m.n_cols != n for m in (h2, g1, g3)):
        raise ConstructionError("shape", "matrices and permutation must share the length n")
    if not (h1 @ g1.T).is_zero() or not (h2 @ g3.vstack(g1).T).is_zero():
        raise ConstructionError("parity", "generator and parity-check matrices do not match")
    conds = uuv_conditions(h1, h2, g1, g3, p)
    if not conds.passed:
        raise ConstructionError(
            "condition-" + "/".join(conds.failed()), f"conditions {', '.join(conds.failed())} fail"
        )
    h1p = apply_column_permutation(h1, p)
    g1p = apply_column_permutation(g1, p)
    g3p = apply_column_permutation(g3, p)
    hx = h1.vstack(h2)
    hz = h1p.vstack(BitMatrix.zeros(h2.n_rows, n))
    g_dual = g3p.hstack(g3).vstack(g1p.hstack(g1), g1p.hstack(BitMatrix.zeros(g1.n_rows, n)))
    d1, s1 = _distance(h1, d1, cap)
    d2, s2 = _distance(h2, d2, cap)
    bound = None if d1 is None or d2 is None else min(d1, math.ceil(3 * d2 / 2))
    code = stabilizer_code(CheckMatrix(n, hx, hz), g_dual, construction_tag="permuted-uuv", d_lower=bound)
    code.info.update(
        conditions=conds.as_dict(),
        classical_distances={"d1": d1, "d1_source": s1, "d2": d2, "d2_source": s2},
    )
    return code


@dataclass(frozen=True)
class PermutationSearchResult:
    """``status`` is ``found``, ``none-exists`` (exhaustive) or ``none-found`` (budget)."""

    status: str
    permutation: Permutation | None
    tried: int

    def as_dict(self) -> dict:
        out = {"status": self.status, "tried": self.tried}
        if self.permutation is not None:
            out["image"] = list(self.permutation.image)
        return out


def _pair_term(a: int, b: int, r: int) -> int:
    """Strict upper triangle of ``a b^T + b a^T`` packed as an int."""
    out = 0
    pos = 0
    for i in range(r):
        ai, bi = (a >> i) & 1, (b >> i) & 1
        for j in range(i + 1, r):
            if (ai & (b >> j) & 1) ^ (bi & (a >> j) & 1):
                out |= 1 << pos
            pos += 1
    return out


def find_effective_permutation(
    hp: BitMatrix,
    mode: str = "exhaustive",
    budget: int = 1_000_000,
    seed: int = 0,
) -> PermutationSearchResult:
    """Search a column permutation making ``hp P`` commutative.

    Commutativity of ``hp P`` depends only on which pairs of original
    columns land on positions ``(j, j + n)``, so the exhaustive mode walks
    perfect matchings of the ``2n`` columns instead of all orderings.  It
    returns ``none-exists`` once they are exhausted and ``none-found`` if the
    budget ran out first.  The random mode tries ``budget`` seeded shuffles.
    """
    if hp.n_cols % 2:
        raise ValueError("check matrix needs an even number of columns")
    n = hp.n_cols // 2
    if is_commutative(CheckMatrix.from_matrix(hp)):
        return PermutationSearchResult("found", Permutation.identity(2 * n), 1)
    if mode == "random":
        return _random_search(hp, n, budget, seed)
    if mode != "exhaustive":
        raise ValueError(f"unknown mode {mode!r}")
    cols = hp.columns()
    r = hp.n_rows
    terms = {}
    for a in range(2 * n):
        for b in range(a + 1, 2 * n):
            terms[a, b] = _pair_term(cols[a], cols[b], r)
    tried = 0
    pairs: list[tuple[int, int]] = []

    def dfs(free: list[int], acc: int) -> bool:
        nonlocal tried
        if not free:
            tried += 1
            return acc == 0
        if tried >= budget:
            return False
        a = free[0]
        for idx in range(1, len(free)):
            b = free[idx]
            pairs.append((a, b))
            if dfs(free[1:idx] + free[idx + 1 :], acc ^ terms[a, b]):
                return True
            pairs.pop()
        return False

    if dfs(list(range(2 * n)), 0):
        image = [0] * (2 * n)
        for j, (a, b) in enumerate(pairs):
            image[a] = j
            image[b] = j + n
        perm = Permutation(tuple(image))
        return PermutationSearchResult("found", perm, tried)
    total = math.prod(range(1, 2 * n, 2))
    status = "none-exists" if tried >= total else "none-found"
    return PermutationSearchResult(status, None, tried)


def _random_search(hp: BitMatrix, n: int, budget: int, seed: int) -> PermutationSearchResult:
    rng = np.random.default_rng(seed)
    for attempt in range(budget):
        perm = Permutation(tuple(int(x) for x in rng.permutation(2 * n)))
        if is_commutative(CheckMatrix.from_matrix(apply_column_permutation(hp, perm))):
            return PermutationSearchResult("found", perm, attempt + 1)
    return PermutationSearchResult("none-found", None, budget)
