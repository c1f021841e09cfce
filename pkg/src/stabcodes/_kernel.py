"""Vectorised weight-enumeration kernels.

Two searches back every distance computation:

* ``span_min_weight`` walks all ``2**D`` combinations of ``D`` basis words.
  The low ``L`` basis rows are expanded into a lookup table once; the outer
  rows are visited in Gray-code order so each step is one XOR of the table
  against a running offset plus a popcount.
* ``collision_min_weight`` is a meet-in-the-middle search for low-weight
  kernel vectors.  Every vector of weight ``<= 2s`` splits into two halves of
  weight ``<= s`` with equal signature, so sorting all ``<= s`` subsets by
  signature and scanning equal runs finds them all.
"""

from __future__ import annotations

import math
import os
import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

WORD = 64
_MASK64 = (1 << WORD) - 1
TABLE_BITS = 20
# one level of the collision search holds this many partial selections at most
MAX_SUBSETS = 1 << 23


def n_words(nbits: int) -> int:
    return max(1, -(-nbits // WORD))


def pack(values: list[int], nbits: int) -> np.ndarray:
    """Python ints -> ``(len(values), W)`` uint64 array, little-endian words."""
    w = n_words(nbits)
    out = np.zeros((len(values), w), dtype=np.uint64)
    for i, v in enumerate(values):
        for j in range(w):
            out[i, j] = (v >> (WORD * j)) & _MASK64
    return out


def unpack(row: np.ndarray) -> int:
    value = 0
    for j, word in enumerate(row.tolist()):
        value |= int(word) << (WORD * j)
    return value


def default_threads() -> int:
    return os.cpu_count() or 1


@dataclass
class SpanResult:
    weight: int | None
    index: int | None
    enumerated: int


def _table(rows: np.ndarray, count: int) -> np.ndarray:
    t = np.zeros((1, rows.shape[1]), dtype=np.uint64)
    for i in range(count):
        t = np.concatenate([t, t ^ rows[i]])
    return t


def span_min_weight(
    xs: np.ndarray,
    zs: np.ndarray | None = None,
    *,
    required_from: int = 0,
    floor: int = 1,
    threads: int | None = None,
) -> SpanResult:
    """Minimum of ``popcount(x | z)`` over combinations of the basis rows.

    Only combinations with a nonzero coefficient on some row with index
    ``>= required_from`` count; ``required_from = 0`` means any nonzero
    combination.  The walk stops once a weight ``<= floor`` is seen.
    ``index`` encodes the minimising combination (bit ``i`` = row ``i``).
    """
    d = xs.shape[0]
    if zs is None:
        zs = np.zeros_like(xs)
    if d == 0 or required_from >= d:
        return SpanResult(None, None, 0)
    width = xs.shape[1]
    low = min(d, TABLE_BITS)
    tx = _table(xs, low)
    tz = _table(zs, low)
    if width == 1:
        tx, tz = tx[:, 0], tz[:, 0]
    idx = np.arange(1 << low, dtype=np.int64)
    if required_from < low:
        table_ok = (idx >> required_from) != 0
    else:
        table_ok = np.zeros(1 << low, dtype=bool)
    outer_bits = d - low
    outer_shift = max(0, required_from - low)
    outer_rows_x = xs[low:]
    outer_rows_z = zs[low:]
    n_outer = 1 << outer_bits

    threads = threads or default_threads()
    n_chunks = max(1, min(threads, n_outer))
    bounds = [n_outer * c // n_chunks for c in range(n_chunks + 1)]
    stop = threading.Event()

    def run(start: int, end: int) -> tuple[int | None, int | None, int]:
        best_w: int | None = None
        best_idx: int | None = None
        done = 0
        gray = start ^ (start >> 1)
        ox = np.zeros(width, dtype=np.uint64)
        oz = np.zeros(width, dtype=np.uint64)
        for b in range(outer_bits):
            if (gray >> b) & 1:
                ox ^= outer_rows_x[b]
                oz ^= outer_rows_z[b]
        if width == 1:
            ox_s, oz_s = ox[0], oz[0]
        for g in range(start, end):
            if stop.is_set():
                break
            if g != start:
                b = (g & -g).bit_length() - 1
                gray ^= 1 << b
                if width == 1:
                    ox_s ^= outer_rows_x[b, 0]
                    oz_s ^= outer_rows_z[b, 0]
                else:
                    ox ^= outer_rows_x[b]
                    oz ^= outer_rows_z[b]
            if width == 1:
                w = np.bitwise_count((tx ^ ox_s) | (tz ^ oz_s))
            else:
                w = np.bitwise_count((tx ^ ox) | (tz ^ oz)).sum(axis=1, dtype=np.int64)
            done += w.shape[0]
            if (gray >> outer_shift) == 0:
                if not table_ok.any():
                    continue
                w = np.where(table_ok, w, np.iinfo(w.dtype).max)
            pos = int(np.argmin(w))
            m = int(w[pos])
            if best_w is None or m < best_w:
                best_w, best_idx = m, pos | (gray << low)
                if m <= floor:
                    stop.set()
                    break
        return best_w, best_idx, done

    if n_chunks == 1:
        results = [run(0, n_outer)]
    else:
        with ThreadPoolExecutor(max_workers=n_chunks) as pool:
            results = list(pool.map(lambda c: run(bounds[c], bounds[c + 1]), range(n_chunks)))
    best = SpanResult(None, None, sum(r[2] for r in results))
    for w, i, _ in results:
        if w is not None and (best.weight is None or w < best.weight):
            best.weight, best.index = w, i
    return best


@dataclass
class CollisionResult:
    weight: int | None  # minimal weight found (all weights <= 2*level are covered)
    witness: tuple[int, int] | None  # packed (u, v) of the minimiser
    level: int  # largest half-size that was fully searched
    enumerated: int
    complete: bool  # False when the budget stopped the search early


def subset_count(n_positions: int, options: int, level: int) -> int:
    return sum(math.comb(n_positions, i) * options**i for i in range(level + 1))


def collision_min_weight(
    sig: np.ndarray,
    support_u: np.ndarray,
    support_v: np.ndarray,
    tag: np.ndarray | None,
    *,
    n_positions: int,
    budget: int,
    max_level: int | None = None,
    max_subsets: int = MAX_SUBSETS,
) -> CollisionResult:
    """Meet-in-the-middle search for the lightest nonzero kernel vector.

    The ``options`` per position are the rows ``p*m .. p*m+m-1`` of the input
    arrays (``m = sig.shape[0] // n_positions``).  A pair of partial
    selections with equal ``sig`` combines into a kernel vector; when ``tag``
    is given the pair only counts if the tags differ.  ``budget`` caps the
    total work and ``max_subsets`` the size of a single level (memory).
    """
    m = sig.shape[0] // n_positions
    if max_level is None:
        max_level = n_positions
    enumerated = 0
    level = 0
    best: tuple[int, tuple[int, int]] | None = None
    while level < max_level:
        nxt = level + 1
        cost = subset_count(n_positions, m, nxt)
        if enumerated + cost > budget or cost > max_subsets:
            return CollisionResult(None, None, level, enumerated, False)
        enumerated += cost
        found = _collide(sig, support_u, support_v, tag, n_positions, m, nxt)
        level = nxt
        if found is not None:
            best = found
            if best[0] <= 2 * level:
                return CollisionResult(best[0], best[1], level, enumerated, True)
        if 2 * level >= n_positions:
            break
    if best is not None:
        return CollisionResult(best[0], best[1], level, enumerated, True)
    return CollisionResult(None, None, level, enumerated, True)


def _subsets(arrays: list[np.ndarray], n_positions: int, m: int, level: int) -> list[np.ndarray]:
    """All selections of at most ``level`` distinct positions, one option each."""
    cur = [np.zeros((1,) + a.shape[1:], dtype=a.dtype) for a in arrays]
    last = np.full(1, -1, dtype=np.int64)
    out = [[c] for c in cur]
    for _ in range(level):
        new = [[] for _ in arrays]
        new_last = []
        for p in range(n_positions):
            sel = last < p
            if not sel.any():
                continue
            for o in range(m):
                row = p * m + o
                for k, a in enumerate(arrays):
                    new[k].append(cur[k][sel] ^ a[row])
                new_last.append(np.full(int(sel.sum()), p, dtype=np.int64))
        if not new_last:
            break
        cur = [np.concatenate(parts) for parts in new]
        last = np.concatenate(new_last)
        for k in range(len(arrays)):
            out[k].append(cur[k])
    return [np.concatenate(parts) for parts in out]


def _collide(sig, su, sv, tag, n_positions, m, level):
    arrays = [sig, su, sv] + ([tag] if tag is not None else [])
    parts = _subsets(arrays, n_positions, m, level)
    s, u, v = parts[0], parts[1], parts[2]
    t = parts[3] if tag is not None else None
    order = np.lexsort(s.T[::-1]) if s.shape[1] > 1 else np.argsort(s[:, 0], kind="stable")
    s, u, v = s[order], u[order], v[order]
    if t is not None:
        t = t[order]
    n = s.shape[0]
    same_next = np.all(s[1:] == s[:-1], axis=1)
    if not same_next.any():
        return None
    # run id per element; pairs (i, i + off) inside a run cover every pair
    run_start = np.concatenate([[True], ~same_next])
    run_id = np.cumsum(run_start) - 1
    run_len = np.bincount(run_id)
    max_run = int(run_len.max())
    best_w = None
    best_pair = None
    for off in range(1, max_run):
        i = np.nonzero(run_id[: n - off] == run_id[off:])[0]
        if i.size == 0:
            break
        j = i + off
        if t is not None:
            ok = np.any(t[i] != t[j], axis=1)
            i, j = i[ok], j[ok]
            if i.size == 0:
                continue
        w = np.bitwise_count((u[i] ^ u[j]) | (v[i] ^ v[j])).sum(axis=1, dtype=np.int64)
        pos = int(np.argmin(w))
        if best_w is None or int(w[pos]) < best_w:
            best_w = int(w[pos])
            a, b = int(i[pos]), int(j[pos])
            best_pair = (unpack(u[a] ^ u[b]), unpack(v[a] ^ v[b]))
    if best_w is None:
        return None
    return best_w, best_pair
