"""Asymptotic rate-versus-relative-distance bounds.

Two families are provided.  The ``*-thm2`` curves are classical bounds on a
``[2n, n+k]`` code translated through ``alpha = 2 alpha' - 1`` and
``delta* = delta'``; the others are the standard quantum bounds.  Every value
is clamped to ``[0, 1]``.
"""

from __future__ import annotations

import csv
import io
import math
from collections.abc import Callable, Sequence
from dataclasses import dataclass

__all__ = ["BOUND_NAMES", "BoundCurve", "bound_curve", "bound_table", "bound_value", "h2"]

_LOG2_3 = math.log2(3)


def h2(x: float) -> float:
    """Binary entropy in bits, with ``h2(0) = h2(1) = 0``."""
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"h2 argument {x} outside [0, 1]")
    if x in (0.0, 1.0):
        return 0.0
    return -x * math.log2(x) - (1.0 - x) * math.log2(1.0 - x)


def _hamming_thm2(d: float) -> float:
    return 1.0 - 2.0 * h2(d / 2.0)


def _plotkin_thm2(d: float) -> float:
    return 1.0 - 4.0 * d if d <= 0.25 else 0.0


def _elias_thm2(d: float) -> float:
    if d > 0.5:
        return 0.0
    return 1.0 - 2.0 * h2(0.5 - math.sqrt(0.5 * (0.5 - d)))


def _mrrw_thm2(d: float) -> float:
    # beyond 1/2 the expression mirrors back up; the classical bound is 0 there
    if d > 0.5:
        return 0.0
    inner = h2(0.5 - math.sqrt(d * (1.0 - d)))
    return 2.0 * inner - 1.0 if inner >= 0.5 else 0.0


def _singleton_thm2(d: float) -> float:
    return 1.0 - 2.0 * d


def _gv_thm2(d: float) -> float:
    return 1.0 - 2.0 * h2(d) if d <= 0.5 else 0.0


def _quantum_hamming(d: float) -> float:
    return 1.0 - 0.5 * d * _LOG2_3 - h2(0.5 * d)


def _quantum_singleton(d: float) -> float:
    return 1.0 - 2.0 * d


def _gv_stabilizer(d: float) -> float:
    return 1.0 - d * _LOG2_3 - h2(d) if d <= 0.5 else 0.0


def _gv_css(d: float) -> float:
    return 1.0 - 2.0 * h2(d) if d <= 0.5 else 0.0


_BOUNDS: dict[str, Callable[[float], float]] = {
    "hamming-thm2": _hamming_thm2,
    "plotkin-thm2": _plotkin_thm2,
    "elias-thm2": _elias_thm2,
    "mrrw-thm2": _mrrw_thm2,
    "singleton-thm2": _singleton_thm2,
    "gv-thm2": _gv_thm2,
    "quantum-hamming": _quantum_hamming,
    "quantum-singleton": _quantum_singleton,
    "gv-stabilizer": _gv_stabilizer,
    "gv-css": _gv_css,
}
BOUND_NAMES: tuple[str, ...] = tuple(_BOUNDS)


def bound_value(name: str, delta: float) -> float:
    try:
        fn = _BOUNDS[name]
    except KeyError:
        raise ValueError(f"unknown bound {name!r}; choose from {', '.join(BOUND_NAMES)}") from None
    if not 0.0 <= delta <= 1.0:
        raise ValueError(f"delta {delta} outside [0, 1]")
    return min(1.0, max(0.0, fn(delta)))


@dataclass(frozen=True)
class BoundCurve:
    name: str
    points: tuple[tuple[float, float], ...]


def _grid(n: int) -> list[float]:
    if n < 2:
        raise ValueError("grid needs at least 2 points")
    return [i / (n - 1) for i in range(n)]


def bound_curve(name: str, grid: int) -> BoundCurve:
    return BoundCurve(name, tuple((x, bound_value(name, x)) for x in _grid(grid)))


def bound_table(names: Sequence[str], grid: int) -> str:
    """CSV text with header ``delta,<names>`` and six decimals per value."""
    for name in names:
        if name not in _BOUNDS:
            raise ValueError(f"unknown bound {name!r}")
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["delta", *names])
    for x in _grid(grid):
        writer.writerow([f"{x:.6f}", *(f"{bound_value(name, x):.6f}" for name in names)])
    return out.getvalue()
