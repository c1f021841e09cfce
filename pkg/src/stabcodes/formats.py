"""Text matrix files and JSON code reports.

Matrix files hold one row per line as ``0``/``1`` characters.  Check
matrices separate the X and Z halves with ``|``; a row may instead be a
Pauli label such as ``XZZXI``.  Blank lines and ``#`` comments are ignored.
"""

from __future__ import annotations

import json
from importlib import metadata
from pathlib import Path
from typing import Any

from .gf2 import BitMatrix, bits_to_int, bits_to_str
from .symplectic import CheckMatrix, StabilizerCode, parse_pauli, symplectic_gram, is_commutative

__all__ = [
    "MatrixFormatError",
    "SCHEMA_VERSION",
    "code_report",
    "dump_json",
    "format_bit_matrix",
    "format_check_matrix",
    "package_version",
    "parse_bit_matrix",
    "parse_check_matrix",
    "read_bit_matrix",
    "read_check_matrix",
    "write_check_matrix",
]

SCHEMA_VERSION = 1


class MatrixFormatError(ValueError):
    def __init__(self, message: str, line: int | None = None, source: str = "<text>") -> None:
        where = f"{source}:{line}: " if line is not None else f"{source}: "
        super().__init__(where + message)
        self.line = line


def package_version() -> str:
    try:
        return metadata.version("artifact")
    except metadata.PackageNotFoundError:
        return "0+unknown"


def _content_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip().replace(" ", "").replace("\t", "")
        if line:
            out.append((number, line))
    return out


def _bits(field: str, number: int, source: str) -> int:
    try:
        return bits_to_int(field)
    except ValueError as exc:
        raise MatrixFormatError(str(exc), number, source) from None


def parse_bit_matrix(text: str, source: str = "<text>") -> BitMatrix:
    lines = _content_lines(text)
    if not lines:
        raise MatrixFormatError("no matrix rows", source=source)
    width = len(lines[0][1])
    rows = []
    for number, line in lines:
        if "|" in line:
            raise MatrixFormatError("unexpected '|' in a classical matrix", number, source)
        if len(line) != width:
            raise MatrixFormatError(f"row has {len(line)} columns, expected {width}", number, source)
        rows.append(_bits(line, number, source))
    return BitMatrix(len(rows), width, tuple(rows))


def parse_check_matrix(text: str, source: str = "<text>") -> CheckMatrix:
    lines = _content_lines(text)
    if not lines:
        raise MatrixFormatError("no matrix rows", source=source)
    xs, zs = [], []
    n = None
    for number, line in lines:
        if "|" in line:
            parts = line.split("|")
            if len(parts) != 2:
                raise MatrixFormatError("expected exactly one '|' separator", number, source)
            left, right = parts
            if len(left) != len(right):
                raise MatrixFormatError(f"halves differ in width ({len(left)} vs {len(right)})", number, source)
            u, v, width = _bits(left, number, source), _bits(right, number, source), len(left)
        elif set(line.upper()) <= set("IXYZ"):
            vec = parse_pauli(line)
            u, v, width = vec.u, vec.v, vec.n
        else:
            raise MatrixFormatError("missing '|' separator", number, source)
        if n is None:
            n = width
        elif width != n:
            raise MatrixFormatError(f"row acts on {width} qubits, expected {n}", number, source)
        xs.append(u)
        zs.append(v)
    return CheckMatrix(n, BitMatrix(len(xs), n, tuple(xs)), BitMatrix(len(zs), n, tuple(zs)))


def _read(path: str | Path) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise MatrixFormatError(exc.strerror or str(exc), source=str(path)) from None


def read_bit_matrix(path: str | Path) -> BitMatrix:
    return parse_bit_matrix(_read(path), str(path))


def read_check_matrix(path: str | Path) -> CheckMatrix:
    return parse_check_matrix(_read(path), str(path))


def format_bit_matrix(m: BitMatrix) -> str:
    return "".join(line + "\n" for line in m.to_strings())


def format_check_matrix(h: CheckMatrix) -> str:
    return "".join(line + "\n" for line in h.to_strings())


def write_check_matrix(h: CheckMatrix, path: str | Path) -> None:
    Path(path).write_text(format_check_matrix(h))


def code_report(code: StabilizerCode, *, seed: int | None, budget: int, extra: dict[str, Any] | None = None) -> dict:
    """Versioned JSON-ready description; commutativity and duality are re-checked first."""
    if not is_commutative(code.h) or not symplectic_gram(code.h.matrix, code.g_dual, code.n).is_zero():
        raise RuntimeError("refusing to report a code whose identities do not hold")
    report: dict[str, Any] = {
        "schema": SCHEMA_VERSION,
        "version": package_version(),
        "seed": seed,
        "budget": budget,
        "construction_tag": code.construction_tag,
        "n": code.n,
        "k": code.k,
        "r": code.r,
        "d_lower": code.d_lower,
        "d_exact": code.d_exact,
        "d_classical": code.d_classical,
        "t": code.t,
        "t_star": code.t_star,
        "params": code.params(),
        "h": code.h.to_strings(),
        "g_dual": [f"{bits_to_str(row & ((1 << code.n) - 1), code.n)}|{bits_to_str(row >> code.n, code.n)}" for row in code.g_dual.rows],
    }
    if code.info:
        report["info"] = code.info
    if extra:
        report.update(extra)
    return report


def dump_json(obj: Any) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"
