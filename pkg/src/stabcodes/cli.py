"""``stabcodes`` command-line interface.

Reports go to standard output (or ``--out``) as JSON, bound curves as CSV.
Contract violations exit with status 1 and a JSON ``{"error": ...}`` object;
usage errors exit with status 2.
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path
from typing import Any

from . import constructions as cons
from .bounds import BOUND_NAMES, bound_table
from .cyclic import circulant_code, circulant_search, extended_qr_css, k1_code, qr_circulant, qr_css
from .distance import (
    build_decoder,
    default_budget,
    enumerate_paulis,
    estimate_capability,
    quantum_min_distance,
    with_distance,
)
from .formats import (
    SCHEMA_VERSION,
    MatrixFormatError,
    code_report,
    dump_json,
    package_version,
    read_bit_matrix,
    read_check_matrix,
)
from .gf2 import Permutation, bits_to_int
from .reed_muller import check_rm_permutation, quantum_rm, quantum_rm_permuted, rm_shift_permutations
from .symplectic import StabilizerCode, format_pauli, is_commutative, stabilizer_code
from .tables import run_table

__all__ = ["main"]


class CliError(Exception):
    """A contract error reported as JSON with exit status 1."""


def _envelope(args: argparse.Namespace, payload: dict) -> dict:
    base = {
        "schema": SCHEMA_VERSION,
        "version": package_version(),
        "seed": args.seed,
        "budget": args.budget,
        "command": args.command,
    }
    base.update(payload)
    return base


def _emit(args: argparse.Namespace, text: str) -> None:
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def _emit_json(args: argparse.Namespace, payload: dict) -> None:
    _emit(args, dump_json(_envelope(args, payload)))


def _finish_code(args: argparse.Namespace, code: StabilizerCode) -> None:
    if getattr(args, "distance", False):
        code = with_distance(code, args.budget, threads=args.threads)
    _emit(args, dump_json(code_report(code, seed=args.seed, budget=args.budget, extra={"command": args.command})))


def _parse_perm(text: str, n: int) -> Permutation:
    try:
        image = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise CliError(f"permutation must be comma-separated integers, got {text!r}") from None
    if len(image) != n:
        raise CliError(f"permutation has {len(image)} entries, expected {n}")
    try:
        return Permutation(image)
    except ValueError as exc:
        raise CliError(str(exc)) from None


def cmd_check(args: argparse.Namespace) -> None:
    h = read_check_matrix(args.input)
    r = h.rank
    _emit_json(
        args,
        {
            "n": h.n,
            "rows": h.r,
            "rank": r,
            "k": h.n - r,
            "commutative": is_commutative(h),
            "independent": r == h.r,
        },
    )


def cmd_mindist(args: argparse.Namespace) -> None:
    h = read_check_matrix(args.input).independent()
    code = stabilizer_code(h, construction_tag="file")
    start = time.perf_counter()
    res = quantum_min_distance(code, args.cap if args.cap is not None else args.budget, method=args.method, threads=args.threads)
    elapsed = time.perf_counter() - start
    payload = {"n": code.n, "k": code.k, **res.as_dict(), "seconds": round(elapsed, 3)}
    _emit_json(args, payload)


def cmd_construct(args: argparse.Namespace) -> None:
    files = args.input
    need = {"css": 2, "enlarged": 5, "c1": 2, "c2": 2, "c3": 2, "uuv-perm": 4}[args.kind]
    if len(files) != need:
        raise CliError(f"construct {args.kind} needs {need} matrix files, got {len(files)}")
    mats = [read_bit_matrix(f) for f in files]
    if args.kind == "css":
        code = cons.css(*mats, cap=args.budget)
    elif args.kind == "enlarged":
        code = cons.enlarged_css(*mats, cap=args.budget)
    elif args.kind == "c1":
        code = cons.construction_i(*mats, cap=args.budget)
    elif args.kind == "c2":
        code = cons.construction_ii(*mats)
    elif args.kind == "c3":
        code = cons.construction_iii(*mats, cap=args.budget)
    else:
        if not args.perm:
            raise CliError("uuv-perm needs --perm")
        code = cons.permuted_uuv(*mats, _parse_perm(args.perm, mats[0].n_cols), cap=args.budget)
    _finish_code(args, code)


def cmd_rm(args: argparse.Namespace) -> None:
    if args.perm == "none":
        code = quantum_rm(args.r, args.m)
    else:
        perms = rm_shift_permutations(args.m)
        code = quantum_rm_permuted(args.r, args.m, perms["T" if args.perm == "t" else "P"])
    if args.capability:
        code.info["capability"] = estimate_capability(code, args.budget).as_dict()
    _finish_code(args, code)


def cmd_rm_conjecture(args: argparse.Namespace) -> None:
    rows = []
    for m in range(2, args.mmax + 1):
        perms = rm_shift_permutations(m)
        for r in range(1, min(args.rmax, m // 2) + 1):
            for label, key in (("T", "T"), ("TQ", "P")):
                conds = check_rm_permutation(r, m, perms[key])
                rows.append({"r": r, "m": m, "perm": label, **conds.as_dict(), "all": conds.passed})
    _emit_json(args, {"rows": rows})


def cmd_circulant(args: argparse.Namespace) -> None:
    if len(args.g1) != args.n or len(args.g2) != args.n:
        raise CliError(f"generator vectors must have length {args.n}")
    _finish_code(args, circulant_code(args.g1, args.g2))


def cmd_circulant_search(args: argparse.Namespace) -> None:
    res = circulant_search(args.n, args.k, args.pairs, args.seed, target_d=args.target_d, cap=args.budget)
    _emit_json(args, res.as_dict())


def cmd_qr(args: argparse.Namespace) -> None:
    if args.p > 23 and args.distance and not args.long:
        raise CliError(f"distance search for p={args.p} is long-running; pass --long")
    if args.variant == "css":
        code = qr_css(args.p, cap=args.budget)
    elif args.variant == "extended":
        code = extended_qr_css(args.p)
    else:
        code = qr_circulant(args.p)
    _finish_code(args, code)


def cmd_k1(args: argparse.Namespace) -> None:
    _finish_code(args, k1_code(args.a))


def cmd_bounds(args: argparse.Namespace) -> None:
    names = [s for s in args.names.split(",") if s] if args.names else list(BOUND_NAMES)
    _emit(args, bound_table(names, args.grid))


def cmd_decode(args: argparse.Namespace) -> None:
    h = read_check_matrix(args.input).independent()
    code = stabilizer_code(h, construction_tag="file")
    if len(args.syndrome) != code.r:
        raise CliError(f"syndrome must have {code.r} bits")
    if args.t_star is not None:
        table = build_decoder(code, args.t_star)
    else:
        weight = args.weight
        if weight is None:
            res = quantum_min_distance(code, args.budget, threads=args.threads)
            weight = (res.d_lower - 1) // 2
        table = build_decoder(code, errors=enumerate_paulis(code.n, weight))
    e = table.decode(bits_to_int(args.syndrome))
    _emit_json(
        args,
        {
            "syndrome": args.syndrome,
            "status": "corrected" if e is not None else "detected-uncorrectable",
            "error": None if e is None else format_pauli(e),
            "table_size": len(table),
        },
    )


def cmd_search_perm(args: argparse.Namespace) -> None:
    hp = read_check_matrix(args.input).matrix
    res = cons.find_effective_permutation(hp, args.mode, args.pairs, args.seed)
    _emit_json(args, {"n": hp.n_cols // 2, **res.as_dict()})


def cmd_tables(args: argparse.Namespace) -> None:
    options: dict[str, Any] = {"seed": args.seed}
    if args.pmax is not None:
        options["pmax"] = args.pmax
    elif args.number == 5 and args.long:
        options["pmax"] = 29
    if args.nmax is not None:
        options["nmax"] = args.nmax
    if args.budget_given:
        options["budget"] = args.budget
    cells = run_table(args.number, **options)
    summary = {s: sum(c["status"] == s for c in cells) for s in ("matched", "mismatch", "skipped-budget")}
    _emit_json(args, {"table": args.number, "cells": cells, "summary": summary})


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="PRNG seed recorded in every report")
    common.add_argument("--budget", type=int, default=None, help="enumeration budget (default: $STABCODES_BUDGET or 2^28)")
    common.add_argument("--threads", type=int, default=None, help="worker threads for distance enumeration")
    common.add_argument("--out", default=None, help="write the report here instead of standard output")

    parser = argparse.ArgumentParser(prog="stabcodes", description="Stabilizer code construction and analysis.")
    parser.add_argument("--version", action="version", version=package_version())
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="commutativity and rank of a check matrix")
    p.add_argument("--in", dest="input", required=True)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("mindist", parents=[common], help="quantum minimum distance")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--cap", type=int, default=None, help="maximum number of enumerated words")
    p.add_argument("--method", choices=["auto", "enumerate", "collision"], default="auto")
    p.set_defaults(func=cmd_mindist)

    p = sub.add_parser("construct", parents=[common], help="build a code from classical matrices")
    p.add_argument("kind", choices=["css", "enlarged", "c1", "c2", "c3", "uuv-perm"])
    p.add_argument("--in", dest="input", nargs="+", required=True, help="matrix files in the order of the builder's arguments")
    p.add_argument("--perm", default=None, help="comma-separated column images for uuv-perm")
    p.add_argument("--distance", action="store_true", help="also search the exact distance")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("rm", parents=[common], help="quantum Reed-Muller code")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--perm", choices=["none", "t", "tq"], default="none")
    p.add_argument("--distance", action="store_true")
    p.add_argument("--capability", action="store_true", help="include the t* estimate")
    p.set_defaults(func=cmd_rm)

    p = sub.add_parser("rm-conjecture", parents=[common], help="condition table for T and TQ")
    p.add_argument("--rmax", type=int, default=2)
    p.add_argument("--mmax", type=int, default=6)
    p.set_defaults(func=cmd_rm_conjecture)

    p = sub.add_parser("circulant", parents=[common], help="code from two circulant generators")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--g1", required=True)
    p.add_argument("--g2", required=True)
    p.add_argument("--distance", action="store_true")
    p.set_defaults(func=cmd_circulant)

    p = sub.add_parser("circulant-search", parents=[common], help="best circulant code for (n, k)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--pairs", type=int, default=1 << 23, help="generator pairs to visit")
    p.add_argument("--target-d", type=int, default=None)
    p.set_defaults(func=cmd_circulant_search)

    p = sub.add_parser("qr", parents=[common], help="quadratic-residue codes")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--variant", choices=["css", "extended", "circulant"], required=True)
    p.add_argument("--distance", action="store_true")
    p.add_argument("--long", action="store_true", help="allow long distance searches")
    p.set_defaults(func=cmd_qr)

    p = sub.add_parser("k1", parents=[common], help="[[n, 1]] code from a symmetric vector")
    p.add_argument("--a", required=True, help="bits a_0 .. a_{n-1}")
    p.add_argument("--distance", action="store_true")
    p.set_defaults(func=cmd_k1)

    p = sub.add_parser("bounds", parents=[common], help="asymptotic bound curves as CSV")
    p.add_argument("--names", default=None, help=f"comma-separated subset of {','.join(BOUND_NAMES)}")
    p.add_argument("--grid", type=int, default=101)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("decode", parents=[common], help="syndrome-table decoding")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--syndrome", required=True, help="bit i = generator i")
    p.add_argument("--t-star", type=int, default=None, help="tabulate the w(u)+w(v) <= 2 t* region")
    p.add_argument("--weight", type=int, default=None, help="tabulate all Paulis up to this weight (default: floor((d-1)/2))")
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("search-perm", parents=[common], help="effective permutation search")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--mode", choices=["exhaustive", "random"], default="exhaustive")
    p.add_argument("--pairs", type=int, default=1_000_000, help="matchings or shuffles to try")
    p.set_defaults(func=cmd_search_perm)

    p = sub.add_parser("tables", parents=[common], help="regenerate a published table")
    p.add_argument("number", type=int, choices=[1, 2, 3, 4, 5])
    p.add_argument("--pmax", type=int, default=None)
    p.add_argument("--nmax", type=int, default=None)
    p.add_argument("--long", action="store_true")
    p.set_defaults(func=cmd_tables)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    args.budget_given = args.budget is not None
    if args.budget is None:
        args.budget = default_budget()
    try:
        args.func(args)
    except (CliError, MatrixFormatError, ValueError, RuntimeError) as exc:
        kind = getattr(exc, "kind", type(exc).__name__)
        sys.stdout.write(dump_json({"error": str(exc), "kind": kind, "command": args.command}))
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
