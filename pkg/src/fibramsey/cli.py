"""Command line entry point: ``fibramsey <command> ...``.

Exit codes: 0 success; 1 a forbidden pattern was found (``verify``) or a
proof check failed (``proofcheck``); 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import satgen
from .colorings import (
    ColoringFormatError,
    congruence_coloring,
    from_word,
    lift_parity,
    lucas_mod8,
    read_coloring,
    write_coloring,
)
from .diffsets import DiffSet
from .proofcheck import SUITES
from .search import MODES, exact_number, find_pattern, greedy_color
from .words import WORDS, write_prefix, word_prefix

EXIT_OK, EXIT_FOUND, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _diffset(args) -> DiffSet:
    if args.D_file:
        try:
            return DiffSet.from_file(args.D_file)
        except (OSError, ValueError) as exc:
            raise InputError(f"cannot read gap file: {exc}") from None
    if not args.D:
        raise InputError("one of --D or --D-file is required")
    try:
        if "," in args.D or args.D.isdigit():
            return DiffSet([int(t) for t in args.D.split(",") if t.strip()])
        return DiffSet(args.D)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _add_d(p: argparse.ArgumentParser) -> None:
    p.add_argument("--D", help="F, G, L, P or a comma-separated list of gaps")
    p.add_argument("--D-file", help="file with one gap per line")
    p.add_argument("--k", type=int, required=True, help="pattern length")
    p.add_argument("--mode", choices=MODES, default="diffseq")


def cmd_word(args) -> int:
    if args.out:
        write_prefix(args.name, args.len, args.out, fmt=args.format)
    else:
        print(word_prefix(args.name, args.len))
    return EXIT_OK


def cmd_color(args) -> int:
    kind, n = args.kind, args.n
    if kind in ("F", "S", "T"):
        c = from_word(kind, n)
    elif kind == "lift-S":
        c = lift_parity(from_word("S", (n + 1) // 2), n)
    elif kind == "lucas-mod8":
        c = lucas_mod8(n)
    else:
        c = congruence_coloring(args.modulus, n)
    write_coloring(c, args.out)
    print(json.dumps({"n": c.n, "r": c.r, "file": args.out}))
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        c = read_coloring(args.file)
    except (OSError, ColoringFormatError) as exc:
        raise InputError(str(exc)) from None
    D = _diffset(args)
    if args.k < 2:
        raise InputError("k must be at least 2")
    hit = find_pattern(c, D, args.k, args.mode)
    if hit is None:
        print(json.dumps({"found": False, "n": c.n, "r": c.r, "D": D.name, "k": args.k, "mode": args.mode}))
        return EXIT_OK
    print(json.dumps({"found": True, "witness": hit.to_dict()}))
    return EXIT_FOUND


def cmd_number(args) -> int:
    D = _diffset(args)
    if args.k < 2 or args.r < 1:
        raise InputError("need k >= 2 and r >= 1")
    if args.engine == "exact":
        res = exact_number(D, args.k, args.r, args.mode, n_cap=args.n_cap or 100,
                           symmetry=args.symmetry, time_limit=args.timeout)
    else:
        try:
            res = satgen.compute_number(D, args.k, args.r, args.mode, strategy=args.strategy,
                                        n_cap=args.n_cap or 10_000, solver_command=args.solver_cmd,
                                        timeout=args.timeout)
        except satgen.SolverError as exc:
            raise InputError(str(exc)) from None
    if args.witness_out and res.witness is not None:
        res.save_witness(args.witness_out)
    print(res.to_json())
    return EXIT_OK


def cmd_greedy(args) -> int:
    D = _diffset(args)
    res = greedy_color(D, args.k, args.r, args.n, policy=args.policy, mode=args.mode, window=args.window)
    out = {"policy": res.policy, "window": res.window, "ok": res.ok, "stuck_at": res.stuck_at,
           "elapsed": round(res.elapsed, 3)}
    if res.ok:
        out["verified"] = find_pattern(res.coloring, D, args.k, args.mode) is None
        if args.out:
            write_coloring(res.coloring, args.out)
            out["witness_file"] = args.out
    print(json.dumps(out))
    return EXIT_OK if res.ok else EXIT_FOUND


def cmd_encode(args) -> int:
    D = _diffset(args)
    inst = satgen.encode(D, args.k, args.r, args.n, args.mode)
    if args.out:
        with open(args.out, "w") as fh:
            satgen.emit_dimacs(inst, fh)
    else:
        satgen.emit_dimacs(inst, sys.stdout)
    return EXIT_OK


def cmd_proofcheck(args) -> int:
    suite = args.suite
    if suite == "lemma32":
        rep = SUITES[suite](args.imax)
    elif suite == "chains":
        rep = SUITES[suite](args.N or 10_000)
    elif suite == "lemma33":
        rep = SUITES[suite](range(args.nmin, args.nmax + 1))
    elif suite == "thm2":
        rep = SUITES[suite](args.N or 60)
    else:
        rep = SUITES[suite](args.terms)
    print(rep.to_json() if args.json else rep.text())
    return EXIT_OK if rep.ok else EXIT_FOUND


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="fibramsey", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("word", help="print or save a prefix of F, S or T")
    p.add_argument("name", choices=sorted(WORDS))
    p.add_argument("--len", type=int, required=True)
    p.add_argument("--out")
    p.add_argument("--format", choices=("text", "binary"), default="text")
    p.set_defaults(func=cmd_word)

    p = sub.add_parser("color", help="write a witness coloring file")
    p.add_argument("kind", choices=("F", "S", "T", "lift-S", "lucas-mod8", "mod"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--modulus", type=int, default=5)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("verify", help="search a coloring file for a monochromatic pattern")
    p.add_argument("file")
    _add_d(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("number", help="compute a diffsequence or progression number")
    _add_d(p)
    p.add_argument("--r", type=int, required=True, help="number of colors")
    p.add_argument("--engine", choices=("exact", "sat"), default="exact")
    p.add_argument("--n-cap", type=int, help="give up above this n (exact: 100, sat: 10000)")
    p.add_argument("--symmetry", choices=("first", "full", "none"), default="full")
    p.add_argument("--strategy", choices=("linear", "bisect"), default="linear")
    p.add_argument("--solver-cmd", help=f"solver command with {{input}}; falls back to ${satgen.SOLVER_ENV}")
    p.add_argument("--timeout", type=float, help="seconds (exact: whole run, sat: per instance)")
    p.add_argument("--witness-out", help="write the best avoiding coloring here")
    p.set_defaults(func=cmd_number)

    p = sub.add_parser("greedy", help="greedy lower-bound coloring of [n]")
    _add_d(p)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--policy", choices=("first-fit", "backtrack"), default="first-fit")
    p.add_argument("--window", type=int, default=30)
    p.add_argument("--out")
    p.set_defaults(func=cmd_greedy)

    p = sub.add_parser("encode", help="write the DIMACS CNF for one instance")
    _add_d(p)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("proofcheck", help="run a finite verification suite")
    p.add_argument("suite", choices=sorted(SUITES))
    p.add_argument("--imax", type=int, default=30)
    p.add_argument("--N", type=int)
    p.add_argument("--nmin", type=int, default=13)
    p.add_argument("--nmax", type=int, default=200)
    p.add_argument("--terms", type=int, default=10_000)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_proofcheck)
    return ap


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (InputError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
