"""Running a SAT solver on an encoded instance and checking what it returns.

External solvers are separate processes that read a DIMACS file and print
the usual ``s SATISFIABLE`` / ``v ...`` lines. The command is a template in
which ``{input}`` is replaced by the instance path (the path is appended if
the placeholder is missing). Without a command, formulas with at most
:data:`~fibramsey.satgen.dpll.MAX_BUILTIN_VARS` variables go to the built-in
DPLL.
"""

from __future__ import annotations

import os
import shlex
import subprocess
import tempfile
from dataclasses import dataclass, field
from pathlib import Path

from ..colorings import Coloring
from ..diffsets import DiffSet
from ..search import find_pattern
from .dimacs import emit_dimacs
from .dpll import MAX_BUILTIN_VARS, dpll
from .encoding import CnfInstance, decode_model

__all__ = ["SolveOutcome", "SolverError", "EncodingBug", "solve", "parse_solver_output", "SOLVER_ENV"]

SOLVER_ENV = "FIBRAMSEY_SOLVER"


class SolverError(RuntimeError):
    pass


class EncodingBug(AssertionError):
    """A model was accepted by the solver but its coloring contains a pattern."""


@dataclass
class SolveOutcome:
    status: str  # "sat", "unsat" or "unknown"
    model: list[int] | None = None
    coloring: Coloring | None = None
    solver: str = "builtin-dpll"
    log: list[str] = field(default_factory=list)


def parse_solver_output(text: str) -> tuple[str | None, list[int], list[str]]:
    """Extract ``(status, model literals, comment lines)`` from solver stdout."""
    status = None
    lits: list[int] = []
    comments = []
    for line in text.splitlines():
        s = line.strip()
        if s.startswith("s "):
            word = s[2:].strip().upper()
            if word == "SATISFIABLE":
                status = "sat"
            elif word == "UNSATISFIABLE":
                status = "unsat"
            elif word in ("UNKNOWN", "INDETERMINATE"):
                status = "unknown"
            else:
                raise SolverError(f"unrecognised status line {s!r}")
        elif s.startswith("v ") or s == "v":
            lits.extend(int(t) for t in s[1:].split() if t != "0")
        elif s.startswith("c"):
            comments.append(s[1:].strip())
    return status, lits, comments


def _command(template: str, path: str) -> list[str]:
    if "{input}" in template:
        return shlex.split(template.replace("{input}", shlex.quote(path)))
    return shlex.split(template) + [path]


def solve(inst: CnfInstance, D: DiffSet, solver_command: str | None = None,
          timeout: float | None = None, allow_env: bool = True) -> SolveOutcome:
    """Solve ``inst``; on sat, decode the model and re-check it with detect."""
    if solver_command is None and allow_env:
        solver_command = os.environ.get(SOLVER_ENV) or None
    if solver_command is None:
        if inst.var_count > MAX_BUILTIN_VARS:
            raise SolverError(
                f"{inst.var_count} variables exceed the built-in limit of {MAX_BUILTIN_VARS}; "
                f"pass a solver command or set {SOLVER_ENV}"
            )
        model = dpll(inst.var_count, inst.clauses)
        out = SolveOutcome("unsat" if model is None else "sat", model, solver="builtin-dpll")
    else:
        out = _run_external(inst, solver_command, timeout)
    if out.status == "sat":
        out.coloring = decode_model(inst, out.model)
        hit = find_pattern(out.coloring, D, inst.k, inst.mode)
        if hit is not None:
            raise EncodingBug(f"solver model at n={inst.n} contains {hit}")
    return out


def _run_external(inst: CnfInstance, template: str, timeout: float | None) -> SolveOutcome:
    with tempfile.TemporaryDirectory(prefix="fibramsey-") as tmp:
        path = str(Path(tmp) / f"{inst.D}_k{inst.k}_r{inst.r}_n{inst.n}_{inst.mode}.cnf")
        with open(path, "w") as fh:
            emit_dimacs(inst, fh)
        cmd = _command(template, path)
        try:
            proc = subprocess.run(cmd, capture_output=True, text=True, timeout=timeout)
        except subprocess.TimeoutExpired:
            return SolveOutcome("unknown", solver=template, log=["timeout"])
        except OSError as exc:
            raise SolverError(f"cannot run solver {cmd[0]!r}: {exc}") from exc
    status, lits, comments = parse_solver_output(proc.stdout)
    if status is None:
        # fall back on the conventional exit codes
        status = {10: "sat", 20: "unsat"}.get(proc.returncode)
    if status is None:
        raise SolverError(f"unparsable solver output (exit {proc.returncode}): {proc.stdout[-300:]!r}")
    banner = next((c for c in comments if c), template)
    return SolveOutcome(status, lits if status == "sat" else None, solver=banner, log=comments)
