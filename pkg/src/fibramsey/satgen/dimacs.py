"""DIMACS CNF reading and writing."""

from __future__ import annotations

import io
from typing import TextIO

from .encoding import CnfInstance

__all__ = ["emit_dimacs", "dimacs_text", "parse_dimacs", "DimacsError"]


class DimacsError(ValueError):
    pass


def emit_dimacs(inst: CnfInstance, sink: TextIO) -> None:
    sink.write(f"c fibramsey D={inst.D} k={inst.k} r={inst.r} n={inst.n} mode={inst.mode}\n")
    sink.write(f"c positive={inst.n_positive} negative={inst.n_negative} optional={inst.n_optional}\n")
    sink.write(f"p cnf {inst.var_count} {inst.clause_count}\n")
    for clause in inst.clauses:
        sink.write(" ".join(map(str, clause)))
        sink.write(" 0\n")


def dimacs_text(inst: CnfInstance) -> str:
    buf = io.StringIO()
    emit_dimacs(inst, buf)
    return buf.getvalue()


def parse_dimacs(text: str) -> tuple[int, list[list[int]], list[str]]:
    """Return ``(var_count, clauses, comments)``; clauses may span lines."""
    nvars = nclauses = None
    comments, clauses, cur = [], [], []
    for lineno, line in enumerate(text.splitlines(), 1):
        s = line.strip()
        if not s:
            continue
        if s.startswith("c"):
            comments.append(s[1:].strip())
            continue
        if s.startswith("p"):
            parts = s.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise DimacsError(f"line {lineno}: bad header {s!r}")
            try:
                nvars, nclauses = int(parts[2]), int(parts[3])
            except ValueError:
                raise DimacsError(f"line {lineno}: bad header {s!r}") from None
            continue
        if nvars is None:
            raise DimacsError(f"line {lineno}: clause before header")
        for tok in s.split():
            try:
                lit = int(tok)
            except ValueError:
                raise DimacsError(f"line {lineno}: bad literal {tok!r}") from None
            if lit == 0:
                clauses.append(cur)
                cur = []
            else:
                if abs(lit) > nvars:
                    raise DimacsError(f"line {lineno}: literal {lit} exceeds {nvars} variables")
                cur.append(lit)
    if cur:
        raise DimacsError("last clause is not 0-terminated")
    if nvars is None:
        raise DimacsError("missing 'p cnf' header")
    if len(clauses) != nclauses:
        raise DimacsError(f"header declares {nclauses} clauses, found {len(clauses)}")
    return nvars, clauses, comments
