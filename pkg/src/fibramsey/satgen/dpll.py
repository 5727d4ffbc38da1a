"""A small DPLL solver for tiny formulas, so tests need no external binary."""

from __future__ import annotations

__all__ = ["dpll", "MAX_BUILTIN_VARS"]

MAX_BUILTIN_VARS = 40


def dpll(nvars: int, clauses: list[list[int]]) -> list[int] | None:
    """Return a model as a list of literals for variables 1..nvars, or ``None``."""
    assign: dict[int, bool] = {}

    def value(lit: int):
        v = assign.get(abs(lit))
        if v is None:
            return None
        return v if lit > 0 else not v

    def propagate(trail: list[int]) -> bool:
        changed = True
        while changed:
            changed = False
            for clause in clauses:
                unassigned = None
                n_free = 0
                sat = False
                for lit in clause:
                    val = value(lit)
                    if val is True:
                        sat = True
                        break
                    if val is None:
                        n_free += 1
                        unassigned = lit
                if sat:
                    continue
                if n_free == 0:
                    return False
                if n_free == 1:
                    assign[abs(unassigned)] = unassigned > 0
                    trail.append(abs(unassigned))
                    changed = True
        return True

    def solve() -> bool:
        trail: list[int] = []
        if not propagate(trail):
            for v in trail:
                del assign[v]
            return False
        free = next((v for v in range(1, nvars + 1) if v not in assign), None)
        if free is None:
            return True
        for choice in (True, False):
            assign[free] = choice
            if solve():
                return True
            del assign[free]
        for v in trail:
            del assign[v]
        return False

    if not solve():
        return None
    return [v if assign.get(v, False) else -v for v in range(1, nvars + 1)]
