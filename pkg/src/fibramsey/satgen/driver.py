"""Computing Δ(D,k;r) or n(AP_D,k;r) by solving the encoding for increasing n."""

from __future__ import annotations

import time

from ..colorings import Coloring
from ..diffsets import DiffSet
from ..search import NumberResult
from .encoding import encode
from .solver import solve

__all__ = ["compute_number", "is_avoidable"]


def is_avoidable(D: DiffSet, k: int, r: int, n: int, mode: str = "diffseq",
                 solver_command: str | None = None, timeout: float | None = None):
    """Solve the instance for [n]; returns the :class:`SolveOutcome`."""
    return solve(encode(D, k, r, n, mode), D, solver_command, timeout)


def compute_number(D: DiffSet, k: int, r: int, mode: str = "diffseq", strategy: str = "linear",
                   n_start: int | None = None, n_cap: int = 10_000, solver_command: str | None = None,
                   timeout: float | None = None, total_timeout: float | None = None) -> NumberResult:
    """First n whose instance is unsatisfiable.

    ``strategy="linear"`` tries n_start, n_start + 1, ...; ``"bisect"`` doubles
    n until an unsat instance appears, then bisects. An undecided instance
    stops the run and the result carries the bracket ``bound < value <= upper``.
    Any n below k is colorable, so the default start is n = k.
    """
    if strategy not in ("linear", "bisect"):
        raise ValueError("strategy must be 'linear' or 'bisect'")
    t0 = time.monotonic()
    res = NumberResult(D.name, k, r, mode, engine="sat", meta={"schedule": strategy})
    lo = max((n_start or k) - 1, 0)  # colorable; the caller vouches for n_start - 1
    hi = None
    witnesses: dict[int, Coloring] = {}
    undecided = False

    def check(n: int) -> str:
        budget = timeout
        if total_timeout is not None:
            left = total_timeout - (time.monotonic() - t0)
            if left <= 0:
                return "unknown"
            budget = left if budget is None else min(budget, left)
        out = is_avoidable(D, k, r, n, mode, solver_command, budget)
        res.meta["solver"] = out.solver
        if out.status == "sat":
            witnesses[n] = out.coloring
        return out.status

    # ascent
    n = lo + 1
    while n <= n_cap:
        status = check(n)
        if status == "sat":
            lo = n
            n = n + 1 if strategy == "linear" else min(2 * n, n_cap)
            if n == lo:
                break
        elif status == "unsat":
            hi = n
            break
        else:
            undecided = True
            break
    # bisection inside (lo, hi)
    while not undecided and hi is not None and hi - lo > 1:
        mid = (lo + hi) // 2
        status = check(mid)
        if status == "sat":
            lo = mid
        elif status == "unsat":
            hi = mid
        else:
            undecided = True
    if hi is not None and hi == lo + 1:
        res.value = hi
    else:
        res.bound, res.upper = lo, hi
        if undecided:
            res.meta["timeout"] = True
    if lo in witnesses:
        res.witness = witnesses[lo]
    elif 1 <= lo < k:
        res.witness = Coloring([1] * lo, r=r)
    res.elapsed = time.monotonic() - t0
    return res
