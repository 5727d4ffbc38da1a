"""
Numbers from a SAT solver
=========================

The same numbers as a sequence of CNF instances: satisfiable exactly when an
avoiding coloring exists. Small instances run on the built-in DPLL; larger
ones need an external DIMACS solver, taken from ``FIBRAMSEY_SOLVER`` or the
python-sat shim in ``tests/solvers`` when python-sat is installed.
"""

import os
import sys
from pathlib import Path

from fibramsey import DiffSet
from fibramsey.satgen import compute_number, dimacs_text, encode

# one instance in DIMACS form
print(dimacs_text(encode(DiffSet("F"), 2, 2, 4)))

# built-in solver, no configuration needed
print("Δ(F,2;4) =", compute_number(DiffSet("F"), 2, 4).value)

cmd = os.environ.get("FIBRAMSEY_SOLVER")
if cmd is None:
    try:
        import pysat  # noqa: F401

        shim = Path(__file__).resolve().parents[1] / "tests" / "solvers" / "pysat_dimacs.py"
        cmd = f'"{sys.executable}" "{shim}" {{input}}'
    except ImportError:
        pass

if cmd is None:
    print("no external solver configured; skipping the larger instances")
else:
    for k, r in [(4, 3), (3, 4)]:
        res = compute_number(DiffSet("P"), k, r, solver_command=cmd)
        print(f"Δ(P,{k};{r}) = {res.value} via {res.meta['solver']} in {res.elapsed:.1f}s")
    res = compute_number(DiffSet("P"), 3, 4, strategy="bisect", solver_command=cmd)
    print("bisection agrees:", res.value)
