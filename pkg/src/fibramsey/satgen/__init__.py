"""SAT encoding of "an r-coloring of [n] avoids the pattern", and solver plumbing."""

from .dimacs import DimacsError, dimacs_text, emit_dimacs, parse_dimacs
from .driver import compute_number, is_avoidable
from .dpll import MAX_BUILTIN_VARS, dpll
from .encoding import CnfInstance, ModelError, decode_model, encode, patterns, var
from .solver import SOLVER_ENV, EncodingBug, SolveOutcome, SolverError, parse_solver_output, solve

__all__ = [
    "CnfInstance",
    "DimacsError",
    "EncodingBug",
    "MAX_BUILTIN_VARS",
    "ModelError",
    "SOLVER_ENV",
    "SolveOutcome",
    "SolverError",
    "compute_number",
    "decode_model",
    "dimacs_text",
    "dpll",
    "emit_dimacs",
    "encode",
    "is_avoidable",
    "parse_dimacs",
    "parse_solver_output",
    "patterns",
    "solve",
    "var",
]
