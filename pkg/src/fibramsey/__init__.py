"""Monochromatic diffsequences and progressions with Fibonacci-type gap sets.

Exact arithmetic in Q(sqrt 5) drives the word constructions and the finite
checks; colorings built from the words are verified by a vectorised detector,
and the numbers themselves come from backtracking or an external SAT solver.
"""

from .colorings import (
    Coloring,
    ColoringFormatError,
    congruence_coloring,
    from_bits,
    from_word,
    lift_parity,
    lucas_mod8,
    read_coloring,
    write_coloring,
)
from .detect import Witness, find_mono_ap, find_mono_diffseq, verify_witness
from .diffsets import DiffSet, enumerate_aps, enumerate_diffseqs, named_diffset
from .numerics import PHI, SQRT5, QuadRat, beatty_floor, frac_phi, phi_power, seq_value
from .search import NumberResult, avoiding_coloring, exact_number, greedy_color, lower_bound_from_witness
from .words import word_at, word_prefix

__version__ = "0.1.0"

__all__ = [
    "PHI",
    "SQRT5",
    "QuadRat",
    "beatty_floor",
    "frac_phi",
    "phi_power",
    "seq_value",
    "DiffSet",
    "named_diffset",
    "enumerate_diffseqs",
    "enumerate_aps",
    "word_prefix",
    "word_at",
    "Coloring",
    "ColoringFormatError",
    "from_bits",
    "from_word",
    "lift_parity",
    "lucas_mod8",
    "congruence_coloring",
    "read_coloring",
    "write_coloring",
    "Witness",
    "find_mono_diffseq",
    "find_mono_ap",
    "verify_witness",
    "NumberResult",
    "avoiding_coloring",
    "exact_number",
    "greedy_color",
    "lower_bound_from_witness",
]
