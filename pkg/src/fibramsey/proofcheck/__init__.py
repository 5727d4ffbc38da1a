"""Finite, exact verification of the analytic steps behind the avoidance results."""

from .chains import Transition, check_chains, label_paths, m_of, transition
from .lemma32 import THRESHOLDS, check_lemma32, drop_formula, drop_sup, excluded_formula
from .lemma33 import c_const, check_lemma33, scaled_fib
from .modular import check_modular_facts, lucas_residues
from .report import Check, Report
from .thm2 import PRINTED, FracDiffRow, check_thm2, class_constant, frac_diff, render3

SUITES = {
    "lemma32": check_lemma32,
    "chains": check_chains,
    "lemma33": check_lemma33,
    "thm2": check_thm2,
    "modular": check_modular_facts,
}

__all__ = [
    "SUITES",
    "Check",
    "Report",
    "Transition",
    "FracDiffRow",
    "THRESHOLDS",
    "PRINTED",
    "m_of",
    "transition",
    "label_paths",
    "drop_formula",
    "drop_sup",
    "excluded_formula",
    "c_const",
    "scaled_fib",
    "class_constant",
    "frac_diff",
    "render3",
    "lucas_residues",
    "check_lemma32",
    "check_chains",
    "check_lemma33",
    "check_thm2",
    "check_modular_facts",
]
