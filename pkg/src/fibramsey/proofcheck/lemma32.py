"""Drops of ``{m phi}`` across one G-gap of a monochromatic pair in S.

Write ``z = floor(m phi)``. A gap ``g_i`` between two same-colored positions
of S moves z by ``g_i / 2`` (same parity), ``(g_i + 3) / 2`` (even to odd) or
``(g_i - 3) / 2`` (odd to even). Since ``(m2 - m1) phi - dz = {m2 phi} - {m1 phi}``
and the right side lies in (-1, 1), m2 - m1 is one of the two integers
nearest ``dz / phi``; this module enumerates both and keeps the admissible one.
"""

from __future__ import annotations

from fractions import Fraction

from ..numerics import PHI, QuadRat, phi_power, seq_value
from .report import Report

__all__ = [
    "THRESHOLDS",
    "LABEL_CASE",
    "z_shift",
    "drop_candidates",
    "drop_formula",
    "excluded_formula",
    "drop_sup",
    "check_lemma32",
]

# exact rational thresholds per transition label
THRESHOLDS = {"a": QuadRat(-38, 0, 100), "b": QuadRat(-28, 0, 100), "c": QuadRat(-52, 0, 100)}
LABEL_CASE = {"a": "i", "b": "ii", "c": "iii"}


def z_shift(label: str, g: int) -> int:
    if label == "a":
        if g % 2:
            raise ValueError("same-parity gap must be even")
        return g // 2
    if g % 2 == 0:
        raise ValueError("parity-changing gap must be odd")
    return (g + 3) // 2 if label == "b" else (g - 3) // 2


def drop_candidates(dz: int) -> list[tuple[int, QuadRat]]:
    """``(M, M phi - dz)`` for the two integers M nearest ``dz / phi``."""
    lo = (QuadRat(dz) / PHI).floor()
    return [(M, PHI * M - dz) for M in (lo, lo + 1)]


def drop_formula(label: str, i: int) -> QuadRat:
    t = phi_power(-3 * i + 1) / 4
    if label == "a":
        return t - PHI / 4
    if label == "b":
        return (PHI * 3 - 6) / 4 - t
    return (6 - PHI * 5) / 4 - t


def excluded_formula(label: str, i: int) -> QuadRat:
    t = phi_power(-3 * i + 1) / 4
    if label == "a":
        return PHI * (QuadRat(3, 0, 4) + phi_power(-3 * i) / 4)
    if label == "b":
        return (PHI * 7 - 6) / 4 - t
    return (6 - PHI) / 4 - t


def drop_sup(label: str) -> QuadRat:
    """Supremum of the drop over every admissible gap index."""
    if label == "a":
        return drop_formula("a", 2)
    if label == "b":
        return (PHI * 3 - 6) / 4
    return (6 - PHI * 5) / 4


def admissible_indices(label: str, i_max: int) -> range:
    if label == "a":
        return range(2, i_max + 1, 2)
    if label == "b":
        return range(1, i_max + 1, 2)
    return range(3, i_max + 1, 2)


def check_lemma32(i_max: int = 30) -> Report:
    if i_max < 2:
        raise ValueError("i_max must be at least 2")
    rep = Report("lemma32")
    for label in "abc":
        case = LABEL_CASE[label]
        thr = THRESHOLDS[label]
        sup = drop_sup(label)
        rep.add(f"{case}: sup bound below threshold", sup < thr, sup=float(sup), threshold=str(thr))
        for i in admissible_indices(label, i_max):
            g = seq_value("g", i)
            f_prev = seq_value("fibonacci", 3 * i - 1)
            rep.add(f"{case} i={i}: f_(3i-1) = 1 mod 4", f_prev % 4 == 1)
            rep.add(f"{case} i={i}: parity of g_i", (g % 2 == 0) == (label == "a"))
            dz = z_shift(label, g)
            cands = drop_candidates(dz)
            inside = [d for _, d in cands if abs(d) < 1]
            outside = [d for _, d in cands if not abs(d) < 1]
            value, other = drop_formula(label, i), excluded_formula(label, i)
            rep.add(f"{case} i={i}: unique admissible drop", inside == [value], found=[str(d) for d in inside])
            rep.add(f"{case} i={i}: excluded branch", outside == [other] and abs(other) > 1)
            if label == "a":
                rep.add(f"{case} i={i}: drop <= sup", value <= sup)
            else:
                rep.add(f"{case} i={i}: drop < sup", value < sup)
            rep.add(f"{case} i={i}: drop < {Fraction(thr.a, thr.d)}", value < thr, drop=round(float(value), 6))
    rep.summary["i_max"] = i_max
    rep.summary["sup"] = {lab: round(float(drop_sup(lab)), 6) for lab in "abc"}
    return rep
