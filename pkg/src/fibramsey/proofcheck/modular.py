"""Residues of Lucas numbers behind the modular colorings."""

from __future__ import annotations

from itertools import product

from ..colorings import MOD8_COLORS
from .report import Report

__all__ = ["LUCAS_MOD8_CYCLE", "lucas_residues", "period", "check_modular_facts"]

LUCAS_MOD8_CYCLE = (2, 1, 3, 4, 7, 3, 2, 5, 7, 4, 3, 7)


def lucas_residues(modulus: int, terms: int) -> list[int]:
    """``l_0, ..., l_(terms-1)`` reduced mod ``modulus``."""
    out, a, b = [], 2 % modulus, 1 % modulus
    for _ in range(terms):
        out.append(a)
        a, b = b, (a + b) % modulus
    return out


def period(seq: list[int]) -> int:
    """Smallest p with seq[i] == seq[i + p] for every index in range."""
    for p in range(1, len(seq)):
        if all(seq[i] == seq[i + p] for i in range(len(seq) - p)):
            return p
    return len(seq)


def check_modular_facts(terms: int = 10_000) -> Report:
    rep = Report("modular")
    r8, r5, r10 = (lucas_residues(m, terms) for m in (8, 5, 10))
    rep.add("Lucas mod 8 period 12", period(r8) == 12, period=period(r8))
    rep.add("Lucas mod 8 cycle", tuple(r8[:12]) == LUCAS_MOD8_CYCLE, cycle=r8[:12])
    rep.add("Lucas mod 8 omits 0 and 6", not {0, 6} & set(r8), residues=sorted(set(r8)))
    rep.add("Lucas mod 5 period 4", period(r5) == 4, period=period(r5))
    rep.add("Lucas mod 5 never 0", set(r5) == {1, 2, 3, 4})
    rep.add("Lucas mod 10 period 12", period(r10) == 12, period=period(r10))

    # the colorings only see gaps mod 8 (resp. 5), so a residue brute force covers all of N
    gaps8 = set(r8)
    mono3 = [
        (x, a, b)
        for x, a, b in product(range(8), gaps8, gaps8)
        if MOD8_COLORS[x] == MOD8_COLORS[(x + a) % 8] == MOD8_COLORS[(x + a + b) % 8]
    ]
    rep.add("mod-8 coloring: no 3-term Lucas diffsequence over residues", not mono3, hits=mono3[:5])
    mono2 = [(x, a) for x in range(5) for a in set(r5) if x == (x + a) % 5]
    rep.add("mod-5 coloring: no 2-term Lucas diffsequence over residues", not mono2)
    rep.summary.update(terms=terms, mod8_cycle=r8[:12], mod5_cycle=r5[:4], mod10_cycle=r10[:12])
    return rep
