"""Transitions between same-colored positions of S at G-distance.

Positions are classified by parity, and a pair at distance ``g_i`` is a
transition labeled ``a`` (parity kept), ``b`` (even to odd) or ``c`` (odd to
even). Every transition lowers ``{m phi}`` by a label-specific amount, so a
chain of three transitions would lower it by more than 1, which cannot happen.
This suite checks all of that on a finite prefix of S.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from ..colorings import from_word
from ..detect import find_mono_diffseq
from ..diffsets import DiffSet
from ..numerics import QuadRat, frac_phi, seq_value
from ..words import beatty_witness, word_S_prefix
from .lemma32 import THRESHOLDS, drop_formula, drop_sup
from .report import Report

__all__ = ["m_of", "Transition", "transition", "label_paths", "check_chains"]

# offset of x = ceil(y/2) from floor(m phi), keyed by (y even, S(y))
_OFFSET = {(True, 0): 0, (False, 0): -1, (True, 1): 1, (False, 1): 0}


def m_of(y: int, bit: int) -> tuple[int, int]:
    """``(x, m)`` with ``x = ceil(y / 2)`` and m the unique integer tied to position y of S."""
    if y < 1:
        raise ValueError("positions start at 1")
    even = y % 2 == 0
    x = y // 2 if even else (y + 1) // 2
    z = x - _OFFSET[(even, bit)]
    w = beatty_witness(z)
    if w.m is None:
        raise ArithmeticError(f"position {y} with S={bit}: {z} is not a Beatty value")
    return x, w.m


@dataclass(frozen=True)
class Transition:
    label: str
    y1: int
    y2: int
    x1: int
    x2: int
    m1: int
    m2: int
    gap: int
    index: int  # gap == g_index
    drop: QuadRat


_G_INDEX = {seq_value("g", i): i for i in range(1, 40)}


def transition(y1: int, y2: int, bit: int) -> Transition:
    g = y2 - y1
    i = _G_INDEX[g]
    e1, e2 = y1 % 2 == 0, y2 % 2 == 0
    label = "a" if e1 == e2 else ("b" if e1 else "c")
    x1, m1 = m_of(y1, bit)
    x2, m2 = m_of(y2, bit)
    return Transition(label, y1, y2, x1, x2, m1, m2, g, i, frac_phi(m2) - frac_phi(m1))


def label_paths(length: int):
    """Label sequences realisable by the parity automaton, with their start state."""
    step = {"even": {"a": "even", "b": "odd"}, "odd": {"a": "odd", "c": "even"}}
    out = []
    for start in ("even", "odd"):
        for labels in product("abc", repeat=length):
            state = start
            for lab in labels:
                state = step[state].get(lab)
                if state is None:
                    break
            else:
                out.append((start, "".join(labels)))
    return out


def check_chains(N: int = 10_000) -> Report:
    if N < 10:
        raise ValueError("N must be at least 10")
    rep = Report("chains")
    S = word_S_prefix(N)
    bits = [0] + [int(ch) for ch in S]
    gaps = DiffSet("G").gaps_upto(N - 1)

    # every label path of length 3 drops by more than 1, using only the suprema
    for start, labels in label_paths(3):
        total = sum((drop_sup(lab) for lab in labels), QuadRat(0))
        rep.add(f"path {start}:{labels} sum of sups < -1", total < -1, total=float(total))
    rep.add("automaton forbids consecutive b", all("bb" not in p for _, p in label_paths(3)))

    outgoing: dict[int, list[Transition]] = {}
    counts = {"a": 0, "b": 0, "c": 0}
    bad = 0
    for y1 in range(1, N + 1):
        for g in gaps:
            y2 = y1 + g
            if y2 > N:
                break
            if bits[y1] != bits[y2]:
                continue
            if y1 % 2 == 1 and g == 1:
                # y1, y1 + 1 is the image of one symbol under 0->10, 1->01
                bad += 1
                rep.add("no monochromatic odd-even pair at distance 1", False, y1=y1)
                continue
            t = transition(y1, y2, bits[y1])
            counts[t.label] += 1
            expected = drop_formula(t.label, t.index)
            ok = (
                (t.gap % 2 == 0) == (t.label == "a")
                and (t.label != "c" or t.index > 1)
                and t.drop == expected
                and t.drop < THRESHOLDS[t.label]
            )
            if not ok:
                bad += 1
                rep.add(f"transition {t.label} {y1}->{y2}", False, drop=str(t.drop), expected=str(expected))
            outgoing.setdefault(y1, []).append(t)
    rep.add("per-label drop formulas and bounds hold", bad == 0, transitions=sum(counts.values()))

    two_chains = 0
    consecutive_b = 0
    three_chains = []
    for ts in outgoing.values():
        for t1 in ts:
            for t2 in outgoing.get(t1.y2, ()):
                two_chains += 1
                consecutive_b += t1.label == "b" and t2.label == "b"
                for t3 in outgoing.get(t2.y2, ()):
                    three_chains.append((t1, t2, t3))
    rep.add("no two consecutive b transitions", consecutive_b == 0, two_chains=two_chains)
    worst = [t1.drop + t2.drop + t3.drop for t1, t2, t3 in three_chains]
    rep.add("every 3-transition chain drops below -1", all(w < -1 for w in worst), chains=len(three_chains))
    rep.add("no 4-term chain in the prefix", not three_chains)
    hit = find_mono_diffseq(from_word("S", N), DiffSet("G"), 4)
    rep.add("detect agrees: no monochromatic 4-term G-diffsequence", hit is None and not three_chains, witness=hit)
    rep.summary.update(N=N, transitions=counts, two_chains=two_chains, three_chains=len(three_chains))
    return rep
