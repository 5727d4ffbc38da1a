"""Fractional differences along a monochromatic Fibonacci-gap progression in T.

For a common difference ``f_n`` (shifted by ``eps`` in {-4, 0, 4} when the
terms are moved onto ones of T), consecutive indices ``m_i`` differ by the
neighbour of ``(f_n + eps)/sqrt 5`` whose parity matches ``f_n``, and the
difference ``d = {m_(i+1) phi} - {m_i phi}`` is determined exactly by n and eps.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from ..numerics import SQRT5, QuadRat, seq_value
from .lemma33 import EPSILONS, scaled_fib
from .report import Report

__all__ = [
    "FracDiffRow",
    "frac_diff",
    "render3",
    "PRINTED",
    "class_constant",
    "positive_expected",
    "eps_sequences",
    "offset_eps_sequences",
    "table_text",
    "check_thm2",
]

HALF_SQRT5 = SQRT5 / 2

# frozen reference renderings for n = 1..12
PRINTED = {
    0: [".618", ".618", "-1", "-.382", ".854", ".472", "-.910", "-.438", ".889", ".451", "-.897", "-.446"],
    4: [".854", ".854", "-.764", "-.146", "1.090", ".708", "-.674", "-.202", "-1.111", ".687", "-.661", "-.210"],
    -4: [".382", ".382", "1", "-.618", ".618", ".236", "1.090", "-.674", ".652", ".215", "1.103", "-.682"],
}


@dataclass(frozen=True)
class FracDiffRow:
    n: int
    eps: int
    shifted: int  # f_n + eps
    step: int  # m_(i+1) - m_i
    branch: str  # "floor" or "ceil"
    d: QuadRat

    @property
    def rounded(self) -> str:
        return render3(self.d)


def frac_diff(n: int, eps: int = 0) -> FracDiffRow:
    if n < 1 or eps not in EPSILONS:
        raise ValueError("need n >= 1 and eps in {0, 4, -4}")
    f = seq_value("fibonacci", n)
    x = scaled_fib(n, eps)
    lo = x.floor()
    fr = x - lo
    if (lo - f) % 2 == 0:
        return FracDiffRow(n, eps, f + eps, lo, "floor", -HALF_SQRT5 * fr)
    return FracDiffRow(n, eps, f + eps, lo + 1, "ceil", HALF_SQRT5 * (1 - fr))


def render3(q: QuadRat) -> str:
    """Three decimals, halves away from zero, no leading zero; exact +-1 as ``1``/``-1``."""
    if q == 1 or q == -1:
        return str(q.a)
    v = q.round(3)
    s = f"{abs(v.numerator) // v.denominator}.{(abs(v.numerator) * 1000 // v.denominator) % 1000:03d}"
    if s.startswith("0."):
        s = s[1:]
    return "-" + s if v < 0 else s


def class_constant(n: int, eps: int) -> QuadRat:
    """Value approached by ``frac_diff(n, eps).d`` for large n in each class mod 4."""
    r5 = 1 / SQRT5
    table = {
        0: [-r5, 2 * r5, r5, -2 * r5],
        4: [2 * (2 - SQRT5) * r5, 2 * (1 - SQRT5) * r5, 2 * (3 - SQRT5) * r5, (3 - 2 * SQRT5) * r5],
        -4: [-2 * (3 - SQRT5) * r5, (-3 + 2 * SQRT5) * r5, -2 * (2 - SQRT5) * r5, -2 * (1 - SQRT5) * r5],
    }
    return table[eps][n % 4]


def positive_expected(n: int, eps: int) -> bool:
    r = n % 4
    if eps == 0:
        return r in (1, 2)
    if eps == 4:
        return r == 2 or n == 5
    return r != 0


def impossible_case(n: int, eps: int) -> bool:
    return (eps == 4 and n % 4 == 1) or (eps == -4 and n % 4 == 3)


def eps_sequences(length: int):
    """Sequences where a nonzero eps is followed by 0 or by the opposite sign."""
    for seq in product(EPSILONS, repeat=length):
        if all(a == 0 or b in (0, -a) for a, b in zip(seq, seq[1:])):
            yield seq


def offset_eps_sequences(length: int):
    """eps sequences arising from offsets s_i in {-2, +2}: eps_i = s_(i+1) - s_i."""
    seen = set()
    for offs in product((-2, 2), repeat=length + 1):
        seq = tuple(b - a for a, b in zip(offs, offs[1:]))
        if seq not in seen:
            seen.add(seq)
            yield seq


def table_text(eps: int, n_max: int = 12) -> str:
    head = "f_n" if eps == 0 else f"f_n{eps:+d}"
    lines = [f"{'n':>4} | {head:>6} | d", "-----+--------+--------"]
    for n in range(1, n_max + 1):
        row = frac_diff(n, eps)
        lines.append(f"{n:>4} | {row.shifted:>6} | {row.rounded}")
    return "\n".join(lines)


def check_thm2(N: int = 60) -> Report:
    if N < 13:
        raise ValueError("N must be at least 13")
    rep = Report("thm2")
    rows = {(n, e): frac_diff(n, e) for n in range(1, N + 1) for e in EPSILONS}
    tol = QuadRat(1, 0, 1000)
    third = QuadRat(1, 0, 3)

    matched = 0
    for e in EPSILONS:
        for n, printed in enumerate(PRINTED[e], start=1):
            got = rows[n, e].rounded
            matched += got == printed
            rep.add(f"table eps={e} n={n}", got == printed, got=got, printed=printed)
        rep.tables[f"eps = {e}"] = table_text(e)

    max_dev = Fraction(0)
    for n in range(13, N + 1):
        for e in EPSILONS:
            dev = abs(rows[n, e].d - class_constant(n, e))
            max_dev = max(max_dev, Fraction(float(dev)))
            rep.add(f"class n={n} eps={e} within 0.001", dev < tol)
            if impossible_case(n, e):
                rep.add(f"impossible n={n} eps={e}: |d| >= 1", abs(rows[n, e].d) >= 1)

    # f_1 = f_2, so n = 1 is the n = 2 row; residue-class claims start at n = 2
    for n in range(2, N + 1):
        rep.add(f"|d| > 1/3 at n={n} eps=0", abs(rows[n, 0].d) > third)
        for e in EPSILONS:
            rep.add(f"sign n={n} eps={e}", (rows[n, e].d.sign() > 0) == positive_expected(n, e))
    rep.add("|d| > 1/3 at n=1 eps=0", abs(rows[1, 0].d) > third)

    four_fail, three_fail, three_fail_offsets = [], [], set()
    for n in range(1, N + 1):
        d = {e: rows[n, e].d for e in EPSILONS}
        usable = {e for e in EPSILONS if abs(d[e]) < 1}
        for seq in eps_sequences(4):
            if not set(seq) <= usable:
                continue  # some |d_i| >= 1 already gives the contradiction
            if abs(sum((d[e] for e in seq), QuadRat(0))) < 1:
                four_fail.append((n, seq))
            if abs(d[seq[0]] + d[seq[1]] + d[seq[2]]) < 1:
                three_fail.append((n, seq[:3]))
        for seq in offset_eps_sequences(3):
            if set(seq) <= usable and abs(sum((d[e] for e in seq), QuadRat(0))) < 1:
                three_fail_offsets.add(n)
    rep.add("all admissible 4-sums have |d1+d2+d3+d4| >= 1", not four_fail, failures=four_fail[:10])
    rep.add("3-sums from eps offsets reach 1 unless n = 4", three_fail_offsets <= {4}, n=sorted(three_fail_offsets))
    rep.add("n = 4 needs the fourth term", 4 in three_fail_offsets)
    rep.summary.update(
        N=N,
        table_values_matched=f"{matched}/{sum(len(v) for v in PRINTED.values())}",
        max_class_deviation=float(max_dev),
        n_with_short_3sum_pairwise_rule=sorted({n for n, _ in three_fail}),
        n_with_short_3sum_offsets=sorted(three_fail_offsets),
    )
    return rep
