"""Fractional parts and floor parities of ``(f_n + eps) / sqrt 5``."""

from __future__ import annotations

from ..numerics import SQRT5, QuadRat, phi_power, seq_value
from .report import Report

__all__ = ["EPSILONS", "scaled_fib", "c_const", "tail_term", "EVEN_FLOOR_RESIDUES", "check_lemma33"]

EPSILONS = (0, 4, -4)

# n mod 12 for which floor((f_n + eps) / sqrt 5) is even, n >= 13
EVEN_FLOOR_RESIDUES = {
    0: {0, 1, 2, 3, 5, 10},
    4: {0, 2, 3, 9, 10},
    -4: {0, 1, 2, 5, 7, 10, 11},
}


def scaled_fib(n: int, eps: int) -> QuadRat:
    """``(f_n + eps) / (2 phi - 1)``; note ``2 phi - 1 = sqrt 5``."""
    return QuadRat(seq_value("fibonacci", n) + eps) / SQRT5


def c_const(n: int, eps: int) -> QuadRat:
    """Limit of the fractional part of :func:`scaled_fib` along ``n mod 4``."""
    if eps not in EPSILONS:
        raise ValueError("eps must be 0, 4 or -4")
    r = n % 4
    if r == 0:
        return QuadRat(4 - 5 * eps, 2 * eps, 10)
    if r == 1:
        return QuadRat(11, -4, 5) if eps == -4 else QuadRat(4 - 5 * eps, 4 * eps, 20)
    if r == 2:
        return QuadRat(6 - 5 * eps, 2 * eps, 10)
    return QuadRat(9, -4, 5) if eps == -4 else QuadRat(8 - 5 * eps, 2 * eps, 10)


def tail_term(n: int) -> QuadRat:
    """``2 (-phi)^(-n) / 5``."""
    return phi_power(-n) * (2 if n % 2 == 0 else -2) / 5


def check_lemma33(n_range: range = range(13, 201), eps_values=EPSILONS) -> Report:
    if min(n_range) < 13:
        raise ValueError("the identities are stated for n >= 13")
    rep = Report("lemma33")
    plus_sign_holds = 0
    for n in n_range:
        lucas_residue = seq_value("lucas", n) % 5
        for eps in eps_values:
            x = scaled_fib(n, eps)
            c = c_const(n, eps)
            frac = x.frac()
            t = tail_term(n)
            # c is the fractional part of l_n / 5 + eps / sqrt 5
            rep.add(f"n={n} eps={eps}: c matches Lucas residue", c == (QuadRat(lucas_residue, 0, 5) + eps / SQRT5).frac())
            rep.add(f"n={n} eps={eps}: frac = c - 2(-phi)^-n/5", frac == c - t, frac=float(frac), c=float(c))
            plus_sign_holds += frac == c + t
            rep.add(f"n={n} eps={eps}: |2(-phi)^-n/5| < 0.001", abs(t) < QuadRat(1, 0, 1000))
            even = x.floor() % 2 == 0
            rep.add(f"n={n} eps={eps}: floor parity", even == (n % 12 in EVEN_FLOOR_RESIDUES[eps]), floor=x.floor())
    rep.summary.update(n_min=min(n_range), n_max=max(n_range), with_plus_sign=plus_sign_holds)
    return rep
