"""Exact values of Δ(D,k;r) and n(AP_D,k;r) by backtracking, and greedy lower bounds.

The engine colors positions 1, 2, ... in order, trying colors in ascending
order. A color is blocked at position j as soon as some earlier positions
would complete a monochromatic k-term pattern ending at j, so every partial
coloring on the stack is pattern-free. With lookahead enabled the search
also backtracks when some later position has every color blocked.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from typing import Any

from .colorings import Coloring, write_coloring
from .detect import find_mono_ap, find_mono_diffseq
from .diffsets import DiffSet

__all__ = [
    "NumberResult",
    "GreedyResult",
    "PatternFound",
    "avoiding_coloring",
    "exact_number",
    "greedy_color",
    "lower_bound_from_witness",
    "find_pattern",
]

MODES = ("diffseq", "ap")


class PatternFound(ValueError):
    """A coloring offered as a lower-bound witness contains the forbidden pattern."""


def find_pattern(c: Coloring, D: DiffSet, k: int, mode: str = "diffseq"):
    if mode == "diffseq":
        return find_mono_diffseq(c, D, k)
    if mode == "ap":
        return find_mono_ap(c, D, k)
    raise ValueError(f"mode must be one of {MODES}")


@dataclass
class NumberResult:
    """Outcome of a number computation.

    Exactly one of ``value`` (the number itself) and ``bound`` (the number
    exceeds it) is set, unless a timeout left only a bracket. ``upper`` is
    ``None`` when no unsatisfiable instance has been seen.
    """

    D: str
    k: int
    r: int
    mode: str
    value: int | None = None
    bound: int | None = None
    upper: int | None = None
    witness: Coloring | None = None
    witness_file: str | None = None
    elapsed: float = 0.0
    engine: str = "exact"
    meta: dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict:
        d = {"D": self.D, "k": self.k, "r": self.r, "mode": self.mode, "engine": self.engine}
        if self.value is not None:
            d["value"] = self.value
        else:
            d["bound"] = self.bound
            if self.upper is not None:
                d["upper"] = self.upper
        d["witness_file"] = self.witness_file
        d["elapsed"] = round(self.elapsed, 3)
        d.update(self.meta)
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def save_witness(self, path) -> None:
        if self.witness is None:
            raise ValueError("no witness to save")
        write_coloring(self.witness, path)
        self.witness_file = str(path)


class _Backtracker:
    """Depth-first search over pattern-free colorings of [n]."""

    def __init__(self, n: int, gaps: list[int], k: int, r: int, mode: str,
                 lookahead: bool = True, symmetry: str = "first") -> None:
        if mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}")
        if symmetry not in ("first", "full", "none"):
            raise ValueError("symmetry must be 'first', 'full' or 'none'")
        self.n, self.k, self.r, self.mode = n, k, r, mode
        self.gaps = [g for g in gaps if g < n] if mode == "diffseq" else [g for g in gaps if (k - 1) * g < n]
        self.lookahead = lookahead
        self.symmetry = symmetry
        self.nodes = 0

    def run(self, window: int | None = None, deadline: float | None = None):
        """Return ``(colors, stuck)``.

        ``colors`` is a complete 1-based color list or ``None``. With a
        ``window`` the search never backtracks more than that many positions
        below the furthest position reached; ``stuck`` is then the position
        that could not be colored.
        """
        n, k, r, mode, gaps = self.n, self.k, self.r, self.mode, self.gaps
        color = [0] * (n + 2)
        chain = [0] * (n + 2)
        maxc = [0] * (n + 2)
        block = [[0] * r for _ in range(n + 2)]
        touched: list[list[int]] = [[] for _ in range(n + 2)]
        nextc = [0] * (n + 2)
        lookahead = self.lookahead
        furthest = 0
        i = 1
        while True:
            if i > n:
                return color[1 : n + 1], None
            if i < 1 or (window is not None and i < furthest - window):
                return None, furthest
            if deadline is not None and (self.nodes & 0x3FFF) == 0 and time.monotonic() > deadline:
                raise TimeoutError
            # undo whatever is currently placed at i
            if color[i]:
                c0 = color[i] - 1
                for j in touched[i]:
                    block[j][c0] -= 1
                touched[i] = []
                color[i] = 0
            if self.symmetry == "none":
                lim = r
            elif i == 1:
                lim = 1
            elif self.symmetry == "full":
                lim = min(r, maxc[i - 1] + 1)
            else:
                lim = r
            c = nextc[i]
            bi = block[i]
            placed = False
            while c < lim:
                if bi[c]:
                    c += 1
                    continue
                self.nodes += 1
                col = c + 1
                ext: list[int] = []
                if mode == "diffseq":
                    best = 0
                    for g in gaps:
                        j = i - g
                        if j < 1:
                            break
                        if color[j] == col and chain[j] > best:
                            best = chain[j]
                    length = best + 1
                    if length == k - 1:
                        ext = [i + g for g in gaps if i + g <= n]
                else:
                    length = 0
                    for g in gaps:
                        if i + g > n:
                            break
                        if i - (k - 2) * g < 1:
                            continue
                        if all(color[i - t * g] == col for t in range(1, k - 1)):
                            ext.append(i + g)
                wiped = False
                for j in ext:
                    b = block[j]
                    b[c] += 1
                    if lookahead and b[c] == 1 and all(b):
                        wiped = True
                if wiped:
                    for j in ext:
                        block[j][c] -= 1
                    c += 1
                    continue
                color[i] = col
                chain[i] = length
                maxc[i] = max(maxc[i - 1], col)
                touched[i] = ext
                nextc[i] = c + 1
                placed = True
                break
            if placed:
                i += 1
                if i > furthest:
                    furthest = i
                nextc[i] = 0
            else:
                nextc[i] = 0
                i -= 1


def _gaps_for(D: DiffSet, n: int) -> list[int]:
    return D.gaps_upto(max(n - 1, 0))


def avoiding_coloring(D: DiffSet, k: int, r: int, n: int, mode: str = "diffseq",
                      symmetry: str = "first", deadline: float | None = None) -> Coloring | None:
    """An r-coloring of [n] with no monochromatic k-term pattern, or ``None`` if none exists."""
    bt = _Backtracker(n, _gaps_for(D, n), k, r, mode, lookahead=True, symmetry=symmetry)
    colors, _ = bt.run(deadline=deadline)
    return None if colors is None else Coloring(colors, r=r)


def exact_number(D: DiffSet, k: int, r: int, mode: str = "diffseq", n_cap: int = 100,
                 symmetry: str = "first", n_start: int = 1, time_limit: float | None = None) -> NumberResult:
    """Least n <= n_cap such that every r-coloring of [n] has a monochromatic pattern.

    Ascends n from ``n_start`` and stops at the first n without an avoiding
    coloring; otherwise reports the number exceeds ``n_cap`` and returns a
    witness coloring of [n_cap].
    """
    if k < 2 or r < 1 or n_cap < 1:
        raise ValueError("need k >= 2, r >= 1, n_cap >= 1")
    t0 = time.monotonic()
    deadline = None if time_limit is None else t0 + time_limit
    res = NumberResult(D.name, k, r, mode, engine="exact", meta={"symmetry": symmetry, "schedule": "linear"})
    last: Coloring | None = None
    n = max(1, n_start)
    while n <= n_cap:
        # a witness for [n-1] may already extend; the search starts fresh regardless
        try:
            c = avoiding_coloring(D, k, r, n, mode, symmetry, deadline)
        except TimeoutError:
            res.bound = (n - 1) if last is not None else None
            res.witness = last
            res.meta["timeout"] = True
            break
        if c is None:
            res.value = n
            res.witness = last
            break
        if find_pattern(c, D, k, mode) is not None:
            raise AssertionError(f"search produced an invalid coloring at n={n}")
        last = c
        n += 1
    else:
        res.bound = n_cap
        res.witness = last
    res.elapsed = time.monotonic() - t0
    return res


@dataclass
class GreedyResult:
    coloring: Coloring | None
    stuck_at: int | None
    policy: str
    window: int
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return self.coloring is not None


def greedy_color(D: DiffSet, k: int, r: int, N: int, policy: str = "first-fit",
                 mode: str = "diffseq", window: int = 30) -> GreedyResult:
    """Color 1..N greedily, each position taking its lowest admissible color.

    ``policy="first-fit"`` never revisits a position. ``policy="backtrack"``
    may recolor up to ``window`` positions behind the furthest one reached
    and looks ahead for positions left without any color.
    """
    if N < 1:
        raise ValueError("N must be positive")
    t0 = time.monotonic()
    gaps = _gaps_for(D, N)
    if policy == "first-fit":
        bt = _Backtracker(N, gaps, k, r, mode, lookahead=False, symmetry="none")
        colors, stuck = bt.run(window=0)
        w = 0
    elif policy == "backtrack":
        bt = _Backtracker(N, gaps, k, r, mode, lookahead=True, symmetry="none")
        colors, stuck = bt.run(window=window)
        w = window
    else:
        raise ValueError("policy must be 'first-fit' or 'backtrack'")
    c = None if colors is None else Coloring(colors, r=r)
    return GreedyResult(c, stuck, policy, w, time.monotonic() - t0)


def lower_bound_from_witness(w: Coloring, D: DiffSet, k: int, mode: str = "diffseq") -> int:
    """Certify that the number exceeds ``w.n``; raise :class:`PatternFound` otherwise."""
    hit = find_pattern(w, D, k, mode)
    if hit is not None:
        raise PatternFound(f"coloring contains {hit}")
    return w.n
