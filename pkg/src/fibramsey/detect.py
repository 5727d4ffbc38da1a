"""Search a coloring for monochromatic D-diffsequences and D-progressions.

Both scans are exhaustive: ``None`` means no such pattern exists. When one
exists, the lexicographically first position tuple is returned.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from typing import Iterable

import numpy as np

from .colorings import Coloring
from .diffsets import DiffSet

__all__ = ["Witness", "find_mono_diffseq", "find_mono_ap", "verify_witness"]


@dataclass(frozen=True)
class Witness:
    kind: str  # "diffseq" or "ap"
    positions: tuple[int, ...]
    color: int
    gaps: tuple[int, ...]

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def to_dict(self) -> dict:
        d = asdict(self)
        d["positions"] = list(self.positions)
        d["gaps"] = list(self.gaps)
        return d

    @classmethod
    def from_dict(cls, d: dict) -> Witness:
        return cls(d["kind"], tuple(d["positions"]), int(d["color"]), tuple(d["gaps"]))


def _color_mask(c: Coloring, colors: Iterable[int] | None) -> np.ndarray:
    if colors is None:
        return np.ones(c.n, dtype=bool)
    return np.isin(c.colors, list(colors))


def find_mono_diffseq(c: Coloring, D: DiffSet, k: int, colors: Iterable[int] | None = None) -> Witness | None:
    """First monochromatic k-term D-diffsequence, optionally only in ``colors``."""
    if k < 2:
        raise ValueError("k must be at least 2")
    a, n = c.colors, c.n
    mask = _color_mask(c, colors)
    gaps = D.gaps_upto(n - 1)
    same = {g: a[:-g] == a[g:] for g in gaps}
    # reach[j][i]: a monochromatic chain of j+1 terms starts at position i+1
    reach = [mask]
    for _ in range(k - 1):
        prev = reach[-1]
        cur = np.zeros(n, dtype=bool)
        for g, s in same.items():
            cur[:-g] |= s & prev[g:]
        cur &= mask
        reach.append(cur)
        if not cur.any():
            return None
    starts = np.flatnonzero(reach[k - 1])
    if starts.size == 0:
        return None
    x = int(starts[0])
    pos = [x]
    for j in range(k - 2, -1, -1):
        for g in gaps:
            y = x + g
            if y < n and a[y] == a[x] and reach[j][y]:
                x = y
                break
        else:  # pragma: no cover - reach[] guarantees a continuation
            raise AssertionError("inconsistent chain table")
        pos.append(x)
    positions = tuple(p + 1 for p in pos)
    return Witness("diffseq", positions, int(a[pos[0]]), tuple(np.diff(positions).tolist()))


def find_mono_ap(c: Coloring, D: DiffSet, k: int, colors: Iterable[int] | None = None) -> Witness | None:
    """First monochromatic k-term progression with gap in D."""
    if k < 2:
        raise ValueError("k must be at least 2")
    a, n = c.colors, c.n
    mask = _color_mask(c, colors)
    best: tuple[int, int] | None = None
    for g in D.gaps_upto((n - 1) // (k - 1)):
        span = (k - 1) * g
        m = n - span
        s = a[:-g] == a[g:]
        ok = mask[:m].copy()
        for t in range(k - 1):
            ok &= s[t * g : t * g + m]
        hits = np.flatnonzero(ok)
        if hits.size and (best is None or int(hits[0]) < best[0]):
            best = (int(hits[0]), g)
    if best is None:
        return None
    x, g = best
    positions = tuple(x + 1 + t * g for t in range(k))
    return Witness("ap", positions, int(a[x]), (g,) * (k - 1))


def verify_witness(c: Coloring, w: Witness, D: DiffSet, k: int | None = None) -> bool:
    """Re-check a witness against the coloring and gap set."""
    pos = w.positions
    if k is not None and len(pos) != k:
        return False
    if len(pos) < 2 or w.kind not in ("diffseq", "ap"):
        return False
    if not all(1 <= p <= c.n for p in pos):
        return False
    gaps = tuple(q - p for p, q in zip(pos, pos[1:]))
    if gaps != tuple(w.gaps) or any(g <= 0 or g not in D for g in gaps):
        return False
    if w.kind == "ap" and len(set(gaps)) != 1:
        return False
    return all(c(p) == w.color for p in pos)
