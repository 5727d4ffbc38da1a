"""Gap sets D and enumeration of D-diffsequences and D-progressions in [n]."""

from __future__ import annotations

import bisect
from pathlib import Path
from typing import Iterable, Iterator

from .numerics import sequence_terms

__all__ = ["DiffSet", "named_diffset", "gaps_upto", "enumerate_diffseqs", "enumerate_aps"]

_NAMED = {"F": "fibonacci", "G": "g", "L": "lucas", "P": "perrin"}


class DiffSet:
    """A set of positive gaps, either a named integer sequence or a finite list.

    Members are distinct: the repeated Fibonacci 1 and the zero Perrin term do
    not appear. For sequence-backed sets the member list grows on demand.
    """

    def __init__(self, source: str | Iterable[int], name: str | None = None) -> None:
        if isinstance(source, str):
            key = source.upper() if source.upper() in _NAMED else source
            if key not in _NAMED:
                raise ValueError(f"unknown difference set {source!r}; expected one of F, G, L, P")
            self.sequence: str | None = _NAMED[key]
            self.name = name or key
            self._values: list[int] = []
            self._bound = 0
        else:
            vals = sorted(set(int(v) for v in source))
            if vals and vals[0] <= 0:
                raise ValueError("gaps must be positive integers")
            self.sequence = None
            self.name = name or "custom"
            self._values = vals
            self._bound = float("inf")

    @classmethod
    def from_file(cls, path: str | Path) -> DiffSet:
        """Read one positive integer per line; blank lines and ``#`` comments are ignored."""
        vals = []
        for lineno, line in enumerate(Path(path).read_text().splitlines(), 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            try:
                v = int(line)
            except ValueError:
                raise ValueError(f"{path}:{lineno}: not an integer: {line!r}") from None
            if v <= 0:
                raise ValueError(f"{path}:{lineno}: gap must be positive")
            vals.append(v)
        return cls(vals, name=Path(path).stem)

    def _extend(self, bound: int) -> None:
        if bound <= self._bound:
            return
        # overshoot so repeated small extensions stay cheap
        target = max(bound, 2 * self._bound)
        vals = {v for _, v in sequence_terms(self.sequence, target) if 0 < v <= target}
        self._values = sorted(vals)
        self._bound = target

    def gaps_upto(self, bound: int) -> list[int]:
        if bound < 0:
            raise ValueError("bound must be non-negative")
        self._extend(bound)
        return self._values[: bisect.bisect_right(self._values, bound)]

    def __contains__(self, g: int) -> bool:
        if g <= 0:
            return False
        self._extend(g)
        i = bisect.bisect_left(self._values, g)
        return i < len(self._values) and self._values[i] == g

    def __repr__(self) -> str:
        return f"DiffSet({self.name!r})"


def named_diffset(name: str) -> DiffSet:
    return DiffSet(name)


def gaps_upto(D: DiffSet, bound: int) -> list[int]:
    return D.gaps_upto(bound)


def enumerate_diffseqs(D: DiffSet, k: int, n: int) -> Iterator[tuple[int, ...]]:
    """Yield every k-term D-diffsequence inside [n], in lexicographic order."""
    if k < 2:
        raise ValueError("k must be at least 2")
    gaps = D.gaps_upto(max(n - 1, 0))
    path: list[int] = []

    def extend(x: int) -> Iterator[tuple[int, ...]]:
        path.append(x)
        if len(path) == k:
            yield tuple(path)
        else:
            for g in gaps:
                if x + g > n:
                    break
                yield from extend(x + g)
        path.pop()

    for x in range(1, n + 1):
        yield from extend(x)


def enumerate_aps(D: DiffSet, k: int, n: int) -> Iterator[tuple[int, int]]:
    """Yield every ``(start, gap)`` with gap in D and the k-term progression in [n].

    Ordered by start, then gap, which is the lexicographic order of the
    progressions' position tuples.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    gaps = D.gaps_upto(max((n - 1) // (k - 1), 0))
    for a in range(1, n + 1):
        for g in gaps:
            if a + (k - 1) * g > n:
                break
            yield a, g
