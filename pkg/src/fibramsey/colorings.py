"""Colorings of [n] and the explicit constructions used as witnesses."""

from __future__ import annotations

from pathlib import Path

import numpy as np

from .words import prefix_array

__all__ = [
    "Coloring",
    "ColoringFormatError",
    "from_word",
    "from_bits",
    "lift_parity",
    "lucas_mod8",
    "MOD8_COLORS",
    "congruence_coloring",
    "parse_coloring",
    "emit_coloring",
    "read_coloring",
    "write_coloring",
]


class ColoringFormatError(ValueError):
    pass


class Coloring:
    """An r-coloring of [n], colors 1..r.

    ``colors`` is a read-only int array of length n where ``colors[i - 1]`` is
    the color of position i.
    """

    __slots__ = ("n", "r", "colors")

    def __init__(self, colors, r: int | None = None) -> None:
        arr = np.array(colors, dtype=np.int64).ravel()
        if arr.size < 1:
            raise ValueError("a coloring needs at least one position")
        lo, hi = int(arr.min()), int(arr.max())
        if r is None:
            r = hi
        if r < 1 or lo < 1 or hi > r:
            raise ValueError(f"colors must lie in 1..{r}, found range {lo}..{hi}")
        arr.setflags(write=False)
        self.n = int(arr.size)
        self.r = int(r)
        self.colors = arr

    def __call__(self, i: int) -> int:
        if not 1 <= i <= self.n:
            raise IndexError(f"position {i} outside [1, {self.n}]")
        return int(self.colors[i - 1])

    def __len__(self) -> int:
        return self.n

    def __eq__(self, other) -> bool:
        if not isinstance(other, Coloring):
            return NotImplemented
        return self.r == other.r and np.array_equal(self.colors, other.colors)

    def __repr__(self) -> str:
        head = " ".join(map(str, self.colors[:12]))
        return f"Coloring(n={self.n}, r={self.r}, [{head}{' ...' if self.n > 12 else ''}])"

    def restrict(self, n: int) -> Coloring:
        return Coloring(self.colors[:n], self.r)

    def positions(self, color: int) -> np.ndarray:
        """1-based positions carrying ``color``."""
        return np.flatnonzero(self.colors == color) + 1


def from_bits(bits, n: int | None = None) -> Coloring:
    arr = np.asarray(bits, dtype=np.int64)
    if n is not None:
        arr = arr[:n]
    return Coloring(arr + 1, r=2)


def from_word(word: str, n: int) -> Coloring:
    """Two-coloring ``i -> w(i) + 1`` from a word name (``F``, ``S``, ``T``)."""
    return from_bits(prefix_array(word, n))


def lift_parity(base: Coloring, n: int | None = None) -> Coloring:
    """Four-coloring of [n] pairing parity with the base color of ``ceil(i/2)``.

    Odd i gets the pair ``(1, base((i+1)/2))``, even i gets ``(2, base(i/2))``;
    pairs are numbered (1,1)=1, (1,2)=2, (2,1)=3, (2,2)=4. Needs a 2-coloring.
    """
    if base.r > 2:
        raise ValueError("lift_parity needs a 2-coloring")
    if n is None:
        n = 2 * base.n
    if (n + 1) // 2 > base.n:
        raise ValueError(f"base covers [{base.n}], need [{(n + 1) // 2}]")
    i = np.arange(1, n + 1)
    half = base.colors[(i + 1) // 2 - 1]
    parity = np.where(i % 2 == 1, 1, 2)
    return Coloring(2 * (parity - 1) + half, r=4)


MOD8_COLORS = np.array([4, 1, 2, 3, 2, 3, 4, 1])  # residue 0..7


def lucas_mod8(n: int) -> Coloring:
    """{1,7} -> 1, {2,4} -> 2, {3,5} -> 3, {0,6} -> 4 by residue mod 8."""
    return Coloring(MOD8_COLORS[np.arange(1, n + 1) % 8], r=4)


def congruence_coloring(m: int, n: int) -> Coloring:
    if m < 2:
        raise ValueError("modulus must be at least 2")
    return Coloring(np.arange(1, n + 1) % m + 1, r=m)


# -- witness files: "n r" then the n colors ----------------------------------


def emit_coloring(c: Coloring) -> str:
    return f"{c.n} {c.r}\n" + " ".join(map(str, c.colors.tolist())) + "\n"


def parse_coloring(text: str) -> Coloring:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if len(lines) != 2:
        raise ColoringFormatError(f"expected 2 non-empty lines, found {len(lines)}")
    try:
        n, r = (int(t) for t in lines[0].split())
        colors = [int(t) for t in lines[1].split()]
    except ValueError as exc:
        raise ColoringFormatError(f"malformed coloring file: {exc}") from None
    if n < 1 or r < 1:
        raise ColoringFormatError("n and r must be positive")
    if len(colors) != n:
        raise ColoringFormatError(f"header says n={n} but {len(colors)} colors given")
    bad = [c for c in colors if not 1 <= c <= r]
    if bad:
        raise ColoringFormatError(f"color {bad[0]} out of range 1..{r}")
    return Coloring(colors, r=r)


def write_coloring(c: Coloring, path: str | Path) -> None:
    Path(path).write_text(emit_coloring(c))


def read_coloring(path: str | Path) -> Coloring:
    return parse_coloring(Path(path).read_text())
