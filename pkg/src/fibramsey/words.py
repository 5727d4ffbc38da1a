"""The infinite Fibonacci word and its images S and T.

Each word has two evaluators that are computed independently of each other:
a prefix generated by substitution, and a pointwise closed form built on
exact Beatty floors ``floor(m * phi)``. Positions are 1-based throughout.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .numerics import beatty_floor

__all__ = [
    "Morphism",
    "MU",
    "NU",
    "apply_morphism",
    "fib_word_prefix",
    "word_S_prefix",
    "word_T_prefix",
    "is_beatty",
    "fib_word_at",
    "word_S_at",
    "word_T_at",
    "BeattyWitness",
    "beatty_witness",
    "WORDS",
    "word_prefix",
    "word_at",
    "prefix_array",
    "write_prefix",
    "read_prefix",
]


@dataclass(frozen=True)
class Morphism:
    image_of_0: str
    image_of_1: str

    def __post_init__(self):
        for img in (self.image_of_0, self.image_of_1):
            if not img or set(img) - {"0", "1"}:
                raise ValueError(f"morphism image must be a nonempty bit string, got {img!r}")

    def __call__(self, w: str) -> str:
        return apply_morphism(self, w)


MU = Morphism("10", "01")
NU = Morphism("1", "00")


def apply_morphism(m: Morphism, w: str) -> str:
    return w.translate({ord("0"): m.image_of_0, ord("1"): m.image_of_1})


def fib_word_prefix(L: int) -> str:
    """First ``L`` symbols of the infinite Fibonacci word, via ``F_n = F_{n-1} F_{n-2}``."""
    if L < 1:
        raise ValueError("L must be positive")
    prev, cur = "0", "01"
    while len(cur) < L:
        prev, cur = cur, cur + prev
    return cur[:L]


def _image_prefix(m: Morphism, L: int) -> str:
    # images have length >= 1, so L source symbols always suffice
    return apply_morphism(m, fib_word_prefix(L))[:L]


def word_S_prefix(L: int) -> str:
    return _image_prefix(MU, L)


def word_T_prefix(L: int) -> str:
    return _image_prefix(NU, L)


# -- closed forms -----------------------------------------------------------


def _beatty_index(n: int) -> int:
    # the only m that can satisfy floor(m*phi) == n is floor((n+1)/phi)
    return beatty_floor(n + 1) - (n + 1)


def is_beatty(n: int) -> bool:
    """True iff ``n == floor(m * phi)`` for some positive integer m."""
    if n < 1:
        return False
    return beatty_floor(_beatty_index(n)) == n


def fib_word_at(n: int) -> int:
    if n < 1:
        raise ValueError("positions start at 1")
    return 0 if is_beatty(n) else 1


def word_S_at(n: int) -> int:
    if n < 1:
        raise ValueError("positions start at 1")
    if n % 2 == 0:
        return 0 if is_beatty(n // 2) else 1
    return 1 if is_beatty((n + 1) // 2) else 0


def _t_value(m: int) -> int:
    return 2 * beatty_floor(m) - m


def word_T_at(n: int) -> int:
    """1 iff ``n == 2 floor(m phi) - m`` for some m."""
    if n < 1:
        raise ValueError("positions start at 1")
    # 2 floor(m phi) - m lies in (m sqrt5 - 2, m sqrt5], so m sqrt5 is in [n, n + 2)
    lo = math.isqrt(n * n // 5)
    hi = math.isqrt((n + 2) * (n + 2) // 5)
    return int(any(_t_value(m) == n for m in range(max(lo, 1), hi + 1)))


@dataclass(frozen=True)
class BeattyWitness:
    """Either ``n == floor(m phi)``, or the neighbours ``n + 1`` and ``n - 1`` are."""

    n: int
    m: int | None = None
    m_next: int | None = None
    m_prev: int | None = None


def beatty_witness(n: int) -> BeattyWitness:
    if n < 1:
        raise ValueError("positions start at 1")
    if is_beatty(n):
        return BeattyWitness(n, m=_beatty_index(n))
    # only n >= 2 reaches here: 1 == floor(phi)
    m_next, m_prev = _beatty_index(n + 1), _beatty_index(n - 1)
    if beatty_floor(m_next) != n + 1 or beatty_floor(m_prev) != n - 1:
        raise ArithmeticError(f"neighbours of non-Beatty {n} are not both Beatty")
    return BeattyWitness(n, m_next=m_next, m_prev=m_prev)


# -- registry and bulk access ------------------------------------------------

WORDS = {
    "F": (fib_word_prefix, fib_word_at),
    "S": (word_S_prefix, word_S_at),
    "T": (word_T_prefix, word_T_at),
}


def _lookup(name: str):
    try:
        return WORDS[name.upper()]
    except KeyError:
        raise ValueError(f"unknown word {name!r}; expected F, S or T") from None


def word_prefix(name: str, L: int) -> str:
    return _lookup(name)[0](L)


def word_at(name: str, n: int) -> int:
    return _lookup(name)[1](n)


def prefix_array(name: str, L: int) -> np.ndarray:
    """Prefix as a uint8 array; index 0 holds position 1."""
    s = word_prefix(name, L)
    return np.frombuffer(s.encode("ascii"), dtype=np.uint8) - ord("0")


def write_prefix(name: str, L: int, path: str | Path, fmt: str = "text") -> None:
    """Write the length-``L`` prefix as ``0``/``1`` text or as packed bits.

    The binary form is ``numpy.packbits`` output (most significant bit first,
    last byte zero-padded); the length is not stored.
    """
    path = Path(path)
    if fmt == "text":
        path.write_text(word_prefix(name, L) + "\n")
    elif fmt == "binary":
        path.write_bytes(np.packbits(prefix_array(name, L)).tobytes())
    else:
        raise ValueError(f"unknown format {fmt!r}")


def read_prefix(path: str | Path, fmt: str = "text", length: int | None = None) -> str:
    path = Path(path)
    if fmt == "text":
        return path.read_text().strip()
    bits = np.unpackbits(np.frombuffer(path.read_bytes(), dtype=np.uint8))
    if length is not None:
        bits = bits[:length]
    return "".join("01"[b] for b in bits)
