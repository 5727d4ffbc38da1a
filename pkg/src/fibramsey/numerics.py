"""Exact arithmetic in Q(sqrt 5) and the integer sequences built on it.

Every number of the form ``(a + b*sqrt(5)) / d`` is held as a :class:`QuadRat`
with arbitrary-precision integer parts, so that signs, floors and fractional
parts of golden-ratio expressions are decided without floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, total_ordering

__all__ = [
    "QuadRat",
    "PHI",
    "SQRT5",
    "SEQUENCES",
    "sequence_terms",
    "seq_value",
    "phi_power",
    "verify_closed_forms",
    "beatty_floor",
    "frac_phi",
]


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


@total_ordering
class QuadRat:
    """The exact number ``(a + b*sqrt(5)) / d``.

    Instances are immutable and always stored in lowest terms with ``d > 0``,
    so two values are equal exactly when their ``(a, b, d)`` triples are.
    """

    __slots__ = ("a", "b", "d")

    def __init__(self, a: int = 0, b: int = 0, d: int = 1) -> None:
        if d == 0:
            raise ZeroDivisionError("QuadRat denominator is zero")
        if d < 0:
            a, b, d = -a, -b, -d
        g = math.gcd(a, b, d)
        if g > 1:
            a, b, d = a // g, b // g, d // g
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "d", d)

    def __setattr__(self, name, value):
        raise AttributeError("QuadRat is immutable")

    @classmethod
    def coerce(cls, x: QuadRat | int | Fraction) -> QuadRat:
        if isinstance(x, QuadRat):
            return x
        if isinstance(x, int):
            return cls(x, 0, 1)
        if isinstance(x, Fraction):
            return cls(x.numerator, 0, x.denominator)
        raise TypeError(f"cannot convert {type(x).__name__} to QuadRat")

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        try:
            o = QuadRat.coerce(other)
        except TypeError:
            return NotImplemented
        return QuadRat(self.a * o.d + o.a * self.d, self.b * o.d + o.b * self.d, self.d * o.d)

    __radd__ = __add__

    def __neg__(self) -> QuadRat:
        return QuadRat(-self.a, -self.b, self.d)

    def __sub__(self, other):
        try:
            o = QuadRat.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            o = QuadRat.coerce(other)
        except TypeError:
            return NotImplemented
        return QuadRat(
            self.a * o.a + 5 * self.b * o.b,
            self.a * o.b + self.b * o.a,
            self.d * o.d,
        )

    __rmul__ = __mul__

    def conjugate(self) -> QuadRat:
        return QuadRat(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        """Field norm ``x * conj(x)``, a rational number."""
        return Fraction(self.a * self.a - 5 * self.b * self.b, self.d * self.d)

    def inverse(self) -> QuadRat:
        num = self.a * self.a - 5 * self.b * self.b
        if num == 0:
            raise ZeroDivisionError("QuadRat division by zero")
        # 1/x = d * conj / (a^2 - 5 b^2)
        return QuadRat(self.d * self.a, -self.d * self.b, num)

    def __truediv__(self, other):
        try:
            o = QuadRat.coerce(other)
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return QuadRat.coerce(other) * self.inverse()

    def __pow__(self, n: int) -> QuadRat:
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result, base = QuadRat(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- order --------------------------------------------------------------

    def sign(self) -> int:
        """Exact sign of the value: -1, 0 or +1."""
        sa, sb = _sign(self.a), _sign(self.b)
        if sa == 0 or sb == 0 or sa == sb:
            return sa or sb
        # opposite signs: compare a^2 with 5 b^2
        return sa * _sign(self.a * self.a - 5 * self.b * self.b)

    def __eq__(self, other) -> bool:
        try:
            o = QuadRat.coerce(other)
        except TypeError:
            return NotImplemented
        return (self.a, self.b, self.d) == (o.a, o.b, o.d)

    def __lt__(self, other) -> bool:
        try:
            o = QuadRat.coerce(other)
        except TypeError:
            return NotImplemented
        return (self - o).sign() < 0

    def __hash__(self) -> int:
        return hash((self.a, self.b, self.d))

    def __bool__(self) -> bool:
        return self.a != 0 or self.b != 0

    def __abs__(self) -> QuadRat:
        return -self if self.sign() < 0 else self

    # -- integer parts ------------------------------------------------------

    def is_rational(self) -> bool:
        return self.b == 0

    def is_integer(self) -> bool:
        return self.b == 0 and self.d == 1

    def __floor__(self) -> int:
        # floor(b*sqrt5) from the integer square root; sqrt5*b is irrational for b != 0
        if self.b >= 0:
            s = math.isqrt(5 * self.b * self.b)
        else:
            s = -math.isqrt(5 * self.b * self.b) - 1
        return (self.a + s) // self.d

    def floor(self) -> int:
        return math.floor(self)

    def ceil(self) -> int:
        f = math.floor(self)
        return f if self == f else f + 1

    def __ceil__(self) -> int:
        return self.ceil()

    def frac(self) -> QuadRat:
        """Fractional part ``x - floor(x)``, in ``[0, 1)``."""
        return self - math.floor(self)

    # -- conversion ---------------------------------------------------------

    def __float__(self) -> float:
        return (self.a + self.b * math.sqrt(5)) / self.d

    def to_decimal(self, digits: int = 50):
        """Decimal approximation with ``digits`` significant digits."""
        import decimal

        with decimal.localcontext() as ctx:
            ctx.prec = digits + 10
            val = (decimal.Decimal(self.a) + decimal.Decimal(self.b) * decimal.Decimal(5).sqrt()) / self.d
            ctx.prec = digits
            return +val

    def round(self, places: int) -> Fraction:
        """Round to ``places`` decimals, halves away from zero."""
        scale = 10**places
        y = abs(self) * scale
        q = math.floor(y + QuadRat(1, 0, 2))
        return Fraction(self.sign() * q, scale)

    def __repr__(self) -> str:
        return f"QuadRat({self.a}, {self.b}, {self.d})"

    def __str__(self) -> str:
        root = "√5" if abs(self.b) == 1 else f"{abs(self.b)}√5"
        if self.b == 0:
            num = str(self.a)
        elif self.a == 0:
            num = root if self.b > 0 else "-" + root
        else:
            num = f"{self.a}{'+' if self.b > 0 else '-'}{root}"
        if self.d == 1:
            return num
        if self.a != 0 and self.b != 0:
            num = f"({num})"
        return f"{num}/{self.d}"


PHI = QuadRat(1, 1, 2)
SQRT5 = QuadRat(0, 1, 1)


# -- integer sequences ------------------------------------------------------

# tag -> first index
SEQUENCES = {
    "fibonacci": 1,
    "lucas": 0,
    "perrin": 1,
    "g": 1,
}

_ALIASES = {"f": "fibonacci", "fib": "fibonacci", "l": "lucas", "p": "perrin"}


def _tag(tag: str) -> str:
    t = tag.lower()
    t = _ALIASES.get(t, t)
    if t not in SEQUENCES:
        raise ValueError(f"unknown sequence {tag!r}")
    return t


def _fib(n: int) -> int:
    """f_n with f_0 = 0, f_1 = 1, by fast doubling."""

    def pair(m: int) -> tuple[int, int]:
        if m == 0:
            return 0, 1
        a, b = pair(m >> 1)
        c = a * (2 * b - a)
        d = a * a + b * b
        return (d, c + d) if m & 1 else (c, d)

    return pair(n)[0]


def _lucas(n: int) -> int:
    return _fib(n - 1) + _fib(n + 1) if n > 0 else 2


@lru_cache(maxsize=4096)
def _perrin(n: int) -> int:
    a, b, c = 3, 0, 2  # p_1, p_2, p_3
    if n <= 3:
        return (a, b, c)[n - 1]
    for _ in range(n - 3):
        a, b, c = b, c, a + b
    return c


def seq_value(tag: str, n: int) -> int:
    """The ``n``-th term of a named sequence.

    Index origins: Fibonacci ``f_1 = f_2 = 1`` (``f_0 = 0`` is also accepted),
    Lucas ``l_0 = 2, l_1 = 1``, Perrin ``p_1 = 3, p_2 = 0, p_3 = 2`` and
    ``g_i = f_{3i} / 2`` from ``i = 1``.
    """
    t = _tag(tag)
    if not isinstance(n, int):
        raise TypeError("index must be an integer")
    lo = 0 if t == "fibonacci" else SEQUENCES[t]
    if n < lo:
        raise IndexError(f"{t} index {n} below origin {lo}")
    if t == "fibonacci":
        return _fib(n)
    if t == "lucas":
        return _lucas(n)
    if t == "g":
        return _fib(3 * n) // 2
    return _perrin(n)


def sequence_terms(tag: str, bound: int):
    """Yield ``(index, value)`` for the sequence until values stay above ``bound``."""
    t = _tag(tag)
    if t == "perrin":
        # not monotone at the start; three consecutive terms past the bound end it
        n, prev = 1, []
        while True:
            v = _perrin(n)
            prev = (prev + [v])[-3:]
            if len(prev) == 3 and min(prev) > bound:
                return
            yield n, v
            n += 1
    n = SEQUENCES[t]
    while True:
        v = seq_value(t, n)
        if v > bound and n > 2:
            return
        yield n, v
        n += 1


# -- golden ratio -----------------------------------------------------------


def phi_power(n: int) -> QuadRat:
    """Exact ``phi**n`` using ``phi**n = f_n * phi + f_{n-1}``.

    Negative exponents follow from ``phi**-n = (-1)**n (f_{n+1} - f_n * phi)``.
    """
    if n >= 0:
        fn, fn1 = _fib(n), (_fib(n - 1) if n >= 1 else 1)
        return PHI * fn + fn1
    m = -n
    s = -1 if m % 2 else 1
    return (QuadRat(_fib(m + 1)) - PHI * _fib(m)) * s


def verify_closed_forms(n_max: int) -> list[dict]:
    """Check the Binet forms of Fibonacci and Lucas numbers and the
    ``f_n / phi - f_{n-1}`` identity exactly for ``1 <= n <= n_max``.

    Returns one record per ``(identity, n)`` with a boolean ``ok``.
    """
    if n_max < 2:
        raise ValueError("n_max must be at least 2")
    rows = []
    for n in range(0, n_max + 1):
        p = phi_power(n)
        q = phi_power(-n) * (-1 if n % 2 else 1)  # (-phi)^-n
        if n >= 1:
            rows.append({"identity": "fibonacci_binet", "n": n, "ok": (p - q) / SQRT5 == seq_value("fibonacci", n)})
        rows.append({"identity": "lucas_binet", "n": n, "ok": p + q == seq_value("lucas", n)})
        if n >= 1:
            lhs = QuadRat(seq_value("fibonacci", n)) / PHI - seq_value("fibonacci", n - 1)
            rhs = phi_power(-n) * (1 if n % 2 else -1)
            rows.append({"identity": "fib_over_phi", "n": n, "ok": lhs == rhs})
    return rows


def beatty_floor(m: int) -> int:
    """``floor(m * phi)`` computed as ``(m + isqrt(5 m^2)) // 2``."""
    if m < 0:
        raise ValueError("m must be non-negative")
    return (m + math.isqrt(5 * m * m)) // 2


def frac_phi(m: int) -> QuadRat:
    """Fractional part ``{m * phi}`` as an exact value in ``(0, 1)``."""
    return PHI * m - beatty_floor(m)
