import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from fibramsey.numerics import beatty_floor
from fibramsey.words import (
    MU,
    NU,
    Morphism,
    apply_morphism,
    beatty_witness,
    fib_word_at,
    fib_word_prefix,
    is_beatty,
    prefix_array,
    read_prefix,
    word_at,
    word_prefix,
    word_S_at,
    word_T_at,
    write_prefix,
)


def test_known_prefixes():
    assert fib_word_prefix(12) == "010010100100"
    assert word_prefix("S", 10) == "1001101001"
    assert word_prefix("T", 10) == "1001100100"
    assert word_prefix("F", 1) == "0"


def test_morphisms():
    assert apply_morphism(MU, "01") == "1001"
    assert apply_morphism(NU, "01") == "100"
    assert MU("0") == "10"
    with pytest.raises(ValueError):
        Morphism("", "1")


def test_fixed_point_growth():
    # F_n = F_(n-1) F_(n-2)
    w = fib_word_prefix(89)
    assert w == fib_word_prefix(55) + fib_word_prefix(34)


@pytest.mark.parametrize("name", ["F", "S", "T"])
def test_closed_form_agrees(name):
    L = 20_000
    w = word_prefix(name, L)
    assert all(int(w[n - 1]) == word_at(name, n) for n in range(1, L + 1))


def test_T_ones_are_2floor_minus_m():
    L = 50_000
    T = prefix_array("T", L)
    ones = set(np.flatnonzero(T) + 1)
    expect = {2 * beatty_floor(m) - m for m in range(1, L) if 2 * beatty_floor(m) - m <= L}
    assert ones == expect


@given(st.integers(1, 10**15))
def test_pointwise_consistency(n):
    assert fib_word_at(n) == (0 if is_beatty(n) else 1)
    assert word_S_at(2 * n - 1) + word_S_at(2 * n) == 1
    assert word_T_at(n) in (0, 1)


def test_beatty_witness():
    w = beatty_witness(3)
    assert w.m == 2 and beatty_floor(w.m) == 3
    w = beatty_witness(2)
    assert w.m is None and w.m_prev == 1 and w.m_next == 2
    with pytest.raises(ValueError):
        beatty_witness(0)


@pytest.mark.parametrize("fmt", ["text", "binary"])
def test_prefix_round_trip(tmp_path, fmt):
    p = tmp_path / f"s.{fmt}"
    write_prefix("S", 1003, p, fmt=fmt)
    assert read_prefix(p, fmt, length=1003) == word_prefix("S", 1003)


def test_unknown_word():
    with pytest.raises(ValueError):
        word_prefix("Q", 3)
