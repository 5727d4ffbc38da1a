import json
import math

import pytest

from fibramsey.numerics import PHI, QuadRat, beatty_floor, phi_power, seq_value
from fibramsey.proofcheck import (
    PRINTED,
    SUITES,
    THRESHOLDS,
    c_const,
    check_chains,
    check_lemma32,
    check_lemma33,
    check_modular_facts,
    check_thm2,
    class_constant,
    drop_formula,
    frac_diff,
    label_paths,
    lucas_residues,
    m_of,
    render3,
)
from fibramsey.proofcheck.lemma32 import drop_candidates, z_shift
from fibramsey.proofcheck.lemma33 import scaled_fib, tail_term


class TestLemma32:
    def test_examples(self):
        assert (phi_power(-5) - PHI) / 4 < QuadRat(-38, 0, 100)
        assert drop_formula("a", 2) == (phi_power(-5) - PHI) / 4
        assert drop_formula("b", 1) == (PHI * 3 - 6) / 4 - phi_power(-2) / 4
        assert drop_formula("b", 1) < THRESHOLDS["b"]
        assert drop_formula("c", 3) < THRESHOLDS["c"]

    def test_candidates_against_floats(self):
        # the admissible drop matches a direct floating evaluation of frac(m2 phi) - frac(m1 phi)
        phi = (1 + math.sqrt(5)) / 2
        for label, i in [("a", 2), ("a", 4), ("b", 1), ("b", 3), ("c", 3), ("c", 5)]:
            dz = z_shift(label, seq_value("g", i))
            (M0, d0), (M1, d1) = drop_candidates(dz)
            assert M1 == M0 + 1
            assert math.isclose(float(d0), M0 * phi - dz, abs_tol=1e-9)
            assert sum(abs(d) < 1 for d in (d0, d1)) == 1

    def test_z_shift_parity(self):
        with pytest.raises(ValueError):
            z_shift("a", 17)
        with pytest.raises(ValueError):
            z_shift("b", 4)

    def test_suite(self):
        rep = check_lemma32(30)
        assert rep.ok, rep.text()
        assert len(rep.checks) > 200
        with pytest.raises(ValueError):
            check_lemma32(1)


class TestChains:
    def test_m_of_examples(self):
        assert m_of(2, 0) == (1, 1)
        assert m_of(1, 1) == (1, 1)
        assert m_of(4, 1) == (2, 1)
        with pytest.raises(ValueError):
            m_of(0, 0)

    def test_m_of_over_prefix(self):
        from fibramsey.words import word_S_prefix

        S = word_S_prefix(3000)
        for y in range(1, 3001):
            x, m = m_of(y, int(S[y - 1]))
            assert x == (y + 1) // 2
            assert abs(beatty_floor(m) - x) <= 1

    def test_automaton(self):
        paths = label_paths(2)
        assert ("even", "bc") in paths and ("odd", "cb") in paths
        assert all("bb" not in p and "cc" not in p for _, p in paths)

    @pytest.mark.parametrize("N", [50, 10_000])
    def test_suite(self, N):
        rep = check_chains(N)
        assert rep.ok, rep.text()
        assert rep.summary["three_chains"] == 0


class TestLemma33:
    def test_examples(self):
        x = scaled_fib(13, 0)
        assert x.floor() == 104 == math.isqrt(233 * 233 // 5)
        assert scaled_fib(16, 4).floor() % 2 == 1
        assert c_const(13, 0) == QuadRat(4, 0, 20)

    def test_sign_of_correction(self):
        # frac(233 / sqrt 5) sits just above 1/5, on the side of c - 2(-phi)^-13/5
        x = scaled_fib(13, 0)
        assert x.frac() == c_const(13, 0) - tail_term(13)
        assert x.frac() != c_const(13, 0) + tail_term(13)

    def test_suite(self):
        rep = check_lemma33()
        assert rep.ok, rep.text()
        assert rep.summary["n_max"] == 200
        with pytest.raises(ValueError):
            check_lemma33(range(12, 20))


class TestThm2:
    @pytest.mark.parametrize(
        "n,eps,text",
        [(4, 0, "-.382"), (7, 4, "-.674"), (5, -4, ".618"), (12, 0, "-.446"), (3, 0, "-1"), (3, -4, "1")],
    )
    def test_rows(self, n, eps, text):
        assert frac_diff(n, eps).rounded == text

    def test_all_printed_values(self):
        for eps, row in PRINTED.items():
            assert [frac_diff(n, eps).rounded for n in range(1, 13)] == row

    def test_render(self):
        assert render3(QuadRat(1, 0, 2000)) == ".001"
        assert render3(QuadRat(-1, 0, 2000)) == "-.001"
        assert render3(QuadRat(1090, 0, 1000)) == "1.090"

    def test_class_constant_example(self):
        d = frac_diff(20, 0).d
        assert abs(d - class_constant(20, 0)) < QuadRat(1, 0, 1000)
        assert math.isclose(float(class_constant(20, 0)), -1 / math.sqrt(5))

    def test_suite(self):
        rep = check_thm2(60)
        assert rep.ok, rep.text()
        assert rep.summary["table_values_matched"] == "36/36"
        assert rep.summary["n_with_short_3sum_offsets"] == [4]
        assert "eps = 4" in rep.tables


class TestModular:
    def test_residues(self):
        assert tuple(lucas_residues(8, 12)) == (2, 1, 3, 4, 7, 3, 2, 5, 7, 4, 3, 7)
        assert set(lucas_residues(5, 1000)) == {1, 2, 3, 4}

    def test_suite(self):
        rep = check_modular_facts()
        assert rep.ok, rep.text()


def test_report_serialisation():
    rep = SUITES["modular"](100)
    d = json.loads(rep.to_json())
    assert d["suite"] == "modular" and d["ok"] and d["n_failed"] == 0
    rep.add("forced failure", False, value=QuadRat(1, 1, 2))
    d = json.loads(rep.to_json())
    assert not d["ok"] and d["failures"][0]["value"] == "(1+√5)/2"
    assert "FAILED forced failure" in rep.text()
