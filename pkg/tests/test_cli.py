import json
import subprocess
import sys

import pytest

from fibramsey.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("name,length,text", [("S", 10, "1001101001"), ("T", 10, "1001100100"), ("F", 1, "0")])
def test_word(capsys, name, length, text):
    code, out, _ = run(capsys, "word", name, "--len", str(length))
    assert code == 0 and out.strip() == text


def test_word_binary(tmp_path, capsys):
    from fibramsey.words import read_prefix, word_prefix

    p = tmp_path / "t.bin"
    assert run(capsys, "word", "T", "--len", "100", "--out", str(p), "--format", "binary")[0] == 0
    assert read_prefix(p, "binary", 100) == word_prefix("T", 100)


def test_verify_exit_codes(tmp_path, capsys):
    s = tmp_path / "s.txt"
    assert run(capsys, "color", "S", "--n", "1000", "--out", str(s))[0] == 0
    code, out, _ = run(capsys, "verify", str(s), "--D", "G", "--k", "4")
    assert code == 0 and json.loads(out) == {"found": False, "n": 1000, "r": 2, "D": "G", "k": 4, "mode": "diffseq"}

    ones = tmp_path / "ones.txt"
    ones.write_text("4 1\n1 1 1 1\n")
    code, out, _ = run(capsys, "verify", str(ones), "--D", "F", "--k", "3")
    assert code == 1
    assert json.loads(out) == {
        "found": True,
        "witness": {"kind": "diffseq", "positions": [1, 2, 3], "color": 1, "gaps": [1, 1]},
    }

    bad = tmp_path / "bad.txt"
    bad.write_text("4 1\n1 1 x\n")
    code, _, err = run(capsys, "verify", str(bad), "--D", "F", "--k", "3")
    assert code == 2 and "error" in err
    assert run(capsys, "verify", str(tmp_path / "missing"), "--D", "F", "--k", "3")[0] == 2
    assert run(capsys, "verify", str(s), "--D", "Q", "--k", "3")[0] == 2
    assert run(capsys, "verify", str(s), "--k", "3")[0] == 2
    assert run(capsys, "verify", str(s), "--D", "F")[0] == 2


def test_verify_custom_gaps(tmp_path, capsys):
    c = tmp_path / "c.txt"
    c.write_text("5 2\n1 2 1 2 1\n")
    gaps = tmp_path / "g.txt"
    gaps.write_text("2\n")
    assert run(capsys, "verify", str(c), "--D-file", str(gaps), "--k", "3")[0] == 1
    assert run(capsys, "verify", str(c), "--D", "1,3", "--k", "2")[0] == 0
    assert run(capsys, "verify", str(c), "--D", "2", "--k", "3", "--mode", "ap")[0] == 1


def test_color_kinds(tmp_path, capsys):
    for kind in ("F", "T", "lift-S", "lucas-mod8", "mod"):
        p = tmp_path / f"{kind}.txt"
        assert run(capsys, "color", kind, "--n", "64", "--out", str(p))[0] == 0
    code, _, _ = run(capsys, "verify", str(tmp_path / "lucas-mod8.txt"), "--D", "L", "--k", "3")
    assert code == 0


@pytest.mark.parametrize(
    "argv,value",
    [
        (["--D", "L", "--k", "3", "--r", "3"], 13),
        (["--D", "F", "--k", "2", "--r", "4"], 9),
        (["--D", "F", "--k", "3", "--r", "2", "--mode", "ap"], 17),
    ],
)
def test_number_exact(capsys, argv, value):
    code, out, _ = run(capsys, "number", *argv, "--engine", "exact")
    d = json.loads(out)
    assert code == 0 and d["value"] == value and d["engine"] == "exact"


def test_number_sat_builtin_and_witness(tmp_path, capsys, monkeypatch):
    monkeypatch.delenv("FIBRAMSEY_SOLVER", raising=False)
    w = tmp_path / "w.txt"
    code, out, _ = run(capsys, "number", "--D", "F", "--k", "2", "--r", "4", "--engine", "sat", "--witness-out", str(w))
    d = json.loads(out)
    assert code == 0 and d["value"] == 9 and d["solver"] == "builtin-dpll" and d["witness_file"] == str(w)
    assert w.read_text().startswith("8 4\n")
    # too large for the built-in solver and no solver configured
    assert run(capsys, "number", "--D", "P", "--k", "4", "--r", "3", "--engine", "sat")[0] == 2


def test_number_sat_external(capsys, solver_cmd):
    code, out, _ = run(
        capsys, "number", "--D", "P", "--k", "4", "--r", "3", "--engine", "sat", "--solver-cmd", solver_cmd
    )
    d = json.loads(out)
    assert code == 0 and d["value"] == 28 and d["engine"] == "sat"


def test_number_bound(capsys):
    code, out, _ = run(capsys, "number", "--D", "G", "--k", "4", "--r", "2", "--n-cap", "20")
    d = json.loads(out)
    assert code == 0 and d["bound"] == 20 and "value" not in d


def test_encode(capsys):
    code, out, _ = run(capsys, "encode", "--D", "F", "--k", "2", "--r", "2", "--n", "5")
    assert code == 0 and out.splitlines()[2] == "p cnf 10 28"


def test_greedy(tmp_path, capsys):
    code, out, _ = run(capsys, "greedy", "--D", "G", "--k", "3", "--r", "2", "--n", "100")
    assert code == 1 and json.loads(out)["stuck_at"] == 86
    p = tmp_path / "g.txt"
    code, out, _ = run(
        capsys, "greedy", "--D", "G", "--k", "3", "--r", "2", "--n", "1500",
        "--policy", "backtrack", "--window", "400", "--out", str(p),
    )
    d = json.loads(out)
    assert code == 0 and d["ok"] and d["verified"] and d["witness_file"] == str(p)


@pytest.mark.parametrize(
    "argv",
    [["lemma32", "--imax", "30"], ["thm2", "--N", "60"], ["modular"], ["chains", "--N", "500"], ["lemma33", "--nmax", "40"]],
)
def test_proofcheck(capsys, argv):
    code, out, _ = run(capsys, "proofcheck", *argv)
    assert code == 0 and "PASS" in out.splitlines()[0]


def test_proofcheck_tables_and_json(capsys):
    _, out, _ = run(capsys, "proofcheck", "thm2", "--N", "20")
    assert "-.382" in out and "1.103" in out
    code, out, _ = run(capsys, "proofcheck", "modular", "--json")
    assert code == 0 and json.loads(out)["ok"]


def test_proofcheck_failed_suite_exit(capsys, monkeypatch):
    from fibramsey import cli
    from fibramsey.proofcheck import Report

    def failing(_terms):
        rep = Report("modular")
        rep.add("deliberately false", False)
        return rep

    monkeypatch.setitem(cli.SUITES, "modular", failing)
    code, out, _ = run(capsys, "proofcheck", "modular")
    assert code == 1 and "FAIL" in out


def test_proofcheck_range_error(capsys):
    # the lemma33 identities are only claimed from n = 13
    assert run(capsys, "proofcheck", "lemma33", "--nmin", "5")[0] == 2


def test_usage_errors(capsys):
    assert run(capsys, "word")[0] == 2
    assert run(capsys, "nonsense")[0] == 2
    assert run(capsys, "word", "S", "--len", "-3")[0] == 2


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "fibramsey", "word", "S", "--len", "4"], capture_output=True, text=True)
    assert out.returncode == 0 and out.stdout.strip() == "1001"
