import json
import subprocess
import sys
from pathlib import Path

import pytest

from necklace_sandpile.cli import main
from necklace_sandpile.golden import A_9
from necklace_sandpile.zlinalg import format_matrix, parse_matrix

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("argv,golden", [
    (["dump", "matrix", "-n", "9"], "a9.txt"),
    (["dump", "matrix", "-n", "9", "--shifted"], "a9_shifted.txt"),
    (["dump", "map", "--golomb", "-n", "4"], "golomb_map_4.tsv"),
    (["dump", "necklaces", "-n", "5", "-p", "2"], "necklaces_2_5.txt"),
    (["table", "golomb"], "table_golomb.tsv"),
    (["orbits", "-n", "6", "--averaging", "--flip-extended"], "orbits_6.txt"),
    (["polys", "-n", "4"], "polys_2_4.tsv"),
])
def test_golden_outputs(capsys, argv, golden):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert out == (GOLDEN / golden).read_text()


def test_matrix_dump_is_the_reference_matrix(capsys):
    _, out, _ = run(capsys, "dump", "matrix", "-n", "9")
    assert parse_matrix(out) == A_9
    assert out.rstrip("\n") == format_matrix(A_9).rstrip("\n")


def test_map_lines(capsys):
    code, out, _ = run(capsys, "dump", "map", "--golomb", "-n", "4")
    assert code == 0 and len(out.splitlines()) == 3
    code, out, _ = run(capsys, "map", "-n", "4", "--poly", "x^4+x^3+1")
    assert code == 0 and all("\t" in line for line in out.splitlines())
    code, _, err = run(capsys, "map", "-n", "4", "--poly", "x^4+x+1")
    assert code == 2 and "not a normal" in err


def test_table_rows(capsys):
    code, out, _ = run(capsys, "table", "reutenauer", "--n-min", "13", "--n-max", "13", "--golden")
    assert code == 0
    assert out == "13\t630\t315\tZ_315\t315+315\tpass\n"
    code, out, _ = run(capsys, "table", "golomb", "--n-min", "7", "--n-max", "7")
    assert out.split("\t")[1:4] == ["18", "18", "Z_18"]
    code, out, _ = run(capsys, "table", "sandpile", "--n-min", "2", "--n-max", "2", "--golden")
    assert code == 0 and "Z_1" in out


def test_table_cap_gives_skip(capsys):
    code, out, _ = run(capsys, "--max-group-order", "10", "table", "reutenauer", "--n-min", "8", "--n-max", "9")
    assert code == 0
    assert out.splitlines() == ["8\tskip", "9\tskip"]


def test_verify_exit_codes(capsys):
    code, out, _ = run(capsys, "verify", "lemma-odd", "--n-min", "21", "--n-max", "21")
    assert code == 0
    assert "PASS" in out and "Z_7⊕Z_63⊕Z_63  vs  Z_7⊕Z_63⊕Z_63" in out
    code, out, _ = run(capsys, "verify", "chp", "-p", "3", "--format", "json")
    assert code == 0
    assert [r["status"] for r in json.loads(out)] == ["pass"] * 4


def test_verification_failure_exit_code(capsys, monkeypatch):
    import necklace_sandpile.verify as verify

    monkeypatch.setitem(verify._DISPATCH, "lemma-odd",
                        lambda p, n, m: verify.VerificationResult("lemma-odd", {"n": n}, "fail", 1, 2))
    code, out, _ = run(capsys, "verify", "lemma-odd", "--n-min", "3", "--n-max", "3")
    assert code == 1 and out.startswith("FAIL")


def test_sandpile_command(capsys):
    code, out, _ = run(capsys, "sandpile", "-n", "21", "--method", "both")
    assert code == 0
    assert out.splitlines() == ["snf\t27783\tZ_7⊕Z_63⊕Z_63", "closed-form\t27783\tZ_7⊕Z_63⊕Z_63"]
    code, out, _ = run(capsys, "sandpile", "-n", "9", "--dump-matrix")
    assert parse_matrix(out) == A_9
    code, out, _ = run(capsys, "sandpile", "-n", "9", "--golden", "--format", "json")
    assert code == 0 and json.loads(out)["snf"]["invariant_factors"] == [21]


def test_group_and_circulant(capsys):
    code, out, _ = run(capsys, "group", "-n", "10", "--format", "json")
    assert json.loads(out)["type"] == "Z_2⊕Z_2⊕Z_2⊕Z_6"
    code, out, _ = run(capsys, "group", "-n", "10", "--kind", "golomb")
    assert out == "60\tZ_2⊕Z_30\n"
    code, out, _ = run(capsys, "circulant", "-n", "6", "--compare-reutenauer")
    assert code == 0 and out.splitlines()[-1].endswith("match")


def test_orbits_golden_and_json(capsys):
    code, out, _ = run(capsys, "--golden", "orbits", "-n", "5", "--averaging")
    assert code == 0 and "O_1 → O_2 → O_2" in out
    code, out, _ = run(capsys, "orbits", "-n", "4", "--averaging", "--format", "json")
    assert json.loads(out)["averaging_chains"] == "O_1 → O_2 → ∅"
    code, out, _ = run(capsys, "dump", "orbits", "-n", "4", "--format", "json")
    assert json.loads(out) == [["0001", "0111"], ["0011"]]


def test_usage_errors(capsys):
    assert run(capsys, "necklaces", "-n", "4", "-p", "4")[0] == 2
    assert run(capsys, "necklaces", "-n", "0")[0] == 2
    assert run(capsys, "necklaces", "-n", "30")[0] == 2
    assert run(capsys, "orbits", "-n", "3", "-p", "3", "--flip-extended")[0] == 2
    assert run(capsys, "sandpile", "-n", "5", "-p", "3", "--method", "closed-form")[0] == 2
    assert run(capsys, "bogus")[0] == 2
    assert run(capsys, "map", "-n", "4", "--param", "7")[0] == 2
    assert run(capsys, "map", "-n", "1", "--kind", "golomb")[0] == 2


def test_global_flags_after_subcommand(capsys):
    code, out, _ = run(capsys, "necklaces", "-n", "3", "--format", "json")
    assert json.loads(out) == ["001", "011"]
    code, out, _ = run(capsys, "necklaces", "-n", "12", "--count")
    assert out == "335\n"


def test_output_is_deterministic(capsys):
    first = run(capsys, "--format", "json", "orbits", "-n", "8", "--averaging")[1]
    second = run(capsys, "--format", "json", "orbits", "-n", "8", "--averaging")[1]
    assert first == second


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "necklace_sandpile", "dump", "necklaces", "-n", "3"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout == "001\n011\n"
    proc = subprocess.run([sys.executable, "-m", "necklace_sandpile", "verify", "nope"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 2
