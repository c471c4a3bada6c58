import json

import pytest

from contikit import PeriodicSystem, S8
from contikit.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_expand_text(capsys):
    code, out, _ = run(capsys, "expand", "--n", "8")
    assert code == 0
    assert out.strip() == "sqrt(8) = [2; (1,4)] period d=2"


def test_expand_json_roundtrip(capsys):
    code, out, _ = run(capsys, "expand", "--n", "13", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["a0"] == "3"
    assert doc["period"] == ["1", "1", "1", "1", "6"]
    assert json.loads(json.dumps(doc)) == doc


def test_expand_perfect_square_exit2(capsys):
    code, _, err = run(capsys, "expand", "--n", "9")
    assert code == 2
    assert "PerfectSquare" in err


def test_pell_example(capsys):
    code, out, _ = run(capsys, "pell", "--n", "13", "--count", "1")
    assert code == 0
    assert "x=649" in out and "y=180" in out


def test_pell_json(capsys):
    code, out, _ = run(capsys, "pell", "--n", "8", "--count", "3", "--json")
    sols = json.loads(out)
    assert code == 0
    assert [(s["x"], s["y"]) for s in sols] == [("3", "1"), ("17", "6"), ("99", "35")]


def test_reduce_inline_system(capsys):
    code, out, _ = run(capsys, "reduce", "--d", "2", "--a", "1,1", "--b", "1,4",
                       "--b0", "2", "--json")
    assert code == 0
    assert json.loads(out) == {"C_d": "6", "D_d": "-1", "Delta": "32"}


def test_reduce_system_file(tmp_path, capsys):
    path = tmp_path / "system.json"
    path.write_text(S8.to_json())
    code, out, _ = run(capsys, "reduce", "--system", str(path))
    assert code == 0
    assert "C_d = 6" in out


def test_system_sources_are_exclusive(capsys):
    code, _, err = run(capsys, "reduce", "--sqrt", "8", "--d", "2", "--a", "1,1",
                       "--b", "1,4")
    assert code == 2
    assert "exactly one" in err


def test_binet_verb(capsys):
    for nu, expect in ((7, "204"), (8, "985"), (-3, "-1")):
        code, out, _ = run(capsys, "binet", "--sqrt", "8", "--nu", str(nu), "--json")
        assert code == 0
        assert json.loads(out)["B"] == expect


def test_pseudoprime_example_json(capsys):
    code, out, _ = run(capsys, "pseudoprime", "--sqrt", "8",
                       "--candidate", "35", "--json")
    assert code == 0
    assert json.loads(out) == {"n": "35", "epsilon": -1, "index": "71",
                               "verdict": "probable_prime"}


def test_pseudoprime_range_scan(capsys):
    code, out, _ = run(capsys, "pseudoprime", "--sqrt", "8", "--range", "3:30", "--json")
    assert code == 0
    lines = [json.loads(line) for line in out.strip().splitlines()]
    by_n = {doc["n"]: doc["verdict"] for doc in lines}
    assert by_n["5"] == "probable_prime"
    assert by_n["9"] == "inapplicable"
    assert "composite_proven" in by_n.values()


def test_pseudoprime_range_scan_parallel_matches_serial(capsys):
    _, serial, _ = run(capsys, "pseudoprime", "--sqrt", "8", "--range", "3:60", "--json")
    _, parallel, _ = run(capsys, "pseudoprime", "--sqrt", "8", "--range", "3:60",
                         "--json", "--jobs", "2")
    assert serial == parallel


def test_series_verb(capsys):
    code, out, _ = run(capsys, "series", "--sqrt", "8", "--family", "millin", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["converged"] is True
    assert doc["family"] == "millin"


def test_series_zeta_verb(capsys):
    code, out, _ = run(capsys, "series", "--sqrt", "8", "--family", "pi_over_6",
                       "--digits", "50", "--terms", "40", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["converged"] is True and "zeta" in doc


def test_series_hypothesis_violation_exit2(capsys):
    code, _, err = run(capsys, "series", "--sqrt", "13", "--family", "pell_y")
    assert code == 2
    assert "HypothesisViolated" in err


def test_check_identity(capsys):
    code, out, _ = run(capsys, "check", "--sqrt", "8", "--identity", "cassini_B",
                       "--params", "0,3,2", "--json")
    assert code == 0
    assert json.loads(out)["equal"] is True


def test_check_congruence(capsys):
    code, out, _ = run(capsys, "check", "--sqrt", "8", "--congruence-p", "7", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["all_pass"] is True and doc["case"] == "QR"


def test_check_congruence_composite_exit2(capsys):
    code, _, err = run(capsys, "check", "--sqrt", "8", "--congruence-p", "15")
    assert code == 2


def test_pisano_verb(capsys):
    code, out, _ = run(capsys, "pisano", "--sqrt", "8", "--p", "7", "--json")
    assert code == 0
    assert json.loads(out) == {"p": "7", "pi": "6", "bound": "12"}


def test_paper_verb_deterministic(capsys):
    code1, out1, _ = run(capsys, "paper")
    code2, out2, _ = run(capsys, "paper")
    assert code1 == 0 and code2 == 0
    assert out1 == out2
    assert "seed=20240801" in out1.splitlines()[0]
    assert all("PASS" in line for line in out1.splitlines()[1:-1])


def test_nonstrict_flag(capsys):
    code, out, _ = run(capsys, "reduce", "--d", "1", "--a", "-2", "--b", "3",
                       "--non-strict", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["C_d"] == "3" and doc["D_d"] == "-2"
