import json
import subprocess
import sys

import pytest

from fanoplanes.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_fano_degree_gr39(capsys):
    assert run(capsys, "fano", "degree", "--k", "3", "--n", "9", "--degrees", "2,2,2")[:2] == (0, "1024\n")


def test_bott_singular(capsys):
    code, out, _ = run(capsys, "bott", "--weight", "2", "--grassmannian", "3,10")
    assert code == 0 and out == "zero (singular weight)\n"


def test_malformed_json_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["chow", "mul", "--grassmannian", "3,10", "--classes", "[[3,2"])
    assert exc.value.code == 2
    assert "usage" in capsys.readouterr().err


def test_unknown_subcommand(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_domain_error_json(capsys):
    code, out, _ = run(capsys, "--format", "json", "bott", "--weight", "1,2")
    assert code == 1
    assert json.loads(out)["type"] == "ValueError"


def test_domain_error_text(capsys):
    code, _, err = run(capsys, "chow", "mul", "--classes", "[[8]]")
    assert code == 1 and err.startswith("error:")


def test_format_flag_either_position(capsys):
    a = run(capsys, "--format", "json", "invariants", "hrr", "--m", "3")
    b = run(capsys, "invariants", "hrr", "--m", "3", "--format", "json")
    assert a == b and json.loads(a[1]) == {"m": 3, "chi": 16896}


def test_chow_mul_and_integrate(capsys):
    code, out, _ = run(capsys, "--format", "json", "chow", "mul", "--grassmannian", "3,10",
                       "--classes", "[[3,2,1],[3,2,1],[3,2,1]]")
    assert code == 0
    data = json.loads(out)
    assert data["grassmannian"] == [3, 10]
    assert {tuple(t["partition"]): t["coeff"] for t in data["terms"]} == {
        (7, 7, 4): 4, (7, 6, 5): 8, (6, 6, 6): 2}
    code, out, _ = run(capsys, "chow", "integrate", "--grassmannian", "2,4",
                       "--classes", "[[1],[1],[1],[1]]")
    assert out == "2\n"


def test_chow_mul_coefficient_terms(capsys):
    classes = json.dumps([[{"partition": [1], "coeff": "1/2"}], [1]])
    code, out, _ = run(capsys, "chow", "mul", "--grassmannian", "3,10", "--classes", classes)
    assert out == "(1/2)*s(2) + (1/2)*s(1,1)\n"


def test_partitions_lr(capsys):
    code, out, _ = run(capsys, "partitions", "lr", "--lambda", "1", "--mu", "1")
    assert out == "s(2) + s(1,1)\n"


def test_fano_class_and_tangent(capsys):
    code, out, _ = run(capsys, "fano", "class")
    assert out == "2048*s(7,7,4) + 4096*s(7,6,5) + 1024*s(6,6,6)\n"
    code, out, _ = run(capsys, "fano", "tangent")
    assert out.splitlines()[0] == "c1 = -2*s(1)"


def test_invariants_commands(capsys):
    code, out, _ = run(capsys, "--format", "json", "invariants", "hilbert")
    data = json.loads(out)
    assert data["coefficients"] == [-2816, "19712/3", -5632, "5632/3"]
    code, out, _ = run(capsys, "invariants", "ci-hodge", "--n", "7")
    assert "3 38 3" in out
    code, out, _ = run(capsys, "invariants", "hodge-diamond")
    assert "2823" in out and "15684" in out


def test_koszul_commands(capsys):
    code, out, _ = run(capsys, "koszul", "wedge", "--r", "1")
    assert out == "wedge^1 E* = 3G(2)\n"
    code, out, _ = run(capsys, "koszul", "table", "--r", "5")
    assert "*6G(8,1,1)*" in out
    code, out, _ = run(capsys, "koszul", "euler-check")
    assert out == "chi(O) = -2816 (Koszul) = -2816 (HRR)\n"
    code, out, _ = run(capsys, "--format", "json", "koszul", "cohomology")
    data = json.loads(out)
    assert data["h"] == [1, 0, 6, 2823] and data["E2"] == []
    code, out, _ = run(capsys, "--format", "json", "koszul", "cohomology", "--assume-degeneration")
    data = json.loads(out)
    assert {(e["p"], e["q"]): e["dim"] for e in data["E2"]} == {(-18, 21): 2639, (-11, 14): 184}
    assert data["assumptions"] == ["degeneration_at_E2"]


def test_reproduce(capsys):
    code, out, _ = run(capsys, "reproduce")
    assert code == 0
    assert "PASS  deg F2 = 11264" in out
    assert "chi(O) = -2816 (HRR) = -2816 (Koszul)" in out
    assert "2823 15684 15684 2823" in out
    assert "FAIL" not in out


def test_json_round_trips(capsys):
    from fanoplanes.chow import ChowClass
    from fanoplanes.schur_decomp import SchurDecomposition
    from fanoplanes.bott import BottResult
    _, out, _ = run(capsys, "--format", "json", "fano", "class")
    c = ChowClass.from_json(json.loads(out))
    assert c.to_json() == json.loads(out)
    _, out, _ = run(capsys, "--format", "json", "koszul", "wedge", "--r", "4")
    data = json.loads(out)
    assert SchurDecomposition.from_json(data).to_json() == {k: v for k, v in data.items() if k != "r"}
    _, out, _ = run(capsys, "--format", "json", "bott", "--weight", "12,12,10")
    data = json.loads(out)
    res = BottResult.from_json(data)
    assert res.dimension == 825


def test_deterministic_subprocess():
    cmd = [sys.executable, "-m", "fanoplanes", "--format", "json", "koszul", "table"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second and first


def test_width_env_var(monkeypatch, capsys):
    monkeypatch.setenv("FANOPLANES_WIDTH", "30")
    _, out, _ = run(capsys, "invariants", "hilbert")
    assert all(len(line) <= 30 for line in out.splitlines()[1:])
