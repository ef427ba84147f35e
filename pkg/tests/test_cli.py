import json
import subprocess
import sys

import pytest

from frobjac.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out.strip(), err


def test_delta(capsys):
    assert run(capsys, "delta", "x1+x2; x1*x2", "-p", "2") == (0, "x1^2 + x2^2", "")


def test_jacobian_identity(capsys):
    assert run(capsys, "jacobian", "x1; x2; x3", "-p", "3")[:2] == (0, "1")


def test_basis_check(capsys):
    assert run(capsys, "basis-check", "x1^2", "-p", "2", "-n", "1")[:2] == (0, "false")
    assert run(capsys, "basis-check", "x1 + x1^2", "-p", "2")[:2] == (0, "true")


def test_umatrix_and_wronskian(capsys):
    assert run(capsys, "umatrix", "x + x^2")[1] == "[1, 0]\n[x1^2, 1]"
    code, out, _ = run(capsys, "wronskian", "x", "-p", "3")
    assert code == 0 and out.endswith("det = 2")
    assert run(capsys, "wronskian", "x", "-p", "3", "--order", "4")[0] == 2


def test_represent(capsys):
    code, out, _ = run(capsys, "represent", "x", "x + x^2", "--output", "json")
    doc = json.loads(out)
    assert doc["result"] == {"delta": "1", "coefficients": {"(0)": "x1^2", "(1)": "1"}}
    assert doc["timing"] is None


def test_ideal_gens(capsys):
    assert run(capsys, "ideal-gens", "x; x^2", "-p", "3", "-n", "1")[:2] == (0, "1\n2*x1")
    assert run(capsys, "ideal-gens", "x1", "-p", "3", "-n", "2")[0] == 2


def test_file_input(tmp_path, capsys):
    path = tmp_path / "F.txt"
    path.write_text("# F\nx1 + x2\nx1*x2\n", encoding="utf-8")
    assert run(capsys, "delta", "--file", str(path))[:2] == (0, "x1^2 + x2^2")


def test_json_shape(capsys):
    code, out, _ = run(capsys, "umatrix", "x+x^2", "--output", "json")
    doc = json.loads(out)
    assert set(doc) == {"command", "inputs", "result", "timing"}
    assert doc["result"] == [["1", "0"], ["x1^2", "1"]]


@pytest.mark.parametrize(
    "argv",
    [
        ["delta", "x1 +"],
        ["delta", "x1; x2", "-n", "3"],
        ["delta", "x1", "-p", "4"],
        ["verify", "nope"],
        ["verify", "formula5", "-n", "2", "-p", "3"],
        ["delta"],
    ],
)
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and "error" in err


def test_argparse_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 2


def test_verify_exit_codes(capsys, monkeypatch):
    code, out, _ = run(capsys, "verify", "prop2", "-p", "2", "-n", "2", "--trials", "20")
    assert code == 0 and out.startswith("prop2: PASS 20/20")
    import frobjac.frobenius as fb

    real = fb.delta
    monkeypatch.setattr(fb, "delta", lambda F: real(F) + 1)
    code, out, _ = run(capsys, "verify", "prop2", "-p", "2", "-n", "2", "--trials", "5")
    assert code == 1 and "first counterexample" in out


def test_module_entry_point_is_deterministic():
    cmd = [sys.executable, "-m", "frobjac", "verify", "lemma3", "-p", "3", "-n", "2", "--seed", "7",
           "--trials", "20", "--output", "json"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and json.loads(a)["result"]["passed"]
