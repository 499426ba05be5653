import json
import subprocess
import sys

import pytest

from dedekindsums.cli import run


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize(
    "argv, want",
    [
        (["dedekind", "2", "3"], "-1/18"),
        (["dedekind", "1", "3", "--naive"], "1/18"),
        (["fourier", "-4", "--mod", "2", "--parts", "1"], "1/4"),
        (["zagier", "5", "1", "1"], "-4/5"),
        (["partition", "--parts", "1,2", "4"], "3"),
        (["partition", "--parts", "1,2", "4", "--method", "formula"], "3"),
        (["partition", "--parts", "1,2,3", "6", "--interior", "--method", "formula"], "1"),
        (["q", "--parts", "1,2", "4"], "11/4"),
        (["rademacher", "2", "3", "--x", "1/2"], None),
        (["knuth", "2", "5", "0"], None),
    ],
)
def test_values(capsys, argv, want):
    code, out, _ = call(capsys, *argv)
    assert code == 0
    if want is not None:
        assert out.strip() == want


def test_knuth_matches_dedekind(capsys):
    _, a, _ = call(capsys, "knuth", "2", "5", "0")
    _, b, _ = call(capsys, "dedekind", "2", "5")
    assert a == b


def test_dp_and_formula_agree(capsys):
    for n in range(0, 80, 7):
        _, dp, _ = call(capsys, "partition", "--parts", "3,5,7", str(n))
        _, fm, _ = call(capsys, "partition", "--parts", "3,5,7", str(n), "--method", "formula")
        assert dp == fm


def test_json_roundtrip(capsys, tmp_path):
    path = tmp_path / "out.json"
    code, out, _ = call(capsys, "dedekind", "2", "3", "--json", "--out", str(path))
    assert code == 0
    doc = json.loads(out)
    assert doc == json.loads(path.read_text())
    assert doc["value"] == "-1/18" and doc["args"] == {"a": 2, "b": 3, "naive": False}


def test_quasipoly_output(capsys):
    code, out, _ = call(capsys, "quasipoly", "--parts", "1,2")
    assert code == 0
    assert out.splitlines() == ["poly: 3/4 1/2", "mod 1: 0", "mod 2: 1/4 -1/4"]
    _, out, _ = call(capsys, "quasipoly", "--parts", "1,2", "--json")
    assert json.loads(out)["poly"] == ["3/4", "1/2"]


@pytest.mark.parametrize(
    "argv",
    [
        ["dedekind", "2", "4"],
        ["partition", "--parts", "2,4", "5"],
        ["partition", "--parts", "1,2", "0", "--interior", "--method", "formula"],
        ["fourier", "0", "--mod", "4", "--parts", "2"],
        ["rademacher", "2", "3", "--x", "0.5"],
        ["cone2d", "--gen", "1,2", "2,4"],
        ["nosuchcommand"],
        ["dedekind", "x", "3"],
    ],
)
def test_invalid_input_exit_two(capsys, argv):
    code, _, err = call(capsys, *argv)
    assert code == 2
    assert err


def test_cone2d_negative_pairs(capsys):
    code, out, _ = call(capsys, "cone2d", "--gen", "-3,4", "5,1", "--truncate", "6")
    assert code == 0
    assert out.strip().endswith("ok")
    code, out, _ = call(capsys, "cone2d", "--gen", "-3,-4", "5,1", "--json")
    doc = json.loads(out)
    assert code == 0 and doc["u"] == [-3, -4] and doc["index"] == 17


def test_verify_exit_codes(capsys):
    code, out, err = call(capsys, "verify", "dedekind", "--max", "20")
    assert code == 0 and out.startswith("PASS dedekind")
    assert "dedekind:" in err
    code, out, _ = call(capsys, "verify", "raddedsum", "--max", "5")
    assert code == 1 and out.startswith("FAIL raddedsum")


def test_verify_all_is_deterministic(capsys):
    code1, out1, _ = call(capsys, "verify", "all", "--max", "8", "--seed", "1", "--json")
    code2, out2, _ = call(capsys, "verify", "all", "--max", "8", "--seed", "1", "--json")
    assert code1 == code2 == 1  # the raddedsum suite fails
    a, b = json.loads(out1), json.loads(out2)
    assert a == b
    failing = {s["suite"] for s in a["suites"] if not s["passed"]}
    assert failing == {"raddedsum"}


def test_bench_runs(capsys):
    code, out, _ = call(capsys, "bench", "dedekind", "--bits", "16", "--samples", "3", "--json")
    assert code == 0
    assert json.loads(out)["command"] == "bench"


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "dedekindsums", "dedekind", "1", "3"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "1/18"
