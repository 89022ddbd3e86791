import json
import random
import subprocess
import sys
from fractions import Fraction

import pytest

from hyperbridge import Hypermatrix222, Hypermatrix2222, cayley_det, hypermatrix_to_json
from hyperbridge.cli import main
from hyperbridge.trilinear import TrilinearSolution, TrilinearSystem, verify_solution


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, (json.loads(out) if out.strip() else None), err


def write(tmp_path, hm, name="hm.json"):
    path = tmp_path / name
    path.write_text(json.dumps(hypermatrix_to_json(hm)))
    return str(path)


def test_cayley_det_command(tmp_path, capsys):
    path = write(tmp_path, Hypermatrix222.from_corners(1, 0, 0, 0, 0, 0, 0, 1))
    assert run(capsys, "cayley-det", path)[:2] == (0, {"cayley_det": "1"})
    path = write(tmp_path, Hypermatrix222.from_corners(1, 0, 0, 1, 1, 0, 0, 1))
    assert run(capsys, "cayley-det", path)[1] == {"cayley_det": "0"}


def test_cayley_det_matches_library(tmp_path, capsys):
    rng = random.Random(3)
    for _ in range(5):
        hm = Hypermatrix222([rng.randint(-9, 9) for _ in range(8)])
        assert run(capsys, "cayley-det", write(tmp_path, hm))[1]["cayley_det"] == str(cayley_det(hm))


def test_usage_errors(tmp_path, capsys):
    path = write(tmp_path, Hypermatrix2222.zeros())
    assert run(capsys, "cayley-det", path)[0] == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(capsys, "invariants", str(bad))[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["bridge", "-k", "1"])
    assert exc.value.code == 2


def test_invariants_command(tmp_path, capsys):
    code, data, _ = run(capsys, "invariants", write(tmp_path, Hypermatrix2222.zeros()))
    assert code == 0
    assert data["delta"] == "0" and data["J"] is None and data["quartic"] == ["0"] * 5
    rank_one = Hypermatrix2222.from_function(lambda i, j, k, l: (1 + i) * (2 - j) * (k - 3) * (l + 2))
    assert run(capsys, "invariants", write(tmp_path, rank_one))[1]["J"] is None


def test_invariants_scaling(tmp_path, capsys):
    rng = random.Random(5)
    a4 = Hypermatrix2222([rng.randint(-3, 3) for _ in range(16)])
    base = run(capsys, "invariants", write(tmp_path, a4))[1]
    scaled = run(capsys, "invariants", write(tmp_path, a4.scale(2), "s.json"))[1]
    assert Fraction(scaled["delta"]) == 2**24 * Fraction(base["delta"])
    assert scaled["J"] == base["J"]


def test_bridge_command(capsys):
    code, data, _ = run(capsys, "bridge", "-k", "1", "-m", "2", "-p", "3", "-r", "1", "-s", "1", "-t", "1")
    assert code == 0
    assert data["uv"] == {"e": "6", "f": "12", "g": "2", "h": "8"}
    assert data["cubic"] == {"a": "-24", "b": "44", "c": "-24", "d": "4"}
    assert data["assignment_verified"] is True
    data = run(capsys, "bridge", *"-k 1 -m 1 -p 1 -r 1 -s 1 -t 1".split())[1]
    assert data["uv"] == {"e": "3", "f": "2", "g": "2", "h": "3"}


def test_bridge_degenerate(capsys):
    code, data, err = run(capsys, "bridge", *"-k 0 -m 1 -p 1 -r 1 -s 1 -t 1".split())
    assert code == 1 and data is None
    assert json.loads(err)["error"] == "DegenerateParams"


def test_curve_commands(capsys):
    code, data, _ = run(capsys, "curve", "add", "--alpha", "-25", "--beta", "0", "--point=-4,6", "--point=-4,6")
    assert code == 0 and data["result"] == ["1681/144", "-62279/1728"]
    data = run(capsys, "curve", "double", "(-4,6)", "--alpha", "-25", "--beta", "0")[1]
    assert data["result"] == ["1681/144", "-62279/1728"]
    data = run(capsys, "curve", "add", "--alpha", "-25", "--beta", "0", "--point=-4,6", "-P", "O")[1]
    assert data["result"] == ["-4", "6"]
    data = run(capsys, "curve", "torsion", "--alpha", "-25", "--beta", "0")[1]
    assert len(data["two_torsion"]) == 3 and data["full"]
    data = run(capsys, "curve", "shift", "--cubic", "1,0,-25,0", "-P", "5,0")[1]
    assert data["curve"] == {"a": "1", "b": "15", "c": "50", "d": "0"}
    assert run(capsys, "curve", "j", "--alpha", "-25", "--beta", "0")[1]["j"] == "1728"


def test_curve_point_not_on_curve(capsys):
    code, _, err = run(capsys, "curve", "add", "--alpha", "-25", "--beta", "0", "-P", "1,1", "-P", "O")
    assert code == 1 and json.loads(err)["error"] == "PointNotOnCurve"


def test_trilinear_planted(capsys):
    code, data, _ = run(capsys, "trilinear", "--plant", "1,2;3,-1;2,1", "--seed", "3", "--bound", "2")
    assert code == 0
    keys = {(tuple(s["x"]), tuple(s["y"]), tuple(s["z"])) for s in data["solutions"]}
    assert ((1, 2), (3, -1), (2, 1)) in keys
    system = TrilinearSystem(Hypermatrix2222(data["entries"]))
    for s in data["solutions"]:
        assert verify_solution(system, TrilinearSolution(tuple(s["x"]), tuple(s["y"]), tuple(s["z"])))


def test_trilinear_zero_matrix(tmp_path, capsys):
    data = run(capsys, "trilinear", write(tmp_path, Hypermatrix2222.zeros()), "--bound", "1")[1]
    assert data["degenerate_quartic"] is True and data["J"] is None


def test_selftest(capsys):
    code, first, _ = run(capsys, "selftest", "--iterations", "10", "--seed", "4")
    assert code == 0 and first["ok"]
    assert run(capsys, "selftest", "--iterations", "10", "--seed", "4")[1] == first
    code, data, _ = run(capsys, "selftest", "--iterations", "3", "--inject-fault")
    assert code == 1 and not data["ok"]


def test_console_entry_point_byte_identical():
    cmd = [sys.executable, "-m", "hyperbridge", "trilinear", "--plant", "1,1;2,1;1,-1", "--bound", "2"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and json.loads(a)["planted"]["seed"] == 0
