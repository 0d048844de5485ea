import json
import os
import subprocess
from pathlib import Path

import jsonschema
import pytest

ROOT = Path(os.environ.get("GSTIRLING_ROOT", Path(__file__).resolve().parents[2]))
BIN = os.environ.get("GSTIRLING_BIN", str(ROOT / "build" / "tools" / "gstirling"))
SCHEMA = json.loads((ROOT / "docs" / "output.schema.json").read_text())
SAMPLES = ROOT / "samples"


def run(*args, env=None):
    full_env = {k: v for k, v in os.environ.items() if k != "GSTIRLING_FORMAT"}
    full_env.update(env or {})
    return subprocess.run([BIN, *map(str, args)], capture_output=True, text=True, env=full_env, timeout=120)


def run_json(*args):
    proc = run(*args, "--format", "json")
    data = json.loads(proc.stdout)
    jsonschema.validate(data, SCHEMA)
    assert data["exit_code"] == proc.returncode
    return proc.returncode, data


JSON_CASES = [
    ("matrix", "--preset", "binomial", "-n", "4"),
    ("matrix", "-a", "0,1/2,-1.5", "-e", "0.1,2,3", "--verify-all"),
    ("matrix", "--preset", "stirling2", "-n", "4", "--inverse"),
    ("check", "-a", "0,1,2", "-e", "0,0,1", "--exhaustive"),
    ("check", "-a", "0,1", "-e", "1,0"),
    ("check", "-a", "1,0", "-e", "0,0", "--exhaustive-only"),
    ("network", "-a", "0,1,2", "-e", "0,1,2", "--certify"),
    ("network", "-a", "0,1", "-e", "0,2", "--certify"),
    ("network", "-a", "0,1,2", "-e", "0,5,1", "--pivot", "1,1"),
    ("chordal", "--file", SAMPLES / "p3.graph", "--check-all"),
    ("chordal", "--file", SAMPLES / "c4.graph"),
    ("chordal", "--file", SAMPLES / "c4.graph", "--find-peo"),
    ("chordal", "--rgs", "0,1,1,2", "--check-all"),
    ("rook", "-b", "1,2,3", "--check-tnn", "--check-gjw"),
    ("eulerian", "-n", "5"),
    ("audit", "--seed", "3", "--count", "20"),
]


@pytest.mark.parametrize("args", JSON_CASES, ids=lambda a: " ".join(map(str, a)))
def test_json_output_matches_schema(args):
    code, data = run_json(*args)
    assert data["command"] == args[0]
    assert code in (0, 2)


@pytest.mark.parametrize("args", JSON_CASES, ids=lambda a: " ".join(map(str, a)))
def test_output_is_deterministic(args):
    first = run(*args, "--threads", "4")
    second = run(*args, "--threads", "4")
    assert first.stdout == second.stdout
    assert first.returncode == second.returncode


def test_binomial_table():
    proc = run("matrix", "--preset", "binomial", "-n", "4")
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[-1].split() == ["4", "1", "4", "6", "4", "1"]


def test_second_kind_json():
    _, data = run_json("matrix", "-a", "0,1,2", "-e", "0,0,0", "-n", "3")
    assert data["matrix"][3] == ["0", "1", "3", "1"]


def test_network_route_matches_recurrence():
    _, net = run_json("matrix", "--preset", "lah", "-n", "3", "--method", "network")
    _, rec = run_json("matrix", "--preset", "lah", "-n", "3")
    assert net["matrix"] == rec["matrix"]
    assert net["matrix"][3] == ["0", "6", "6", "1"]


def test_rationals_serialize_literally():
    _, data = run_json("matrix", "-a", "0", "-e", "0.05")
    assert data["input"]["e"] == ["1/20"]
    assert data["matrix"][1] == ["-1/20", "1"]


def test_check_verdicts_and_exit_codes():
    code, data = run_json("check", "-a", "0,1,2", "-e", "0,0,1")
    assert code == 0 and data["verdict"] == "TNN"
    code, data = run_json("check", "-a", "0,1", "-e", "1,4")
    assert code == 2 and data["verdict"] == "NOT_TNN"
    assert data["witness"] == {"row": 1, "col": 0, "value": "-1"}


def test_check_exhaustive_agrees():
    code, data = run_json("check", "-a", "0,1,1,2", "-e", "0,1,0,2", "--exhaustive")
    assert data["exhaustive"]["agrees"] is True
    assert code in (0, 2)


def test_non_monotone_a_points_to_exhaustive_scan():
    proc = run("check", "-a", "1,0", "-e", "0,0")
    assert proc.returncode == 1
    assert "--exhaustive-only" in proc.stderr


def test_pivot_refused_at_nonzero_weight():
    proc = run("network", "-a", "0,1", "-e", "5,7", "--pivot", "1,1")
    assert proc.returncode == 1
    assert "refusing to pivot" in proc.stderr
    assert run("network", "-a", "0,1", "-e", "5,7", "--pivot", "1,1", "--force").returncode == 0


def test_pivot_on_first_position_keeps_path_matrix():
    code, data = run_json("network", "-a", "0,1,2", "-e", "0,5,1", "--pivot", "1,1")
    assert code == 0
    step = data["pivots"][0]
    assert step["path_matrix_preserved"] is True
    assert [cell["label"] for cell in step["weights"][2]] == [[1, 1], [2, 3], [3, 2]]


def test_chordal_outcomes():
    code, data = run_json("chordal", "--file", SAMPLES / "p3.graph", "--check-all")
    assert code == 0
    assert data["peo"]["e"] == [0, 1, 1]
    assert all(data["checks"][k] for k in ("bruteforce", "chromatic", "tnn", "sign_pattern"))
    code, data = run_json("chordal", "--file", SAMPLES / "c4.graph")
    assert code == 2 and data["peo"]["failure"]["position"] == 4


def test_rook_staircase_passes():
    proc = run("rook", "-b", "1,2,3", "--check-tnn")
    assert proc.returncode == 0
    assert "totally non-negative" in proc.stdout
    assert run("rook", "--file", SAMPLES / "staircase.board", "--check-gjw").returncode == 0


def test_eulerian_seven():
    proc = run("eulerian", "-n", "7")
    assert proc.returncode == 0
    assert "no negative minor found" in proc.stdout


def test_csv_and_environment_default():
    proc = run("matrix", "--preset", "stirling2", "-n", "2", env={"GSTIRLING_FORMAT": "csv"})
    assert proc.stdout.splitlines() == ["m,k,value", "0,0,1", "1,0,0", "1,1,1", "2,0,0", "2,1,1", "2,2,1"]
    assert run("check", "--preset", "lah", "-n", "2", "--format", "csv").returncode == 1


@pytest.mark.parametrize(
    "args",
    [
        ("matrix", "-a", "0,1", "-e", "0,x"),
        ("matrix", "-a", "0,1", "-e", "0"),
        ("matrix", "--preset", "lah"),
        ("matrix", "--preset", "jacobi", "-n", "2"),
        ("matrix", "--preset", "lah", "-n", "2", "-a", "0,1", "-e", "0,0"),
        ("rook", "-b", "2,1"),
        ("chordal", "--file", "/nonexistent.graph"),
        ("chordal", "--rgs", "0,2"),
        ("eulerian", "--max-order", "0"),
        (),
    ],
)
def test_usage_errors_exit_one(args):
    assert run(*args).returncode == 1


def test_parse_error_reports_position():
    proc = run("matrix", "-a", "0,1,2", "-e", "0,1,2/0")
    assert proc.returncode == 1
    assert "element 3" in proc.stderr
    assert "position 6" in proc.stderr


def test_resource_cap_exit_one():
    proc = run("rook", "-b", ",".join(["1"] * 11), "--check-gjw")
    assert proc.returncode == 1
    assert "capped" in proc.stderr
