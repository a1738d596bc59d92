import json
import subprocess
import sys

import pytest

from qexact.cli import main

A7_SEED = "5..5,5..7,5..6,2..3,1..3,1..5,3..5"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_gs_on_a7_seed(capsys):
    code, out, _ = run(capsys, "gs", "--quiver", "RLRRLR", "--structure", "diamond", "--cat", A7_SEED)
    js = json.loads(out)
    assert code == 0
    assert len(js["stages"]) == 3 and len(js["stages"][-1]) == 15
    assert js["config"]["quiver"] == "RLRRLR" and js["config"]["structure"] == "diamond"


def test_tilting_count(capsys):
    code, out, _ = run(capsys, "tiltings", "--quiver", "RLR", "--count", "--format", "table")
    assert (code, out) == (0, "14\n")
    code, out, _ = run(capsys, "tiltings", "--quiver", "RLR", "--count")
    assert json.loads(out)["count"] == 14


def test_congruence(capsys):
    code, out, _ = run(capsys, "congruence", "--quiver", "RLR", "--structure", "diamond")
    js = json.loads(out)
    assert code == 0
    assert {k: js[k] for k in ("classes", "congruence", "boolean")} == {
        "classes": 8, "congruence": True, "boolean": True}


def test_predicate_exit_codes(capsys):
    code, out, _ = run(capsys, "adapted", "--quiver", "RR", "--cat", "1..1,2..3")
    assert code == 1 and json.loads(out)["witness"] == {"quot": "1..1", "sub": "2..3"}
    code, _, _ = run(capsys, "adapted", "--quiver", "RR", "--cat", "1..1,3..3")
    assert code == 0
    code, out, _ = run(capsys, "cjr-check", "--quiver", "RR", "--cat", "1..1,2..2")
    assert code == 1


@pytest.mark.parametrize("argv", [
    ["gs", "--quiver", "RX", "--cat", "1"],
    ["gs", "--quiver", "RR", "--cat", "1..9"],
    ["gs", "--quiver", "RR"],
    ["gs", "--quiver", "RR", "--cat", "1", "--structure", "nope"],
    ["frobnicate", "--quiver", "RR"],
    ["gs", "--quiver", "RR", "--cat", "1", "--bogus"],
    ["genjf", "--quiver", "R", "--cat", "1..2", "--prime", "7"],
    ["tiltings", "--quiver", "R", "--format", "dot"],
    ["cjr-max", "--quiver", "RR", "--pair", "B=1;E=1"],
    ["gs", "--quiver", "RR", "--cat", "1", "--structure", "custom:/nonexistent.json"],
])
def test_usage_errors(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and out == "" and err


def test_seed_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("QE_SEED", "42")
    _, out, _ = run(capsys, "genjf", "--quiver", "R", "--cat", "1..1,1..2")
    js = json.loads(out)
    assert js["config"]["seed"] == 42 and js["genjf"] == [[2], [1]]
    _, out, _ = run(capsys, "genjf", "--quiver", "R", "--cat", "1..1,1..2", "--seed", "3")
    assert json.loads(out)["config"]["seed"] == 3


def test_poset_dot_is_stable(capsys):
    argv = ["poset", "--quiver", "RLR", "--structure", "max", "--format", "dot", "--group-by", "diamond"]
    _, a, _ = run(capsys, *argv)
    _, b, _ = run(capsys, *argv)
    assert a == b and a.startswith("digraph") and a.count("->") == 21 and a.count("subgraph") == 8


@pytest.mark.parametrize("argv", [
    ["ar-quiver", "--quiver", "RL"],
    ["ck", "--quiver", "RR", "--cat", "1..3"],
    ["serre", "--quiver", "RR", "--cat", "1..1,1..2,1..3,2..2,2..3,3..3"],
    ["maximal", "--quiver", "RR", "--cat", "1..1"],
    ["tiltings", "--quiver", "RL"],
    ["mutate", "--quiver", "RR", "--structure", "max", "--cat", "1..3,2..3,3..3", "--at", "2..3"],
    ["classes", "--quiver", "RLR"],
    ["poset", "--quiver", "RL"],
    ["cjr-max", "--quiver", "RLRRLR", "--pair", "B=1,2,3,5;E=3,5,6,7"],
    ["jr-probe", "--quiver", "RR", "--dmax", "1"],
    ["crosscheck", "--quiver", "RLR"],
])
def test_every_json_report_embeds_config(capsys, argv):
    code, out, _ = run(capsys, *argv)
    assert code in (0, 1)
    assert out.endswith("\n")
    js = json.loads(out)
    assert set(js["config"]) == {"quiver", "structure", "seed", "prime", "trials", "format"}
    # byte-identical on a rerun
    assert run(capsys, *argv)[1] == out


def test_mutation_result(capsys):
    _, out, _ = run(capsys, "mutate", "--quiver", "RR", "--structure", "max",
                    "--cat", "1..3,2..3,3..3", "--at", "2..3")
    m = json.loads(out)["mutation"]
    assert m["direction"] == "left" and m["result"] == ["1..1", "1..3", "3..3"]


def test_cjr_max_pair(capsys):
    _, out, _ = run(capsys, "cjr-max", "--quiver", "RLRRLR", "--pair", "B=1,2,3,5;E=3,5,6,7")
    (pr,) = json.loads(out)["pairs"]
    assert len(pr["J"]) == 15 and len(pr["T"]) == 7


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "qexact", "tiltings", "--quiver", "RR", "--count",
                          "--format", "table"], capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout == "5\n"
