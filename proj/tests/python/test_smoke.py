import json
import os
import subprocess

import pytest

import tiltfan

CLI = os.environ.get("TILTFAN_CLI")
DATA = os.environ.get("TILTFAN_DATA", os.path.join(os.path.dirname(__file__), "..", "..", "data"))

TREE3 = {
    "half_edges": ["1a", "1b", "2a", "2b", "3a", "3b"],
    "sigma": [["1a"], ["1b", "2a"], ["2b", "3a"], ["3b"]],
    "bar": [["1a", "1b"], ["2a", "2b"], ["3a", "3b"]],
}


def test_cluster_a3():
    fan = tiltfan.cluster_fan([[0, 1, 0], [-1, 0, 1], [0, -1, 0]])
    assert len(fan["chambers"]) == 14
    assert not fan["budget_exhausted"]
    assert tiltfan.analyze(fan)["h"] == [1, 6, 6, 1]


def test_kronecker_mutation():
    seed = tiltfan.mutate([[0, 2], [-2, 0]], [1, 2])
    # rows of matrices whose columns are g- and c-vectors
    assert seed["G"] == [[-1, -2], [2, 3]]
    assert seed["C"] == [[3, -2], [2, -1]]


def test_kronecker_budget():
    fan = tiltfan.cluster_fan([[0, 2], [-2, 0]], budget=50)
    assert fan["budget_exhausted"]
    assert fan["complete"] == "incomplete"


def test_brauer_tree():
    fan = tiltfan.brauer_fan(TREE3)
    assert fan["graph_type"] == "Tree"
    assert len(fan["walks"]) == 12
    a = tiltfan.analyze(fan, ehrhart=2)
    assert a["f"] == [1, 12, 30, 20]
    assert a["ehrhart"]["2"] == 55


def test_weyl_and_classify():
    assert tiltfan.eulerian("B", 3) == [1, 23, 23, 1]
    assert tiltfan.classify(tiltfan.coxeter_fan("B", 2))["rank2_class"] == 6
    kase = tiltfan.classify(tiltfan.kase_fan(4, 5))
    assert kase["convex"] is False


def test_errors_are_typed():
    with pytest.raises(tiltfan.TiltfanError, match="NotSkewSymmetric"):
        tiltfan.cluster_fan([[0, 1], [1, 0]])
    with pytest.raises(tiltfan.TiltfanError, match="UnsupportedGraph"):
        tiltfan.brauer_fan({"half_edges": ["a", "b", "c", "d"], "sigma": [["a", "c"], ["b", "d"]],
                            "bar": [["a", "b"], ["c", "d"]]})


def run(*args, env=None):
    assert CLI, "TILTFAN_CLI not set"
    return subprocess.run([CLI, *args], capture_output=True, text=True, env=env)


@pytest.mark.skipif(not CLI, reason="command-line tool not built")
def test_cli_brauer_analyze():
    r = run("brauer", "--graph", os.path.join(DATA, "tree3.json"), "--analyze")
    assert r.returncode == 0
    assert json.loads(r.stdout)["f"] == [1, 12, 30, 20]


@pytest.mark.skipif(not CLI, reason="command-line tool not built")
def test_cli_weyl_eulerian():
    r = run("weyl", "--type", "B", "--n", "2", "--eulerian")
    assert r.returncode == 0
    assert json.loads(r.stdout) == [1, 6, 1]


@pytest.mark.skipif(not CLI, reason="command-line tool not built")
def test_cli_budget_exit_code(tmp_path):
    out = tmp_path / "partial.json"
    r = run("cluster", "--matrix", os.path.join(DATA, "kronecker.json"), "--budget", "100", "--fan", str(out))
    assert r.returncode == 2
    assert json.loads(r.stdout)["explored"] >= 100
    partial = json.loads(out.read_text())
    assert len(partial["chambers"]) >= 100
    env = dict(os.environ, TILTFAN_BUDGET="20")
    r = run("cluster", "--matrix", os.path.join(DATA, "kronecker.json"), env=env)
    assert r.returncode == 2
    assert json.loads(r.stdout)["explored"] == 20


@pytest.mark.skipif(not CLI, reason="command-line tool not built")
def test_cli_round_trip_and_plot(tmp_path):
    fan_path = tmp_path / "kase.json"
    assert run("fan", "--kase", "3", "3", "--fan", str(fan_path)).returncode == 0
    again = tmp_path / "again.json"
    assert run("fan", "--input", str(fan_path), "--fan", str(again)).returncode == 0
    assert json.loads(fan_path.read_text()) == json.loads(again.read_text())
    svg1, svg2 = tmp_path / "a.svg", tmp_path / "b.svg"
    assert run("plot", "--fan", str(fan_path), "--svg", str(svg1)).returncode == 0
    assert run("plot", "--fan", str(again), "--svg", str(svg2)).returncode == 0
    assert svg1.read_text() == svg2.read_text()
    c = json.loads(run("classify", "--fan", str(fan_path)).stdout)
    assert c["convex"] and c["reflexive"]


@pytest.mark.skipif(not CLI, reason="command-line tool not built")
def test_cli_errors(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"n": 2, "B": [[0, 1], [1, 0]]')
    r = run("cluster", "--matrix", str(bad))
    assert r.returncode == 1
    assert "ParseError" in r.stderr and "byte" in r.stderr
    bad.write_text('{"schema_version": 7, "n": 2, "B": [[0, 1], [-1, 0]]}')
    r = run("cluster", "--matrix", str(bad))
    assert r.returncode == 1
    assert "SchemaMismatch" in r.stderr
    assert run("--schema-version", "2", "weyl", "--type", "A", "--n", "2").returncode == 1
    assert run("analyze", "--fan", str(bad), "--ehrhart", "9").returncode != 0
