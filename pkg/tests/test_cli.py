from __future__ import annotations

import json

import pytest

from conftest import singleton
from tempord.documents import read_instance, read_ordering, save_text, write_graph, write_instance
from tempord.main import run_cli
from tempord.model import Graph, Objective


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    monkeypatch.delenv("TEMPORD_BUDGET", raising=False)
    monkeypatch.delenv("TEMPORD_WORKERS", raising=False)


def _pairs(text: str) -> dict[str, str]:
    out = {}
    for line in text.splitlines():
        key, _, value = line.partition(" ")
        out[key] = value
    return out


@pytest.fixture
def p5_file(tmp_path):
    target = tmp_path / "p5.tg"
    assert run_cli(["generate", "--family", "path", "--params", "n=5", "--k", "4", "--out", str(target)]) == 0
    return target


def _ordering(tmp_path, body: str):
    target = tmp_path / "p5.ord"
    save_text(target, "ORDERING 1\n" + body)
    return target


def test_generate_to_stdout(capsys):
    assert run_cli(["generate", "--family", "clique_with_pendants", "--params", "r=3", "s=2"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("TEMPORD 1\n")
    assert "vertices 9\n" in out


def test_generate_random_family_with_seed(tmp_path):
    a, b = tmp_path / "a.tg", tmp_path / "b.tg"
    for target in (a, b):
        args = ["generate", "--family", "random_tree", "--params", "n=8", "--seed", "4"]
        assert run_cli([*args, "--out", str(target)]) == 0
    assert a.read_text(encoding="utf-8") == b.read_text(encoding="utf-8")


def test_solve_optimise(p5_file, tmp_path, capsys):
    out_path = tmp_path / "best.ord"
    report = tmp_path / "report.json"
    code = run_cli(
        ["solve", "--in", str(p5_file), "--optimise", "--out", str(out_path), "--json", str(report)]
    )
    assert code == 0
    pairs = _pairs(capsys.readouterr().out)
    assert pairs["optimal"] == "4"
    assert pairs["algo"] == "tree-vc"
    assert read_ordering(out_path).h == 4
    payload = json.loads(report.read_text(encoding="utf-8"))
    assert payload["command"] == "solve"
    assert payload["result"]["optimal_value"] == 4
    assert "generated_at" in payload
    assert payload["config"]["budget"] == 10_000_000


def test_solve_decision_exit_codes(p5_file, capsys):
    assert run_cli(["solve", "--in", str(p5_file), "--k", "4"]) == 0
    assert _pairs(capsys.readouterr().out)["decision"] == "yes"
    assert run_cli(["solve", "--in", str(p5_file), "--k", "3", "--algo", "brute"]) == 1
    assert _pairs(capsys.readouterr().out)["decision"] == "no"


def test_solve_budget_exceeded(tmp_path, capsys):
    p7 = tmp_path / "p7.tg"
    run_cli(["generate", "--family", "path", "--params", "n=7", "--out", str(p7)])
    capsys.readouterr()
    code = run_cli(["solve", "--in", str(p7), "--algo", "brute", "--optimise", "--budget", "5"])
    assert code == 3
    pairs = _pairs(capsys.readouterr().out)
    assert pairs["status"] == "budget-exceeded"
    assert pairs["explored"] == "5"
    assert int(pairs["best"]) >= 3


def test_solve_rejects_wrong_algorithm(p5_file, capsys):
    assert run_cli(["solve", "--in", str(p5_file), "--algo", "dag"]) == 2
    assert "not-a-dag" in capsys.readouterr().err


def test_solve_dag_maxmin_reports_max_measure(tmp_path, capsys):
    target = tmp_path / "dipath.tg"
    dipath = Graph(True, 3, ((0, 1), (1, 2)))
    save_text(target, write_instance(singleton(dipath, k=3, objective=Objective.MAXMIN)))
    assert run_cli(["solve", "--in", str(target), "--algo", "dag"]) == 2
    assert "--optimise" in capsys.readouterr().err

    witness = tmp_path / "dipath.ord"
    code = run_cli(["solve", "--in", str(target), "--algo", "dag", "--optimise", "--out", str(witness)])
    assert code == 0
    pairs = _pairs(capsys.readouterr().out)
    assert pairs["measure"] == "max"
    assert pairs["optimal"] == "3"
    assert "decision" not in pairs
    assert read_ordering(witness).times == (1, 2)


def test_eval(p5_file, tmp_path, capsys):
    good = _ordering(tmp_path, "0 1\n1 3\n2 4\n3 2\n")
    assert run_cli(["eval", "--in", str(p5_file), "--ordering", str(good)]) == 0
    pairs = _pairs(capsys.readouterr().out)
    assert pairs["extreme"] == "4"
    assert pairs["objective"] == "minmax"

    forward = _ordering(tmp_path, "0 1\n1 2\n2 3\n3 4\n")
    assert run_cli(["eval", "--in", str(p5_file), "--ordering", str(forward)]) == 1
    assert _pairs(capsys.readouterr().out)["extreme"] == "5"


@pytest.mark.parametrize(
    "body",
    [
        "0 1\n1 1\n2 3\n3 4\n",
        "0 1\n1 2\n2 3\n",
        "0 1\n1 2\n2 3\n3 four\n",
    ],
)
def test_eval_rejects_tampered_ordering(p5_file, tmp_path, body):
    bad = _ordering(tmp_path, body)
    assert run_cli(["eval", "--in", str(p5_file), "--ordering", str(bad)]) == 2


def test_approx(p5_file, tmp_path, capsys):
    report = tmp_path / "approx.json"
    assert run_cli(["approx", "--in", str(p5_file), "--json", str(report)]) == 0
    pairs = _pairs(capsys.readouterr().out)
    assert pairs["colors"] == "2"
    assert pairs["bound"] == "4"
    assert pairs["ratio"] == "8/3"
    assert int(pairs["achieved"]) <= 4
    assert json.loads(report.read_text(encoding="utf-8"))["result"]["ratio"] == "8/3"


def test_reduce_vertex_cover_list(tmp_path):
    source = tmp_path / "p3.graph"
    save_text(source, write_graph(Graph(False, 3, ((0, 1), (1, 2)))))
    out, names = tmp_path / "vc.tg", tmp_path / "vc.json"
    code = run_cli(
        ["reduce", "--kind", "vclist", "--source", str(source), "--k", "1",
         "--out", str(out), "--map", str(names)]
    )
    assert code == 0
    inst = read_instance(out)
    assert inst.k == 4
    assert inst.time_lists is not None
    mapping = json.loads(names.read_text(encoding="utf-8"))
    assert mapping["vertices"]["u[0]"] == 0
    assert len(mapping["edge_roles"]["middle"]) == 4


def test_reduce_sat34(tmp_path):
    source = tmp_path / "f.cnf"
    save_text(source, "p cnf 3 1\n1 -2 3 0\n")
    out = tmp_path / "sat.tg"
    assert run_cli(["reduce", "--kind", "sat34", "--source", str(source), "--out", str(out)]) == 0
    inst = read_instance(out)
    assert inst.h == 12
    assert inst.graph.directed


def test_reduce_requires_parameter(tmp_path):
    source = tmp_path / "p3.graph"
    save_text(source, write_graph(Graph(False, 3, ((0, 1), (1, 2)))))
    assert run_cli(["reduce", "--kind", "pclique", "--source", str(source)]) == 2
    assert run_cli(["reduce", "--kind", "bisection", "--source", str(source)]) == 2
    assert run_cli(["reduce", "--kind", "bisection", "--source", str(source), "--alpha", "1"]) == 2


def test_errors(tmp_path, capsys, monkeypatch):
    assert run_cli(["solve", "--in", str(tmp_path / "missing.tg")]) == 2
    assert run_cli(["generate", "--family", "path", "--params", "n"]) == 2
    assert run_cli(["generate", "--family", "path", "--params", "n=0"]) == 2
    assert run_cli(["frobnicate"]) == 2
    assert run_cli(["--help"]) == 0
    broken = tmp_path / "broken.tg"
    save_text(broken, "TEMPORD 1\ndirected maybe\n")
    assert run_cli(["solve", "--in", str(broken)]) == 2
    assert "line 2, column 10" in capsys.readouterr().err

    good = tmp_path / "p3.tg"
    assert run_cli(["generate", "--family", "path", "--params", "n=3", "--out", str(good)]) == 0
    monkeypatch.setenv("TEMPORD_BUDGET", "lots")
    assert run_cli(["solve", "--in", str(good)]) == 2


def test_undecodable_files_are_errors(tmp_path, capsys):
    broken = tmp_path / "broken.tg"
    broken.write_bytes(b"TEMPORD 1\n# \xff\xfe\n")
    assert run_cli(["eval", "--in", str(broken), "--ordering", str(broken)]) == 2
    assert "line 2, column 3" in capsys.readouterr().err

    cnf = tmp_path / "broken.cnf"
    cnf.write_bytes(b"p cnf 3 1\n1 2 \xff 0\n")
    assert run_cli(["reduce", "--kind", "sat34", "--source", str(cnf)]) == 2
