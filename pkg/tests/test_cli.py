"""Command line frontend: exit codes, JSON output, file round trips."""

import json

import pytest

from cupstack.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    data = json.loads(captured.out) if captured.out.strip() else None
    return code, data, captured.err


def gen(tmp_path, capsys, family, *params):
    path = tmp_path / f"{family}.graph"
    code, _, _ = run(capsys, "gen", family, *map(str, params),
                     "-o", str(path))
    assert code == 0
    return str(path)


def test_gen_writes_graph_and_labels(tmp_path, capsys):
    path = tmp_path / "petersen.graph"
    dot = tmp_path / "petersen.dot"
    code, data, _ = run(capsys, "gen", "petersen", "-o", str(path),
                        "--dot", str(dot))
    assert code == 0 and data["n"] == 10 and data["edges"] == 15
    assert path.read_text().startswith("n 10")
    labels = json.loads((tmp_path / "petersen.graph.labels.json").read_text())
    assert len(labels) == 10
    assert dot.read_text().startswith("graph G {")


def test_gen_stdout_mode(capsys):
    code = main(["gen", "path", "4"])
    out = capsys.readouterr().out
    assert code == 0 and out.startswith("n 4")


def test_decide_petersen_ecc2(tmp_path, capsys):
    path = gen(tmp_path, capsys, "petersen")
    code, data, _ = run(capsys, "decide", "-g", path, "-r", "0",
                        "--method", "ecc2")
    assert code == 0 and data["stackable"] is True


def test_decide_star_leaf_oracle(tmp_path, capsys):
    path = gen(tmp_path, capsys, "star", 3)
    code, data, _ = run(capsys, "decide", "-g", path, "-r", "1",
                        "--method", "oracle")
    assert code == 1 and data["stackable"] is False


def test_decide_auto_picks_dominating(tmp_path, capsys):
    path = gen(tmp_path, capsys, "complete", 4)
    code, data, _ = run(capsys, "decide", "-g", path, "-r", "0")
    assert code == 0 and data["method"] == "dominating"


def test_decide_budget_inconclusive(tmp_path, capsys):
    path = gen(tmp_path, capsys, "cycle", 8)
    code, data, _ = run(capsys, "decide", "-g", path, "-r", "0",
                        "--method", "oracle", "--budget", "5")
    assert code == 3 and data["stackable"] is None


def test_plan_verify_round_trip(tmp_path, capsys):
    graph = gen(tmp_path, capsys, "cycle", 7)
    plan = tmp_path / "plan.json"
    code, data, _ = run(capsys, "plan", "-g", graph, "-r", "2",
                        "-o", str(plan))
    assert code == 0 and data["moves"] > 0
    code, data, _ = run(capsys, "verify", "-g", graph, "-p", str(plan))
    assert code == 0 and data["accepted"] is True


def test_verify_rejects_wrong_plan(tmp_path, capsys):
    graph = gen(tmp_path, capsys, "path", 3)
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"n": 3, "target": 0,
                               "moves": [[1, 0], [2, 0]]}))
    code, data, _ = run(capsys, "verify", "-g", graph, "-p", str(bad))
    assert code == 1 and data["accepted"] is False and data["step"] == 1


def test_plan_family_grid(capsys):
    code, data, _ = run(capsys, "plan", "--family", "grid",
                        "--params", "3", "3", "-r", "4")
    assert code == 0 and data["target"] == 4 and len(data["moves"]) > 0


def test_plan_unstackable_target(tmp_path, capsys):
    graph = gen(tmp_path, capsys, "star", 3)
    code, data, _ = run(capsys, "plan", "-g", graph, "-r", "1")
    assert code == 1 and data["plan"] is None


def test_oracle_with_plan_and_config(tmp_path, capsys):
    graph = gen(tmp_path, capsys, "path", 3)
    code, data, _ = run(capsys, "oracle", "-g", graph, "-r", "0",
                        "--config", "1,0,2", "--plan")
    assert code == 0 and data["stackable"] is True
    assert data["moves"] == [[2, 0]]


def test_ge_output(tmp_path, capsys):
    graph = gen(tmp_path, capsys, "path", 3)
    code, data, _ = run(capsys, "ge", "-g", graph)
    assert code == 0
    assert data == {"I": [[0], [2]], "A": [1], "Z": []}


def test_scd_output(capsys):
    code, data, _ = run(capsys, "scd", "-n", "2")
    assert code == 0
    assert sorted(data["chains"]) == [[[], [1], [1, 2]], [[2]]]


def test_gray_output(capsys):
    code, data, _ = run(capsys, "gray", "-m", "5", "-k", "4")
    assert code == 0 and len(data["cycle"]) == 5


def test_cube_plan_and_verify(tmp_path, capsys):
    out = tmp_path / "q6.json"
    code, data, _ = run(capsys, "cube", "-d", "6", "--verify",
                        "-o", str(out))
    assert code == 0 and data["complete"] and data["verified"]
    plan = json.loads(out.read_text())
    assert len(plan["moves"]) == 63
    code, data, _ = run(capsys, "verify", "--cube", "6", "-p", str(out))
    assert code == 0 and data["accepted"] is True


def test_cube_d19_requires_extended(capsys):
    code, _, err = run(capsys, "cube", "-d", "19")
    assert code == 2 and "--extended" in err


def test_missing_file_is_usage_error(capsys):
    code, _, err = run(capsys, "decide", "-g", "/nonexistent.graph",
                       "-r", "0")
    assert code == 2 and "error:" in err


def test_unknown_family_is_usage_error(capsys):
    code, _, err = run(capsys, "gen", "moebius", "5")
    assert code == 2 and "error:" in err


def test_checked_in_fixtures(capsys):
    import pathlib
    fixtures = pathlib.Path(__file__).resolve().parent.parent / "fixtures"
    code, data, _ = run(capsys, "decide", "-g",
                        str(fixtures / "petersen.graph"), "-r", "0",
                        "--method", "ecc2")
    assert code == 0 and data["stackable"] is True
    code, data, _ = run(capsys, "decide", "-g",
                        str(fixtures / "star3.graph"), "-r", "1",
                        "--method", "oracle")
    assert code == 1
    code, data, _ = run(capsys, "verify", "-g", str(fixtures / "p4.graph"),
                        "-p", str(fixtures / "p4.plan.json"))
    assert code == 0 and data["accepted"] is True


def test_bad_arguments_are_usage_errors(capsys):
    assert main(["decide"]) == 2
    capsys.readouterr()
    assert main(["nonsense"]) == 2
    capsys.readouterr()
