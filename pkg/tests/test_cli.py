"""Command-line behavior: reports, formats, determinism, exit codes."""

from __future__ import annotations

import json

import pytest

from stirhom.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_table_text(capsys):
    code, out = run(capsys, "table", "--max-n", "7")
    assert code == 0
    assert "-1764" in out and "1624" in out
    assert "PASS" in out


def test_table_csv(capsys):
    code, out = run(capsys, "table", "--max-n", "3", "--format", "csv")
    assert code == 0
    assert "3,2,-3,3" in out


def test_betti_pass(capsys):
    code, out = run(capsys, "betti", "--n", "3", "--k", "3")
    assert code == 0
    assert "b3=1" in out and "PASS" in out


def test_betti_json_deterministic(capsys):
    _, first = run(capsys, "betti", "--n", "4", "--k", "2",
                   "--format", "json", "--seed", "5")
    _, second = run(capsys, "betti", "--n", "4", "--k", "2",
                    "--format", "json", "--seed", "5")
    assert first == second
    payload = json.loads(first)
    assert payload["schema"] == 1
    report = payload["reports"][0]
    assert report["betti"]["4"] == 11
    assert report["status"] == "PASS"


def test_betti_sweep_ordered(capsys):
    code, out = run(capsys, "betti", "--max-n", "4", "--format", "json",
                    "--jobs", "2")
    assert code == 0
    keys = [(r["n"], r["k"]) for r in json.loads(out)["reports"]]
    assert keys == sorted(keys)


def test_betti_requires_arguments(capsys):
    with pytest.raises(SystemExit):
        main(["betti"])
    with pytest.raises(SystemExit):
        main(["betti", "--n", "3", "--k", "9"])


def test_verify(capsys):
    code, out = run(capsys, "verify", "--n", "3", "--k", "2")
    assert code == 0
    assert out.count("PASS") == 4
    code, out = run(capsys, "verify", "--n", "4", "--k", "2",
                    "--checks", "d2,euler", "--format", "json")
    assert code == 0
    assert json.loads(out)["results"] == {"d2": True, "euler": True}
    with pytest.raises(SystemExit):
        main(["verify", "--n", "3", "--k", "2", "--checks", "bogus"])


def test_characters(capsys):
    code, out = run(capsys, "characters", "--n", "4", "--k", "4",
                    "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["decomposition"] == [
        {"partition": [1, 1, 1, 1, 1], "multiplicity": 1, "dimension": 1}]
    with pytest.raises(SystemExit):
        main(["characters", "--n", "7", "--k", "2"])


def test_graph(capsys):
    code, out = run(capsys, "graph", "--m", "3", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["betti"]["3"] == 1
    assert payload["expected"] == 1
    assert payload["status"] == "PASS"


def test_graph_negative_control_fails(capsys):
    code, _out = run(capsys, "graph", "--m", "4", "--disable-orientation-kill")
    assert code != 0


def test_graph_character_flag(capsys):
    code, out = run(capsys, "graph", "--m", "4", "--characters")
    assert code == 0
    assert "character comparison: PASS" in out
    with pytest.raises(SystemExit):
        main(["graph", "--m", "4", "--characters",
              "--disable-orientation-kill"])


def test_dot_output(capsys):
    code, out = run(capsys, "graph", "--m", "3", "--format", "dot")
    assert code == 0
    assert out.startswith("graph ")
    code, out = run(capsys, "betti", "--n", "3", "--k", "2", "--format", "dot")
    assert code == 0
    assert "color=red" in out


def test_out_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    code = main(["table", "--max-n", "2", "--format", "json",
                 "--out", str(target)])
    assert code == 0
    assert json.loads(target.read_text())["max_n"] == 2


def test_env_seed(monkeypatch, capsys):
    monkeypatch.setenv("STIRLING_SEED", "17")
    code, out = run(capsys, "betti", "--n", "3", "--k", "2", "--format", "json")
    assert code == 0
    assert json.loads(out)["seed"] == 17
    monkeypatch.setenv("STIRLING_SEED", "oops")
    with pytest.raises(SystemExit):
        main(["betti", "--n", "3", "--k", "2"])
