import json
import xml.etree.ElementTree as ET

import pytest

from bipartify.cli import main
from bipartify.graph import read_edge_list

from conftest import DATA

EXAMPLE = f"{DATA}/example21.edges"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_analyze_example(capsys):
    code, out, _ = run(capsys, "analyze", EXAMPLE, "--seed", "7", "--format", "csv")
    assert code == 0
    rows = {line.split(",")[0]: line.split(",") for line in out.splitlines()[1:]}
    assert rows["LocalSwitching"][1:4] == ["5", "6", "5/6"]
    assert set(rows) == {"LocalSwitching", "EigenA", "EigenQ", "EigenL", "EigenNL",
                         "GreedyBetaNew", "GreedyPhiA", "GreedyPhiNL"}


def test_analyze_json_and_table(capsys):
    code, out, _ = run(capsys, "analyze", EXAMPLE, "--seed", "1", "--methods", "ls,phinl",
                       "--format", "json")
    assert code == 0 and [r["method"] for r in json.loads(out)] == ["LocalSwitching",
                                                                    "GreedyPhiNL"]
    code, out, _ = run(capsys, "analyze", EXAMPLE, "--seed", "1", "--methods", "ls")
    assert code == 0 and "LocalSwitching" in out


def test_oracle_output(capsys):
    code, out, _ = run(capsys, "oracle", EXAMPLE)
    assert code == 0
    assert out.splitlines() == ["max_cut=5 r_b_opt=5/6", "X=0 3", "Y=1 2 4"]
    code, out, _ = run(capsys, "oracle", EXAMPLE, "--format", "json")
    assert json.loads(out)["r_b_opt"] == "5/6"


def test_score_edges(capsys):
    code, out, _ = run(capsys, "score-edges", EXAMPLE, "--index", "beta")
    assert code == 0 and len(out.splitlines()) == 7
    assert run(capsys, "score-edges", EXAMPLE, "--index", "bogus")[0] == 1


def test_generate_analyze_round_trip(tmp_path, capsys):
    path = tmp_path / "g.edges"
    assert run(capsys, "generate", "--models", "ws", "--n", "20", "--seed", "3",
               "--out", str(path))[0] == 0
    g = read_edge_list(path)
    again = tmp_path / "h.edges"
    run(capsys, "generate", "--models", "ws", "--n", "20", "--seed", "3", "--out", str(again))
    assert path.read_bytes() == again.read_bytes()
    assert g.n == 20 and g.m == 80
    assert path.read_text().startswith("# model=WS")
    assert run(capsys, "analyze", str(path), "--seed", "2", "--methods", "ls")[0] == 0
    assert run(capsys, "generate", "--models", "er", "--n", "6", "--param", "p=1.0",
               "--seed", "0")[1].splitlines()[1] == "6 15"


def test_seed_from_environment(monkeypatch, capsys):
    monkeypatch.setenv("BIPARTIFY_SEED", "11")
    a = run(capsys, "generate", "--models", "er", "--n", "10")
    b = run(capsys, "generate", "--models", "er", "--n", "10", "--seed", "11")
    assert a[1] == b[1] and "seed:" not in a[2]
    monkeypatch.delenv("BIPARTIFY_SEED")
    assert "seed:" in run(capsys, "generate", "--models", "er", "--n", "10")[2]


@pytest.mark.parametrize("argv,code", [
    ([], 1),
    (["analyze"], 1),
    (["analyze", EXAMPLE, "--methods", "nope"], 1),
    (["generate", "--models", "er,ws"], 1),
    (["analyze", "/nonexistent/file.edges"], 2),
    (["generate", "--models", "ws", "--n", "6", "--seed", "1"], 2),
    (["experiment", "--instances", "0", "--seed", "1"], 1),
])
def test_exit_codes(argv, code, capsys):
    assert run(capsys, *argv)[0] == code


def test_bad_input_file(tmp_path, capsys):
    p = tmp_path / "bad.edges"
    p.write_text("3 1\n0 0\n")
    assert run(capsys, "oracle", str(p))[0] == 2
    p.write_text("30 0\n")
    assert run(capsys, "oracle", str(p))[0] == 2


def _experiment(tmp_path, capsys, name, *extra):
    out = tmp_path / name
    code = run(capsys, "experiment", "--models", "er,rg", "--n", "10", "--instances", "3",
               "--restarts", "5", "--seed", "4", "--out", str(out), *extra)[0]
    assert code == 0
    return out


def test_experiment_byte_identical(tmp_path, capsys):
    a = _experiment(tmp_path, capsys, "a")
    b = _experiment(tmp_path, capsys, "b", "--threads", "2")
    for name in ("records.csv", "summary.json"):
        assert (a / name).read_bytes() == (b / name).read_bytes()


def test_experiment_config_file(tmp_path, capsys):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("# sweep\nmodels = er\nn = 10\ninstances = 2\nrestarts = 5\nseed = 9\n"
                   "include_greedy = false\n")
    out = tmp_path / "c"
    assert run(capsys, "experiment", "--config", str(cfg), "--instances", "3",
               "--out", str(out))[0] == 0
    summary = json.loads((out / "summary.json").read_text())
    assert summary["config"]["instances"] == 3 and summary["config"]["master_seed"] == 9
    assert not any(m.startswith("Greedy") for m in summary["config"]["methods"])


def test_experiment_svg(tmp_path, capsys):
    out = _experiment(tmp_path, capsys, "s", "--format", "svg", "--no-include-greedy")
    svgs = sorted(p.name for p in out.glob("*.svg"))
    assert svgs == ["er_ecdf.svg", "er_heatmap.svg", "er_histogram.svg",
                    "rg_ecdf.svg", "rg_heatmap.svg", "rg_histogram.svg"]
    for name in svgs:
        text = (out / name).read_text()
        root = ET.fromstring(text)
        assert root.tag.endswith("svg")
        assert "href" not in text and "http://" not in text.replace(
            'xmlns="http://www.w3.org/2000/svg"', "")
