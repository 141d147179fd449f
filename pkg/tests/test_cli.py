import json

import pytest

from dtransit.cli import run


def write(tmp_path, name, doc):
    p = tmp_path / name
    p.write_text(json.dumps(doc), encoding="utf-8")
    return str(p)


FIG3C = {
    "type": "digraph",
    "vertices": ["u", "x", "v", "w"],
    "edges": [["u", "x"], ["x", "v"], ["u", "v"], ["v", "w"], ["w", "x"]],
}
CHAIN_REL = {"type": "relation", "vertices": ["a", "b", "c"],
             "pairs": [["a", "a"], ["b", "b"], ["c", "c"], ["a", "b"], ["b", "c"], ["a", "c"]]}


def test_build_then_check_reports_witness(tmp_path, capsys):
    g = write(tmp_path, "fig3c.json", FIG3C)
    out = str(tmp_path / "R.json")
    assert run(["build", "--from", "allpaths", g, "-o", out]) == 0
    assert run(["check", "--axioms", "b2_1", out]) == 1
    rep = json.loads(capsys.readouterr().out)["reports"][0]
    assert rep["witness"] == {"u": "u", "v": "v", "x": "x", "w": "w"}
    assert "offending element" in rep["rendering"]


def test_reduce(tmp_path, capsys):
    g = write(tmp_path, "c.json", {"type": "digraph", "vertices": ["a", "b", "c"],
                                   "edges": [["a", "b"], ["b", "c"], ["a", "c"]]})
    assert run(["reduce", g]) == 0
    assert json.loads(capsys.readouterr().out)["edges"] == [["a", "b"], ["b", "c"]]


def test_reduce_cycle_is_input_error(tmp_path, capsys):
    g = write(tmp_path, "c.json", {"type": "digraph", "vertices": ["a", "b"], "edges": [["a", "b"], ["b", "a"]]})
    assert run(["reduce", g]) == 2


def test_poset_file_roundtrip(tmp_path, capsys):
    rel = write(tmp_path, "rel.json", CHAIN_REL)
    R, G, A = (str(tmp_path / f) for f in ("R.json", "G.json", "A.json"))
    assert run(["build", "--from", "poset", rel, "-o", R]) == 0
    assert run(["underlying", R, "-o", G]) == 0
    assert run(["build", "--from", "allpaths", G, "-o", A]) == 0
    with open(R, encoding="utf-8") as a, open(A, encoding="utf-8") as b:
        assert a.read() == b.read()


def test_classify_and_graphinfo(tmp_path, capsys):
    rel = write(tmp_path, "rel.json", CHAIN_REL)
    R = str(tmp_path / "R.json")
    run(["build", "--from", "poset", rel, "-o", R])
    assert run(["classify", R]) == 0
    assert json.loads(capsys.readouterr().out)["poset_function"] is True
    g = write(tmp_path, "g.json", FIG3C)
    assert run(["graphinfo", g]) == 0
    info = json.loads(capsys.readouterr().out)
    assert info["dag"] is False and info["sources"] == ["u"]


def test_build_interval_and_reach(tmp_path, capsys):
    g = write(tmp_path, "g.json", FIG3C)
    assert run(["build", "--from", "interval", g]) == 0
    doc = json.loads(capsys.readouterr().out)
    uv = [e for e in doc["entries"] if e["from"] == "u" and e["to"] == "v"][0]
    assert uv["set"] == ["u", "v"]
    assert run(["build", "--from", "reach", g]) == 0
    q = write(tmp_path, "q.json", {"type": "quasimetric", "vertices": ["a", "b"], "d": [[0, 1], ["inf", 0]]})
    assert run(["build", "--from", "interval", q]) == 0


def test_build_wrong_shape(tmp_path, capsys):
    rel = write(tmp_path, "rel.json", CHAIN_REL)
    assert run(["build", "--from", "allpaths", rel]) == 2


def test_mine_exit_codes(capsys):
    assert run(["mine", "--n", "3", "--require", "q", "--forbid", "t2a"]) == 1
    assert json.loads(capsys.readouterr().out)["status"] == "exhausted"
    assert run(["mine", "--n", "3", "--require", "t0,tr2", "--forbid", "b1_1"]) == 0
    assert json.loads(capsys.readouterr().out)["status"] == "witness_found"
    assert run(["mine", "--n", "3", "--require", "t0", "--forbid", "t3", "--random", "--budget", "20"]) == 3
    assert run(["mine", "--n", "4"]) == 2


def test_paths(tmp_path, capsys):
    g = write(tmp_path, "g.json", FIG3C)
    assert run(["paths", g, "--from", "u", "--to", "x"]) == 0
    assert json.loads(capsys.readouterr().out)["paths"] == [["u", "x"], ["u", "v", "w", "x"]]
    assert run(["paths", g, "--from", "u", "--to", "q"]) == 2


def test_paths_budget(tmp_path, capsys):
    labels = list("abcdefg")
    g = write(tmp_path, "k.json", {"type": "digraph", "vertices": labels,
                                   "edges": [[x, y] for x in labels for y in labels if x != y]})
    assert run(["paths", g, "--from", "a", "--to", "b", "--budget", "100"]) == 3
    err = json.loads(capsys.readouterr().err)
    assert err["error"] == "resource"


def test_verify_suite_report(capsys):
    code = run(["verify", "--suite", "paper"])
    doc = json.loads(capsys.readouterr().out)
    assert code == (0 if doc["all_passed"] else 1)
    assert doc["passed"] + doc["failed"] == len(doc["outcomes"])


def test_bad_json_and_usage(tmp_path, capsys):
    p = tmp_path / "bad.json"
    p.write_text('{"type": "digraph",\n "vertices": [', encoding="utf-8")
    assert run(["classify", str(p)]) == 2
    assert "line 2" in json.loads(capsys.readouterr().err)["message"]
    assert run(["check", str(tmp_path / "missing.json")]) == 2
    assert run(["frobnicate"]) == 2
    assert run([]) == 2
    assert run(["check", "--axioms", "zz", str(p)]) == 2


def test_help_exits_cleanly():
    with pytest.raises(SystemExit) as exc:
        run(["--help"])
    assert exc.value.code == 0
