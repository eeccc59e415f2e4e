import io
import json
from pathlib import Path

import pytest

from qbent.cli import SCHEMA_VERSION, main
from qbent.functions import parse_qfunc

GOLDEN = Path(__file__).parent / "golden"


def run(argv, stdin=None, monkeypatch=None):
    out = io.StringIO()
    if stdin is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = main(argv, out=out)
    text = out.getvalue()
    # exactly one JSON document
    assert text.count("\n") == 1
    return code, text, json.loads(text)


@pytest.mark.parametrize(
    "argv, golden",
    [
        (["analyze", "T.qf"], "analyze_T.json"),
        (["analyze", "T.qf", "--strong-nl"], "analyze_T_strong.json"),
        (["analyze", "qn_3_1.qf"], "analyze_qn_3_1.json"),
        (["analyze", "R.a", "--dump-spectrum"], "analyze_R_spectrum.json"),
        (["construct", "qn", "--q", "3", "--n", "1"], "construct_qn_3_1.json"),
        (["construct", "semilinear", "--b", "b_y1y2.qf"], "construct_semilinear.json"),
        (["construct", "minimal-pair", "--q", "2", "--s", "2", "--t", "0"], "construct_minimal_pair.json"),
        (["verify", "thm2", "--q", "2", "--n", "4", "--s", "2", "--stable"], "verify_thm2.json"),
        (["verify", "prop6", "--q", "3", "--n", "2", "--stable"], "verify_prop6.json"),
        (["search", "--q", "2", "--n", "2", "--class", "bent"], "search_bent_2_2.json"),
    ],
)
def test_golden_outputs(argv, golden, monkeypatch):
    monkeypatch.chdir(GOLDEN)
    code, text, _ = run(argv)
    assert code == 0
    assert text == (GOLDEN / golden).read_text()


def test_analyze_report_fields(monkeypatch):
    monkeypatch.chdir(GOLDEN)
    _, _, doc = run(["analyze", "T.qf"])
    assert doc["schema_version"] == SCHEMA_VERSION
    r = doc["report"]
    assert r["is_bent"] and r["plateaued_s"] == 0 and not r["is_regular"] and r["nl"] == 1
    assert sum(r["magnitude_histogram"].values()) == 3 ** r["n"]
    _, _, doc = run(["analyze", "qn_3_1.qf"])
    assert doc["report"]["is_bent"] and doc["report"]["is_regular"]
    assert parse_qfunc(doc["report"]["dual"]).n == 2


def test_analyze_stdin(monkeypatch):
    code, _, doc = run(["analyze", "-"], stdin="3 1\n011\n", monkeypatch=monkeypatch)
    assert code == 0 and doc["report"]["nl"] == 1


def test_analyze_errors(monkeypatch, capsys):
    monkeypatch.chdir(GOLDEN)
    code, _, doc = run(["analyze", "malformed.qf"])
    assert code == 2 and doc["error"] == "usage"
    assert "line 2, column 3" in capsys.readouterr().err
    code, _, _ = run(["analyze", "missing.qf"])
    assert code == 2


def test_strong_nl_budget_exit(monkeypatch):
    monkeypatch.chdir(GOLDEN)
    code, _, doc = run(["analyze", "R.a", "--strong-nl", "--budget", "10"])
    assert code == 3 and doc["error"] == "budget"


def test_construct_writes_files(tmp_path):
    code, _, doc = run(["construct", "minimal-pair", "--q", "2", "--s", "2", "--t", "0", "-o", str(tmp_path / "pair")])
    assert code == 0
    a = parse_qfunc((tmp_path / "pair.a").read_text())
    b = parse_qfunc((tmp_path / "pair.b").read_text())
    assert sum(x != y for x, y in zip(a.table, b.table)) == 4
    assert [o["path"] for o in doc["outputs"]] == [str(tmp_path / "pair.a"), str(tmp_path / "pair.b")]


def test_construct_pipeline(tmp_path):
    t = tmp_path / "T.qf"
    t.write_text("3 1\n011\n")
    e = tmp_path / "e.qf"
    assert run(["construct", "extend", "--input", str(t), "--a", "1", "-o", str(e)])[0] == 0
    code, _, doc = run(["analyze", str(e)])
    assert doc["report"]["plateaued_s"] == 1
    f = tmp_path / "f.qf"
    assert run(["construct", "fix", "--input", str(e), "--a", "0", "-o", str(f)])[0] == 0
    assert run(["analyze", str(f)])[2]["report"]["plateaued_s"] == 1
    q = tmp_path / "q.qf"
    run(["construct", "qn", "--q", "3", "--n", "1", "-o", str(q)])
    code, _, doc = run(["construct", "modify", "--input", str(q), "--basis", "1,0", "--c", "1"])
    assert code == 0
    code, _, doc = run(["construct", "mm-plateaued", "--tau", "0,2,1", "--f", str(t), "--k", "0"])
    assert code == 0 and doc["n"] == 2
    code, _, doc = run(["construct", "diag-squares", "--n", "2"])
    assert doc["outputs"][0]["table"] == "011122122"


def test_construct_glue_overlap(tmp_path):
    q = tmp_path / "q.qf"
    run(["construct", "qn", "--q", "3", "--n", "1", "-o", str(q)])
    code, _, doc = run(["construct", "glue", "--k", "1", "--family", str(q), str(q), str(q)])
    assert code == 2 and doc["error"] == "overlapping-supports" and doc["pair"] == [[0], [1]]


def test_construct_bad_params():
    assert run(["construct", "minimal-pair", "--q", "2", "--s", "1"])[0] == 2
    assert run(["construct", "qn", "--q", "4", "--n", "1"])[0] == 2
    assert run(["construct", "qn", "--q", "3"])[0] == 2
    assert run(["construct", "nosuch"])[0] == 2


def test_verify_exit_codes():
    assert run(["verify", "unknown"])[0] == 2
    assert run(["verify", "thm1", "--q", "3"])[0] == 2
    code, _, doc = run(["verify", "thm2", "--q", "2", "--n", "4", "--s", "2"])
    assert code == 0 and doc["pass"] and doc["counts"]["min_distance"] == 4
    assert "elapsed_ms" in doc


def test_verify_cor3():
    code, _, doc = run(["verify", "cor3", "--q", "3", "--n", "2"])
    assert code == 0 and doc["pass"] and doc["counts"]["regular_bent_neighbors"] == 72


def test_jobs_flag_is_transparent():
    a = run(["verify", "thm1", "--q", "3", "--n", "2", "--stable"])[1]
    b = run(["verify", "thm1", "--q", "3", "--n", "2", "--stable", "--jobs", "2"])[1]
    assert a == b
    a = run(["search", "--q", "3", "--n", "2", "--class", "plateaued(1)", "--limit", "5"])[1]
    b = run(["search", "--q", "3", "--n", "2", "--class", "plateaued(1)", "--limit", "5", "--jobs", "2"])[1]
    assert a == b


def test_search_options():
    code, _, doc = run(["search", "--q", "3", "--n", "1", "--class", "plateaued(0)", "--min-distance"])
    assert code == 0 and doc["summary"]["min_distance"] == 1
    code, _, doc = run(["search", "--q", "3", "--n", "2", "--shard", "1/3", "--class", "bent"])
    assert code == 0 and doc["shard"] == [1, 3]
    assert run(["search", "--q", "2", "--n", "5"])[0] == 3
    assert run(["search", "--q", "2", "--n", "2", "--shard", "x"])[0] == 2
    assert run(["search", "--q", "2", "--n", "2", "--class", "weird"])[0] == 2


def test_no_command():
    assert run([])[0] == 2
