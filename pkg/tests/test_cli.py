import json
from importlib import resources

import jsonschema
import pytest

from cyclogrs.cli import run


def schema(name):
    return json.loads((resources.files("cyclogrs") / "schemas" / f"{name}.json").read_text())


def invoke(capsys, *argv):
    code = run([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_cosets_tsv(capsys):
    code, out, _ = invoke(capsys, "cosets", "--p", 2, "--m", 4)
    assert code == 0
    rows = [line.split("\t") for line in out.splitlines()]
    assert len(rows) == 5
    assert rows[1] == ["1", "4", "1,2,4,8"]


def test_cosets_json(capsys):
    code, out, _ = invoke(capsys, "cosets", "--p", 5, "--m", 3, "--format", "json")
    data = json.loads(out)
    jsonschema.validate(data, schema("cosets"))
    assert {"b": 31, "size": 1, "elements": [31]} in data


def test_field(capsys):
    code, out, _ = invoke(capsys, "field", "--p", 2, "--m", 8)
    data = json.loads(out)
    jsonschema.validate(data, schema("field"))
    assert data["field"] == "2^8/1,0,1,1,1,0,0,0,1" and data["N"] == 255


def test_field_tsv(capsys):
    _, out, _ = invoke(capsys, "field", "--field", "2^4/1,1,0,0,1", "--format", "tsv")
    assert "N\t15\n" in out


def test_bound_fig5(capsys):
    code, out, _ = invoke(capsys, "bound", "--p", 5, "--m", 3, "--cosets", 1, "--k", 34)
    assert code == 0
    data = json.loads(out)
    jsonschema.validate(data, schema("bound_report"))
    assert data["bound"] <= 33 and data["exact_dim"] == 33


def test_bound_table(capsys):
    _, out, _ = invoke(capsys, "bound", "--p", 5, "--m", 3, "--twist", "x^25 + x^5 + x", "--k", 33,
                       "--format", "table")
    lines = out.splitlines()
    assert lines[0].startswith("n=100  k=33")
    assert lines[-4].split()[-1] == "35" and "exact dimension" in lines[-3]


def test_bound_sweep_with_report(capsys, tmp_path):
    code, out, _ = invoke(capsys, "bound", "--p", 2, "--m", 4, "--cosets", 1, "--sweep",
                          "--report", tmp_path, "--format", "json")
    assert code == 0
    data = json.loads(out)
    jsonschema.validate(data, schema("bound_sweep"))
    assert all(r["bound"] <= r["exact_dim"] for r in data)
    assert (tmp_path / "bound.tsv").exists() and (tmp_path / "bound.png").stat().st_size > 0


def test_bound_zero_cosets_parent(capsys):
    _, out, _ = invoke(capsys, "bound", "--p", 2, "--m", 4, "--zero-cosets", 1, "--k", 11,
                       "--orientation", "parent")
    assert json.loads(out)["bound"] == 11


def test_search_fig5(capsys, tmp_path):
    out_file = tmp_path / "hits.json"
    code, _, _ = invoke(capsys, "search", "--alg", 1, "--p", 5, "--m", 3, "--max-parts", 1,
                        "--bkt", "fig5.csv", "--out", out_file, "--emit-matrices", tmp_path / "mats",
                        "--report", tmp_path / "rep")
    assert code == 0
    hits = json.loads(out_file.read_text())
    jsonschema.validate(hits, schema("hits"))
    params = {(h["n"], h["dim"], h["d_lb"]) for h in hits}
    assert {(100, 33, 35), (100, 36, 34)} <= params
    assert len(list((tmp_path / "mats").iterdir())) == len(hits)
    assert (tmp_path / "rep" / "hits.png").exists()
    assert (tmp_path / "rep" / "hits.tsv").read_text().count("\n") == len(hits) + 1


def test_search_explicit_unions_tsv(capsys):
    code, out, _ = invoke(capsys, "search", "--p", 5, "--m", 3, "--unions", "31,32", "--k-min", 33,
                          "--k-max", 33, "--bkt", "fig5.csv", "--format", "tsv")
    assert code == 0
    assert out.splitlines()[1].split("\t")[:6] == ["alg1", "31,32", "33", "99", "35", "34"]


def test_derive_from_hits(capsys, tmp_path):
    hits_file = tmp_path / "hits.json"
    invoke(capsys, "search", "--p", 5, "--m", 3, "--unions", "31,32", "--k-min", 33, "--k-max", 33,
           "--bkt", "fig5.csv", "--out", hits_file)
    code, out, _ = invoke(capsys, "derive", "--hits", hits_file, "--steps", "P:99;P:98", "--bkt", "fig6.csv")
    assert code == 0
    data = json.loads(out)
    jsonschema.validate(data, schema("hits"))
    assert [(h["n"], h["dim"], h["d_lb"]) for h in data] == [(99, 35, 34), (98, 35, 33), (97, 35, 32)]


def test_derive_from_scratch(capsys):
    code, out, _ = invoke(capsys, "derive", "--p", 5, "--m", 3, "--cosets", "31,32", "--k", 33,
                          "--steps", "S:99", "--bkt", "fig6.csv")
    assert code == 0
    assert [(h["n"], h["dim"], h["d_lb"]) for h in json.loads(out)][-1] == (98, 34, 34)


def test_grs_sfsc_mindist_pipeline(capsys, tmp_path):
    gmat = tmp_path / "g.txt"
    code, out, _ = invoke(capsys, "grs", "--p", 2, "--m", 4, "--cosets", 1, "--k", 2, "--matrix-out", gmat)
    assert code == 0
    summary = json.loads(out)
    jsonschema.validate(summary, schema("code_summary"))
    assert (summary["n"], summary["k"], summary["d_lb"]) == (8, 2, 7)
    code, out, _ = invoke(capsys, "mindist", "--p", 2, "--m", 4, "--matrix", gmat)
    data = json.loads(out)
    jsonschema.validate(data, schema("mindist"))
    assert data["d"] == 7
    smat = tmp_path / "s.txt"
    for method in ("delsarte", "kernel"):
        code, out, _ = invoke(capsys, "sfsc", "--p", 2, "--m", 4, "--matrix", gmat, "--method", method,
                              "--matrix-out", smat)
        assert code == 0 and json.loads(out)["m"] == 1


def test_sfsc_from_cosets(capsys):
    code, out, _ = invoke(capsys, "sfsc", "--p", 5, "--m", 3, "--cosets", 1, "--k", 33)
    data = json.loads(out)
    jsonschema.validate(data, schema("code_summary"))
    assert (data["n"], data["k"], data["d_lb"]) == (100, 36, 34)
    code, out, _ = invoke(capsys, "sfsc", "--p", 5, "--m", 3, "--twist", "x^25 + x^5 + x", "--k", 33)
    assert json.loads(out)["k"] == 36


def test_grs_dual_flag(capsys):
    _, out, _ = invoke(capsys, "grs", "--p", 2, "--m", 4, "--cosets", 1, "--k", 2, "--dual")
    assert json.loads(out)["k"] == 6


def test_bkt_import_and_lookup(capsys, tmp_path):
    merged = tmp_path / "merged.csv"
    code, out, _ = invoke(capsys, "bkt", "import", "fig1.csv", "fig2.csv", "--p", 2, "--out", merged)
    assert code == 0 and json.loads(out)["entries"] == 20
    code, out, _ = invoke(capsys, "bkt", "lookup", "--p", 2, "--n", 192, "--k", 66, "--d", 40, "--bkt", merged)
    data = json.loads(out)
    jsonschema.validate(data, schema("bkt_lookup"))
    assert data["d_best"] == 39 and data["verdict"] == "improves"


def test_seedless_is_accepted(capsys):
    code, out, _ = invoke(capsys, "--seedless", "cosets", "--p", 2, "--m", 2)
    assert code == 0 and out.splitlines()[1] == "1\t2\t1,2"


# --- error handling -------------------------------------------------------------------

@pytest.mark.parametrize("argv", [
    ["bogus"],
    ["cosets", "--p", "2", "--m", "4", "--frobnicate"],
    ["bound", "--p", "5", "--m", "3", "--k", "3"],
    ["cosets"],
    ["sfsc", "--p", "2", "--m", "4", "--cosets", "1"],
])
def test_usage_errors_exit_2(capsys, argv):
    code, _, err = invoke(capsys, *argv)
    assert code == 2 and err


@pytest.mark.parametrize("argv", [
    ["field", "--p", "6", "--m", "2"],
    ["bound", "--p", "5", "--m", "3", "--cosets", "5", "--k", "3"],
    ["bound", "--p", "5", "--m", "3", "--cosets", "1", "--k", "101"],
    ["search", "--p", "5", "--m", "3", "--max-parts", "1", "--bkt", "no_such_table.csv"],
    ["mindist", "--p", "2", "--m", "4", "--matrix", "/nonexistent"],
    ["derive", "--p", "2", "--m", "4", "--cosets", "1", "--k", "2", "--steps", "S:9"],
])
def test_computation_errors_exit_1(capsys, argv):
    code, _, err = invoke(capsys, *argv)
    assert code == 1
    assert len(err.strip().splitlines()) == 1


def test_identical_flags_identical_bytes(capsys):
    _, first, _ = invoke(capsys, "bkt", "lookup", "--p", "2", "--n", "15", "--k", "7")
    _, again, _ = invoke(capsys, "bkt", "lookup", "--p", "2", "--n", "15", "--k", "7")
    assert first == again
    a = invoke(capsys, *["bound", "--p", "3", "--m", "3", "--cosets", "1,2", "--sweep"])
    b = invoke(capsys, *["bound", "--p", "3", "--m", "3", "--cosets", "1,2", "--sweep"])
    assert a == b
