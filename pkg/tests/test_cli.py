import io
import json
from importlib import resources

import jsonschema
import pytest

from aglab import cli
from aglab.errors import TheoremViolation
from aglab.tableio import parse_table, read_table

FIX = str(resources.files("aglab") / "fixtures")
SCHEMA = json.loads((resources.files("aglab") / "schema.json").read_text())


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def run_json(*argv):
    code, out, _ = run(*argv, "--json")
    doc = json.loads(out)
    jsonschema.validate(doc, SCHEMA)
    return code, doc


def f(name):
    return f"{FIX}/{name}.tbl"


def test_classify_ex2():
    code, doc = run_json("classify", f("ex2"))
    assert code == 0
    assert doc["schema"] == 1 and doc["result"]["class3"] == "all-three"


def test_roundtrip_lz2_negative():
    code, out, _ = run("roundtrip", f("lz2"))
    assert code == 1 and "false" in out


def test_census_order2_cia():
    code, doc = run_json("census", "--order", "2", "--class", "cia")
    assert code == 0 and doc["result"]["count"] == 2


SCHEMA_CASES = [
    (["check", f("lz2"), "--law", "invertive"], 1),
    (["check", f("sub5"), "--law", "agss"], 0),
    (["classify", f("lz2")], 1),
    (["inverses", f("ex2")], 0),
    (["inverses", f("lz2")], 1),
    (["derive", f("sub5")], 0),
    (["derive", f("lz2")], 1),
    (["decompose", f("sl2")], 0),
    (["decompose", f("sub5")], 1),
    (["canon", f("sub5")], 0),
    (["iso", f("sl2"), f("z2")], 1),
    (["iso", f("add5"), f("add5")], 0),
    (["autos", f("add5"), "--involutive", "--efixed"], 0),
    (["construct", f("add5"), "--auto", "0,4,3,2,1"], 0),
    (["extract", f("sub5")], 0),
    (["extract", f("lz2")], 1),
    (["roundtrip", f("ex2")], 0),
    (["aggroup", f("sub5")], 0),
    (["aggroup", f("ex2")], 1),
    (["ideals", f("ex2")], 0),
    (["inflate", f("sl2"), "--sizes", "1,2"], 0),
    (["deflate", f("infl3")], 0),
    (["deflate", f("lz2")], 1),
    (["census", "--order", "3", "--class", "ag_group", "--timing"], 0),
    (["omega", "--order", "2"], 0),
    (["construct", f("add5"), "--auto", "0,2,4,1,3"], 2),
    (["census", "--order", "6", "--class", "ag"], 2),
]


@pytest.mark.parametrize("argv, code", SCHEMA_CASES, ids=[" ".join(a[:1] + a[2:3]) for a, _ in SCHEMA_CASES])
def test_json_reports_validate(argv, code):
    got, doc = run_json(*argv)
    assert got == code
    assert doc["command"] == argv[0]
    if code == 2:
        assert doc["error"] == "input"
    else:
        assert doc["verdict"] is (code == 0)


def test_check_counterexample_labels():
    _, doc = run_json("check", f("lz2"), "--law", "invertive")
    assert doc["result"]["counterexample"]["elements"] == ["0", "0", "1"]


def test_derive_writes_table(tmp_path):
    out = tmp_path / "d.tbl"
    code, text, _ = run("derive", f("sub5"), "--out", str(out))
    assert code == 0
    assert read_table(out).same_table(read_table(f("add5")))
    assert parse_table(text).same_table(read_table(f("add5")))


def test_construct_and_extract_files(tmp_path):
    out = tmp_path / "c.tbl"
    assert run("construct", f("add5"), "--auto", "0 4 3 2 1", "--out", str(out))[0] == 0
    assert read_table(out).same_table(read_table(f("sub5")))
    code, doc = run_json("extract", str(out))
    assert doc["result"]["automorphism"] == ["0", "4", "3", "2", "1"]


def test_inflate_out(tmp_path):
    out = tmp_path / "i.tbl"
    assert run("inflate", f("sl2"), "--sizes", "1,2", "--out", str(out))[0] == 0
    assert read_table(out).same_table(read_table(f("infl3")))


def test_emit_tables(tmp_path):
    code, doc = run_json("census", "--order", "3", "--class", "cia", "--emit-tables", str(tmp_path))
    files = sorted(tmp_path.iterdir())
    assert len(files) == doc["result"]["count"]
    assert [list(map(list, read_table(p).rows)) for p in files] == doc["result"]["canonical_tables"]


def test_census_json_is_worker_independent():
    outs = {run("census", "--order", "3", "--class", "agss", "--jobs", j, "--json")[1]
            for j in ("1", "2", "8")}
    assert len(outs) == 1


def test_input_errors(tmp_path):
    assert run("classify", str(tmp_path / "missing.tbl"))[0] == 2
    bad = tmp_path / "bad.tbl"
    bad.write_text("2\n0 1\n0 1\n1 q\n")
    code, _, err = run("classify", str(bad))
    assert code == 2 and "line 4" in err
    assert run("check", f("sl2"), "--law", "bogus")[0] == 2
    assert run()[0] == 2


def test_max_order_env(monkeypatch):
    monkeypatch.setenv("AGLAB_MAX_ORDER", "4")
    assert run("classify", f("add5"))[0] == 2
    assert run("classify", f("add4"))[0] == 0


def test_theorem_violation_exit_code(monkeypatch):
    def boom(g, strict=True):
        raise TheoremViolation("forced")
    monkeypatch.setattr(cli, "classify", boom)
    code, doc = run_json("classify", f("ex2"))
    assert code == 3 and doc["error"] == "THEOREM-VIOLATION"
    assert run("classify", f("ex2"))[0] == 3


def test_human_output():
    code, out, _ = run("aggroup", f("ex2"))
    assert code == 1
    assert 'left_ideal_witness: ["a"]' in out and "verdict: no" in out


def test_module_entry_point():
    import subprocess
    import sys
    res = subprocess.run([sys.executable, "-m", "aglab.cli", "classify", f("sl2"), "--json"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and json.loads(res.stdout)["verdict"] is True
