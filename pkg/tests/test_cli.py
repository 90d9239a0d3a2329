import json
from pathlib import Path

import pytest

from symbreak.cli import main, parse_family, UsageError
from symbreak.families import petersen

DOCS = Path(__file__).resolve().parent.parent / "docs"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def schema(name):
    return json.loads((DOCS / name).read_text())


def check(obj, name):
    jsonschema = pytest.importorskip("jsonschema")
    jsonschema.validate(obj, schema(name))


def test_compute_petersen(capsys):
    code, out = run(capsys, "compute", "--family", "petersen", "--theta", "--dnum", "--motion",
                    "--aut-order")
    assert code == 0
    obj = json.loads(out)
    check(obj, "compute.schema.json")
    assert obj["theta"] == 8 and obj["dnum"] == 3 and obj["aut_order"] == 120
    assert obj["n"] == 10 and len(obj["digest"]) == 16


def test_compute_default_fields(capsys):
    code, out = run(capsys, "compute", "--graph6", "Bw")
    obj = json.loads(out)
    assert code == 0 and obj["theta"] == 3 and obj["aut_order"] == 6
    assert obj["theta_witness_order"] == 2
    check(obj, "compute.schema.json")


def test_compute_asymmetric(capsys):
    code, out = run(capsys, "compute", "--family", "g6fixture asym6", "--motion", "--theta")
    obj = json.loads(out)
    assert code == 0 and obj["theta"] == 1
    assert obj["motion"] is None and obj["theta_witness"] is None
    check(obj, "compute.schema.json")


def test_compute_counts(capsys):
    code, out = run(capsys, "compute", "--family", "path 4", "--phi", "2", "--Phi", "3")
    obj = json.loads(out)
    assert code == 0
    assert obj["phi"] == {"k": 2, "value": 6}
    assert obj["Phi"] == {"k": 3, "value": 36}


def test_compute_edges_file(tmp_path, capsys):
    f = tmp_path / "g.txt"
    f.write_text("3\n0 1\n1 2\n")
    code, out = run(capsys, "compute", "--edges", str(f))
    assert code == 0 and json.loads(out)["source"] == "edges"


def test_compute_johnson_order(capsys):
    code, out = run(capsys, "compute", "--family", "johnson 7 3 2", "--aut-order")
    assert code == 0 and json.loads(out)["aut_order"] == 40320


def test_compute_error_json(capsys):
    code, out = run(capsys, "compute", "--family", "complete 9", "--group-cap", "100")
    obj = json.loads(out)
    assert code == 1 and obj["error"] == "GroupTooLarge" and obj["cap"] == 100
    check(obj, "error.schema.json")
    code, out = run(capsys, "compute", "--family", "complete 6", "--dnum",
                    "--coloring-budget", "3")
    obj = json.loads(out)
    assert code == 1 and obj["budget"] == 3


@pytest.mark.parametrize("argv", [
    ["compute", "--graph6", "~~"],
    ["compute", "--family", "wheel 5"],
    ["compute", "--family", "cycle 2"],
    ["compute"],
    ["generate", "--family", "johnson 3 2 1"],
])
def test_usage_errors(capsys, argv):
    # argparse exits on its own; bad family specs come back as a return code
    try:
        code = main(argv)
    except SystemExit as exc:
        code = exc.code
    assert code == 2
    assert capsys.readouterr().out == ""


def test_generate(capsys):
    code, out = run(capsys, "generate", "--family", "kneser 4 2")
    assert code == 0 and out == "E@Q?\n"
    code, out = run(capsys, "generate", "--family", "cycle 4", "--edges")
    assert out.splitlines() == ["4", "0 1", "0 3", "1 2", "2 3"]


def test_parse_family():
    assert parse_family("petersen") == petersen()
    assert parse_family("circulant 6 1,5").n == 6
    with pytest.raises(UsageError):
        parse_family("")
    with pytest.raises(UsageError):
        parse_family("g6fixture nope")


def test_verify_union(capsys):
    code, out = run(capsys, "verify", "--suite", "union", "--trials", "10", "--seed", "3")
    obj = json.loads(out)
    assert code == 0 and obj["tested"] == 10 and obj["violations"] == 0
    check(obj, "report.schema.json")


def test_verify_small_pretty(capsys):
    code, out = run(capsys, "verify", "--suite", "small", "--nmax", "3", "--pretty")
    assert code == 0 and "tested" in out and not out.startswith("{")


def test_verify_fixtures_reports_violation(capsys):
    code, out = run(capsys, "verify", "--suite", "fixtures")
    obj = json.loads(out)
    check(obj, "report.schema.json")
    assert code == (0 if obj["violations"] == 0 else 1)
