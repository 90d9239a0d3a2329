import json
import random
from pathlib import Path

import pytest

from symbreak.errors import TooLarge
from symbreak.families import JohnsonParams
from symbreak.graph import parse_graph6
from symbreak.autsearch import isomorphic
from symbreak.families import path
from symbreak.verify import (VerificationReport, check_graph, johnson_cells, random_union,
                             scan_small_graphs, transposition_cycles, verify_johnson_grid,
                             verify_union_random)

DOCS = Path(__file__).resolve().parent.parent / "docs"


def validate(obj, name):
    jsonschema = pytest.importorskip("jsonschema")
    schema = json.loads((DOCS / name).read_text())
    jsonschema.validate(obj, schema)


def test_scan_n4():
    rep = scan_small_graphs(nmax=4, workers=1)
    assert rep.ok
    assert rep.tested == 1 + 2 + 8 + 64
    assert rep.summary["theta_histogram"]["2"] == {"2": 2}
    # threshold 3 on four vertices happens only for the 12 labeled paths
    p3s = rep.summary["theta3_graphs"]
    assert set(p3s) == {"3", "4"}
    assert len(p3s["4"]) == 12
    assert all(isomorphic(parse_graph6(s), path(4)) for s in p3s["4"])
    validate(rep.to_json(), "report.schema.json")


def test_scan_n2():
    rep = scan_small_graphs(nmax=2)
    assert rep.ok and rep.tested == 3


def test_scan_parallel_matches_serial():
    a = scan_small_graphs(nmax=5, workers=1)
    b = scan_small_graphs(nmax=5, workers=2)
    assert a.summary == b.summary and a.tested == b.tested


def test_scan_too_large():
    with pytest.raises(TooLarge):
        scan_small_graphs(nmax=8)


def test_check_graph_flags_nothing_on_path():
    bad, t, d = check_graph(path(4), 1000)
    assert bad == [] and (t, d) == (3, 2)


def test_report_json_and_fail():
    rep = VerificationReport("demo", tested=1)
    rep.fail(path(3), "bad")
    out = rep.to_json()
    assert out["violations"] == 1 and not rep.ok
    assert out["counterexamples"] == [{"graph6": "Bg", "detail": "bad"}]
    validate(out, "report.schema.json")


def test_transposition_cycles():
    assert transposition_cycles(JohnsonParams(5, 2, 2)) == (True, 7)


def test_johnson_cells_bound():
    cells = list(johnson_cells(20))
    assert JohnsonParams(6, 3, 2) in cells
    assert all(c.k >= 2 for c in cells)


def test_johnson_grid_small():
    rep = verify_johnson_grid(max_vertices=15)
    assert rep.ok, rep.counterexamples
    validate(rep.to_json(), "report.schema.json")


def test_union_random_deterministic():
    a = verify_union_random(trials=20, seed=5)
    b = verify_union_random(trials=20, seed=5)
    assert a.ok and a.summary == b.summary
    validate(a.to_json(), "report.schema.json")


def test_random_union_respects_limits():
    rng = random.Random(2)
    for _ in range(30):
        comps, mode = random_union(rng, 14, 20_000)
        assert 2 <= len(comps) and sum(c.n for c in comps) <= 14
        assert mode in ("sym", "asym", "mixed")


def test_union_trials_must_be_positive():
    with pytest.raises(ValueError):
        verify_union_random(trials=0)
