"""End-to-end smoke tests for the python bindings and the CLI."""

import json
import os
import subprocess

import pytest

import comax


def test_ring_basics():
    r = comax.ring("Z6")
    assert r.size == 6
    assert r.label == "Z6"
    assert r.units() == [1, 5]
    assert r.is_commutative()
    assert r.add(3, 4) == 1
    assert r.mul(2, 3) == 0

    m = comax.ring("M2(GF(2))")
    assert m.size == 16
    assert not m.is_commutative()
    assert len(m.units()) == 6


def test_spec_errors():
    with pytest.raises(ValueError):
        comax.ring("GF(6)")
    with pytest.raises(ValueError):
        comax.ring("Z1")


def test_ideals_and_radical():
    r = comax.ring("Z12")
    ms = comax.maximal_left_ideals(r)
    assert sorted(tuple(i.elements) for i in ms) == [(0, 2, 4, 6, 8, 10), (0, 3, 6, 9)]
    j = comax.jacobson_radical(r)
    assert j.elements == [0, 6]
    assert j.is_two_sided()

    m2 = comax.ring("M2(GF(3))")
    assert len(comax.maximal_left_ideals(m2)) == 4


def test_graph_and_analysis():
    r = comax.ring("Z6")
    g = comax.build_graph(r, "core")
    assert g.vertices == [2, 3, 4]
    assert g.edges() == [(0, 1), (1, 2)]
    assert comax.universal_vertices(g) == [3]
    assert comax.chromatic_number(g)["n"] == 2
    assert comax.max_clique(g)["members"] == [2, 3]
    parts = comax.is_complete_multipartite(g)
    assert parts is not None
    assert sorted(sorted(p) for p in parts) == [[2, 4], [3]]

    payload = json.loads(g.to_json())
    assert payload["ring"] == "Z6"
    assert payload["vertices"] == ["2", "3", "4"]


def test_constructive_clique():
    r = comax.ring("Z30")
    ms = comax.maximal_left_ideals(r)
    built = comax.theorem2_clique(r, ms)
    assert built["members"] == [2, 3, 5]
    assert built["construction"] == "theorem2"


def test_structure():
    w = comax.wedderburn_report(comax.ring("Z6"))
    assert [(c["n"], c["q"]) for c in w["components"]] == [(1, 2), (1, 3)]
    assert w["consistent"]

    iso = comax.ring_isomorphic(comax.ring("Z6"), comax.ring("Z2 x GF(3)"))
    assert iso["verdict"] == "isomorphic"
    assert iso["witness"] is not None

    not_iso = comax.ring_isomorphic(comax.ring("Z4"), comax.ring("Z2 x Z2"))
    assert not_iso["verdict"] == "not_isomorphic"
    assert not_iso["obstruction"] == "additive-order histogram"


def test_blowup_and_quotient():
    rep = comax.blowup_check(comax.ring("Z12"))
    assert rep["ok"]
    assert rep["fiber_size"] == 2

    z12 = comax.ring("Z12")
    ring, projection, section = comax.quotient_by(z12, comax.jacobson_radical(z12))
    assert ring.size == 6
    assert len(projection) == 12
    assert len(section) == 6


def test_t2_table_ring():
    t = comax.t2(2)
    assert t.size == 8
    assert not t.is_commutative()
    tables = json.loads(comax.t2_table_json(2))
    assert tables["size"] == 8
    assert len(tables["add"]) == 8
    assert len(tables["mul"]) == 8


def test_catalog_checks():
    entries = comax.default_catalog()
    assert len(entries) == 100
    labels = [e["label"] for e in entries]
    assert "M2(GF(5))" in labels and "T2(GF(2))" in labels

    reports = comax.run_catalog("CEX")
    assert len(reports) == 1
    assert reports[0]["verdict"] == "pass"

    t5 = comax.run_catalog("T5")
    verdicts = {r["verdict"] for r in t5}
    assert "fail" not in verdicts
    passing = [r["ring_label"] for r in t5 if r["verdict"] == "pass"]
    assert "Z6" in passing and "M2(GF(3))" in passing


CLI = os.environ.get("COMAX_CLI")


@pytest.mark.skipif(not CLI, reason="COMAX_CLI not set")
def test_cli_roundtrip(tmp_path):
    out = subprocess.run(
        [CLI, "ring", "graph", "Z6", "--variant", "core", "--format", "json"],
        check=True,
        capture_output=True,
        text=True,
    )
    payload = json.loads(out.stdout)
    assert payload["vertices"] == ["2", "3", "4"]
    assert payload["edges"] == [[0, 1], [1, 2]]

    bad = subprocess.run([CLI, "ring", "info", "GF(6)"], capture_output=True)
    assert bad.returncode == 2

    report = tmp_path / "report.json"
    ok = subprocess.run(
        [CLI, "verify", "--theorem", "R6", "--json", str(report)], capture_output=True
    )
    assert ok.returncode == 0
    data = json.loads(report.read_text())
    r6 = [r for r in data if r["verdict"] == "pass"]
    assert len(r6) == 4  # one per M2(GF(q)) entry


@pytest.mark.skipif(not CLI, reason="COMAX_CLI not set")
def test_cli_size_cap_env():
    env = dict(os.environ, COMAX_SIZE_CAP="100")
    r = subprocess.run([CLI, "ring", "info", "Z200"], capture_output=True, env=env)
    assert r.returncode == 3


@pytest.mark.skipif(not CLI, reason="COMAX_CLI not set")
def test_cli_catalog_and_ideals():
    out = subprocess.run(
        [CLI, "catalog", "list"], check=True, capture_output=True, text=True
    )
    lines = out.stdout.strip().splitlines()
    assert lines[-1] == "100 entries"
    assert len(lines) == 101

    ideals = subprocess.run(
        [CLI, "ring", "ideals", "Z6"], check=True, capture_output=True, text=True
    )
    assert "maximal left ideals of Z6: 2" in ideals.stdout
    assert "{0, 2, 4}" in ideals.stdout
    assert "{0, 3}" in ideals.stdout

    dot = subprocess.run(
        [CLI, "ring", "graph", "Z6", "--variant", "core", "--format", "dot"],
        check=True,
        capture_output=True,
        text=True,
    )
    assert '"3" -- "4";' in dot.stdout

    t1a = subprocess.run([CLI, "verify", "--theorem", "T1a"], capture_output=True)
    assert t1a.returncode == 0
