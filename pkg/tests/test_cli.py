"""Command-line driver: flags, exit codes, file formats, retry logging.

JSON exports are checked against the documented schema and re-imported;
DOT exports are parsed by a small grammar.  Slow pairs are exercised in
the acceptance suite, not here.
"""

import json
import os
import re

import pytest

from tautilt.cli import load_hasse, main


def run_cli(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


# -- catalog --


def test_catalog_listing(capsys):
    code, out, _ = run_cli(["catalog"], capsys)
    assert code == 0
    for name in ("C2", "C3", "C5", "C3-C3xC3", "C5-C5xC2", "S3-S3xC3",
                 "A4-S4", "A5-S5", "C3-S3"):
        assert name in out
    assert "p-group" in out and "cyclic" in out
    assert "sub=6 super=70" in out


# -- enumerate --


def test_enumerate_counts_and_files(tmp_path, capsys):
    code, out, _ = run_cli(["enumerate", "--pair", "C5", "--side", "sub",
                            "--out", str(tmp_path)], capsys)
    assert code == 0
    assert "2 vertices" in out
    base = tmp_path / "C5.sub.principal"
    assert (base.parent / (base.name + ".hasse.json")).exists()
    assert (base.parent / (base.name + ".hasse.dot")).exists()


def test_enumerate_json_schema(tmp_path, capsys):
    code, _, _ = run_cli(["enumerate", "--pair", "S3-S3xC3", "--side", "sub",
                          "--out", str(tmp_path)], capsys)
    assert code == 0
    payload = load_hasse(str(tmp_path / "S3-S3xC3.sub.principal.hasse.json"))
    assert set(payload["algebra"]) == {"dim", "simples"}
    assert payload["algebra"]["dim"] == 6
    assert sorted(payload["algebra"]["simples"]) == [1, 1]
    assert len(payload["vertices"]) == 6
    for v in payload["vertices"]:
        assert set(v) == {"id", "g_vector", "m_dims", "p_dims"}
        assert len(v["g_vector"]) == 2
    for a in payload["arrows"]:
        assert set(a) == {"from", "to", "label_dim_vector"}
        assert len(a["label_dim_vector"]) == 2
    assert payload["complete"] is True
    assert payload["field"] == {"p": 3, "m": 1}


def _quiver_key(payload):
    """Isomorphism-invariant canonical form of a labeled quiver."""
    vk = {v["id"]: (tuple(v["g_vector"]), tuple(v["m_dims"]),
                    tuple(v["p_dims"])) for v in payload["vertices"]}
    arrows = sorted((vk[a["from"]], vk[a["to"]],
                     tuple(a["label_dim_vector"])) for a in payload["arrows"])
    return sorted(vk.values()), arrows


def test_json_round_trip(tmp_path, capsys):
    code, _, _ = run_cli(["enumerate", "--pair", "A4-S4", "--side", "super",
                          "--out", str(tmp_path)], capsys)
    assert code == 0
    path = str(tmp_path / "A4-S4.super.covering.hasse.json")
    payload = load_hasse(path)
    assert len(payload["vertices"]) == 6
    # a relabeled copy is recognized as the same labeled quiver
    n = len(payload["vertices"])
    perm = {i: (i * 5 + 3) % n for i in range(n)}
    assert sorted(perm.values()) == list(range(n))
    shuffled = {
        "algebra": payload["algebra"],
        "vertices": sorted(
            [{**v, "id": perm[v["id"]]} for v in payload["vertices"]],
            key=lambda v: v["id"]),
        "arrows": [{**a, "from": perm[a["from"]], "to": perm[a["to"]]}
                   for a in payload["arrows"]],
    }
    assert _quiver_key(shuffled) == _quiver_key(payload)
    with open(path, "r", encoding="utf-8") as fh:
        again = json.load(fh)
    assert _quiver_key(again) == _quiver_key(payload)


DOT_HEADER = re.compile(r'^digraph "[^"]+" \{$')
DOT_NODE = re.compile(r'^  (\d+) \[label="[^"]*"\];$')
DOT_ARROW = re.compile(r'^  (\d+) -> (\d+) \[label="[^"]*"\];$')


def parse_dot(text: str):
    """Minimal grammar: header, rankdir, node lines, arrow lines, brace."""
    lines = text.strip().split("\n")
    assert DOT_HEADER.match(lines[0]), lines[0]
    assert lines[1] == "  rankdir=TB;"
    assert lines[-1] == "}"
    nodes, arrows = set(), []
    for line in lines[2:-1]:
        mn = DOT_NODE.match(line)
        ma = DOT_ARROW.match(line)
        assert mn or ma, f"unparsed DOT line: {line!r}"
        if mn:
            nodes.add(int(mn.group(1)))
        else:
            arrows.append((int(ma.group(1)), int(ma.group(2))))
    return nodes, arrows


def test_dot_output(tmp_path, capsys):
    code, _, _ = run_cli(["enumerate", "--pair", "C3-C3xC3", "--side", "sub",
                          "--out", str(tmp_path)], capsys)
    assert code == 0
    text = (tmp_path / "C3-C3xC3.sub.principal.hasse.dot").read_text()
    nodes, arrows = parse_dot(text)
    payload = load_hasse(str(tmp_path / "C3-C3xC3.sub.principal.hasse.json"))
    assert nodes == {v["id"] for v in payload["vertices"]}
    assert sorted(arrows) == sorted(
        (a["from"], a["to"]) for a in payload["arrows"])


def test_enumerate_block_selectors(tmp_path, capsys):
    code, out, _ = run_cli(["enumerate", "--pair", "C3-S3", "--side", "sub",
                            "--out", str(tmp_path)], capsys)
    assert code == 0
    assert "field event: FieldNotSplitting degree 2 at m=1" in out
    payload = load_hasse(str(tmp_path / "C3-S3.sub.index1.hasse.json"))
    assert payload["field"] == {"p": 5, "m": 2}
    assert payload["field_events"][0]["event"] == "FieldNotSplitting"
    assert len(payload["vertices"]) == 2
    code, out, _ = run_cli(["enumerate", "--pair", "C3-S3", "--side", "sub",
                            "--block", "principal", "--out", str(tmp_path)],
                           capsys)
    assert code == 0
    assert (tmp_path / "C3-S3.sub.principal.hasse.json").exists()
    code, out, _ = run_cli(["enumerate", "--pair", "C3", "--side", "sub",
                            "--block", "index", "0", "--out", str(tmp_path)],
                           capsys)
    assert code == 0
    assert (tmp_path / "C3.sub.index0.hasse.json").exists()


def test_enumerate_budget_exit(tmp_path, capsys):
    code, out, err = run_cli(["enumerate", "--pair", "S3-S3xC3",
                              "--side", "sub", "--max-vertices", "3",
                              "--out", str(tmp_path)], capsys)
    assert code == 1
    assert "budget" in err
    payload = load_hasse(str(tmp_path / "S3-S3xC3.sub.principal.hasse.json"))
    assert payload["complete"] is False


def test_unknown_pair_exit2(tmp_path, capsys):
    code, _, err = run_cli(["enumerate", "--pair", "NOPE",
                            "--out", str(tmp_path)], capsys)
    assert code == 2 and "unknown pair" in err and "A5-S5" in err
    code, _, err = run_cli(["verify", "--pair", "NOPE",
                            "--out", str(tmp_path)], capsys)
    assert code == 2 and "unknown pair" in err


def test_bad_block_exit2(tmp_path, capsys):
    code, _, err = run_cli(["enumerate", "--pair", "C3", "--block", "third",
                            "--out", str(tmp_path)], capsys)
    assert code == 2 and "bad block selector" in err


# -- verify --


def test_verify_a4_s4(tmp_path, capsys):
    code, out, _ = run_cli(["verify", "--pair", "A4-S4",
                            "--out", str(tmp_path)], capsys)
    assert code == 0
    assert "all checks passed" in out
    rep = json.load(open(tmp_path / "A4-S4.report.json"))
    assert rep["pass"] is True and rep["failing"] == []
    assert rep["counts"] == {"sub": 2, "super": 6}
    assert rep["counting"] is True
    assert rep["hypotheses"]["pass"] and rep["properties"]["pass"]
    assert rep["squares"]["pass"]
    assert "embedding" not in rep
    assert rep["field_events"] == []


def test_verify_embedding_report(tmp_path, capsys):
    code, _, _ = run_cli(["verify", "--pair", "C3-C3xC3",
                          "--out", str(tmp_path)], capsys)
    assert code == 0
    rep = json.load(open(tmp_path / "C3-C3xC3.report.json"))
    assert rep["embedding"]["isomorphism"] is True
    assert rep["counts_match"] is True


def test_verify_field_events_in_report(tmp_path, capsys):
    code, out, _ = run_cli(["verify", "--pair", "C3-S3",
                            "--out", str(tmp_path)], capsys)
    assert code == 0
    assert "field event" in out
    rep = json.load(open(tmp_path / "C3-S3.report.json"))
    assert rep["field"]["m"] == 2
    assert rep["field_events"] == [
        {"event": "FieldNotSplitting", "degree": 2, "at_m": 1}]


def test_threads_env(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("TAUTILT_THREADS", "4")
    code, _, _ = run_cli(["verify", "--pair", "C2", "--out", str(tmp_path)],
                         capsys)
    assert code == 0
    assert json.load(open(tmp_path / "C2.report.json"))["threads"] == 4
    monkeypatch.setenv("TAUTILT_THREADS", "9999")
    code, _, _ = run_cli(["verify", "--pair", "C2", "--out", str(tmp_path)],
                         capsys)
    assert code == 0
    assert json.load(open(tmp_path / "C2.report.json"))["threads"] == 64
    monkeypatch.setenv("TAUTILT_THREADS", "nope")
    code, _, _ = run_cli(["verify", "--pair", "C2", "--out", str(tmp_path)],
                         capsys)
    assert code == 0
    assert json.load(open(tmp_path / "C2.report.json"))["threads"] == 1


def test_field_degree_override(tmp_path, capsys):
    code, out, _ = run_cli(["enumerate", "--pair", "C3-S3", "--side", "sub",
                            "--field-degree", "2", "--out", str(tmp_path)],
                           capsys)
    assert code == 0
    assert "field event" not in out
    payload = load_hasse(str(tmp_path / "C3-S3.sub.index1.hasse.json"))
    assert payload["field"] == {"p": 5, "m": 2}
