import json
import os

import pytest

from strandkit.cli import main


def run(tmp_path, *argv):
    return main(list(argv))


def test_gen_build_verify_roundtrip(tmp_path):
    g = tmp_path / "g.json"
    rep = tmp_path / "rep.json"
    svg = tmp_path / "rep.svg"
    assert main(["gen", "maximal-outerplanar", "--n", "10", "--seed", "2",
                 "--out", str(g)]) == 0
    assert main(["build", "circle", str(g), "--out", str(rep), "--svg", str(svg)]) == 0
    assert main(["verify", str(rep), str(g), "--order", "--outer", "both-ends"]) == 0
    assert svg.read_text().startswith("<svg")
    assert (tmp_path / "rep.json.manifest.json").exists()


def test_build_outputs_deterministic(tmp_path):
    g = tmp_path / "g.json"
    main(["gen", "maximal-outerplanar", "--n", "9", "--seed", "5", "--out", str(g)])
    r1 = tmp_path / "r1.json"
    r2 = tmp_path / "r2.json"
    assert main(["build", "vpg", str(g), "--out", str(r1)]) == 0
    assert main(["build", "vpg", str(g), "--out", str(r2)]) == 0
    assert r1.read_text() == r2.read_text()


def test_verify_failure_exit_code(tmp_path):
    g = tmp_path / "g.json"
    bad = tmp_path / "bad.json"
    rep = tmp_path / "rep.json"
    main(["gen", "maximal-outerplanar", "--n", "8", "--seed", "1", "--out", str(g)])
    main(["build", "circle", str(g), "--out", str(rep)])
    data = json.loads(g.read_text())
    data["edges"] = data["edges"][:-1]  # drop an edge: crossing count mismatch
    data.pop("rotation", None)
    bad.write_text(json.dumps(data))
    assert main(["verify", str(rep), str(bad)]) == 1


def test_usage_error_exit_code(tmp_path):
    assert main(["gen", "no-such-family"]) == 2
    assert main(["build", "circle", str(tmp_path / "missing.json")]) == 2


def test_sp_build_and_oracle(tmp_path):
    g = tmp_path / "k.json"
    rep = tmp_path / "sp.json"
    out = tmp_path / "verdict.json"
    assert main(["gen", "subdivided-k23", "--out", str(g)]) == 0
    assert main(["build", "sp", str(g), "--out", str(rep)]) == 0
    assert main(["verify", str(rep), str(g), "--order"]) == 0
    assert main(["oracle", str(g), "--mode", "base", "--out", str(out)]) == 0
    v = json.loads(out.read_text())
    assert v["status"] == "yes"


def test_edge_list_ingestion(tmp_path):
    t = tmp_path / "g.txt"
    t.write_text("0 1\n1 2\n2 0\n")
    rep = tmp_path / "rep.json"
    assert main(["build", "circle", str(t), "--out", str(rep)]) == 0


def test_embed_check(tmp_path):
    g = tmp_path / "g.json"
    main(["gen", "wheel", "--n", "5", "--out", str(g)])
    assert main(["embed", str(g), "--check"]) == 0


def test_repro_quick(tmp_path):
    assert main(["repro", "thm3", "--n", "20", "--seed", "1",
                 "--out", str(tmp_path / "a.json")]) == 0
    assert main(["repro", "thm4", "--n", "15", "--seed", "1",
                 "--out", str(tmp_path / "b.json")]) == 0
    assert main(["repro", "lem2", "--n", "20", "--seed", "1",
                 "--out", str(tmp_path / "c.json")]) == 0
    mf = tmp_path / "m.json"
    assert main(["--manifest", str(mf), "repro", "thm2-sample", "--samples", "50",
                 "--out", str(tmp_path / "d.json")]) == 0
    m = json.loads(mf.read_text())
    assert m["extra"]["note"].startswith("evidence")
