import io
import sys

import pytest

from tdorg import serialize_graph, serialize_representation, parse_graph
from tdorg.catalog import cycle6, fan6, path4, sunlet10
from tdorg.cli import main

FAN_REP_TEXT = "x: u1 v1 u2 v2 u3 v3\ny: u1 v1 u3 v3 u2 v2\n"


@pytest.fixture
def fan_file(tmp_path):
    p = tmp_path / "fan.tdorg"
    p.write_text(serialize_graph(fan6()))
    return str(p)


@pytest.fixture
def sunlet_file(tmp_path):
    p = tmp_path / "sunlet.tdorg"
    p.write_text(serialize_graph(sunlet10()))
    return str(p)


@pytest.fixture
def cycle_file(tmp_path):
    p = tmp_path / "c6.tdorg"
    p.write_text(serialize_graph(cycle6()))
    return str(p)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_recognize_yes(capsys, fan_file):
    code, out, _ = run(capsys, "recognize", fan_file)
    assert code == 0
    assert out.strip() == "2DORG"


def test_recognize_no_with_witness(capsys, cycle_file):
    code, out, _ = run(capsys, "recognize", cycle_file)
    assert code == 1
    assert out.startswith("NOT-2DORG invertible pair: (")


def test_recognize_reads_stdin(capsys, monkeypatch):
    monkeypatch.setattr(sys, "stdin", io.StringIO(serialize_graph(fan6())))
    code, out, _ = run(capsys, "recognize", "-")
    assert code == 0 and out.strip() == "2DORG"


def test_represent_writes_normalized_representation(capsys, fan_file):
    code, out, _ = run(capsys, "represent", fan_file)
    assert code == 0
    assert out == FAN_REP_TEXT


def test_represent_rejects_non_2dorg(capsys, cycle_file):
    code, _, err = run(capsys, "represent", cycle_file)
    assert code == 1
    assert "NOT-2DORG" in err


def test_check_accepts_and_rejects(capsys, tmp_path, fan_file):
    rep = tmp_path / "rep.txt"
    rep.write_text(FAN_REP_TEXT)
    code, out, _ = run(capsys, "check", fan_file, "--rep", str(rep),
                       "--normalized")
    assert code == 0
    assert out.splitlines() == ["REALIZES", "NORMALIZED"]

    bad = tmp_path / "bad.txt"
    bad.write_text("x: u1 v1 u2 v2 u3 v3\ny: u1 v1 u2 v2 u3 v3\n")
    code, out, _ = run(capsys, "check", fan_file, "--rep", str(bad))
    assert code == 1
    assert out.strip() == "NOT-REALIZES"


def test_unique_and_report(capsys, fan_file, sunlet_file):
    code, out, _ = run(capsys, "unique", fan_file)
    assert code == 0 and out.strip() == "UNIQUE"

    code, out, _ = run(capsys, "unique", sunlet_file, "--report")
    assert code == 1
    lines = out.splitlines()
    assert lines[0] == "NOT-UNIQUE"
    assert "non-trivial-gplus-components: 4" in lines
    assert "normalized-representation-count: 4" in lines
    assert any(line.startswith("buried-subgraph:") for line in lines)


def test_count(capsys, sunlet_file):
    code, out, _ = run(capsys, "count", sunlet_file)
    assert code == 0 and out.strip() == "4"


def test_buried_all(capsys, sunlet_file, fan_file):
    code, out, _ = run(capsys, "buried", sunlet_file, "--all")
    assert code == 0
    lines = out.splitlines()
    assert "u1 u2 u3 v1 v2 v3 [buried]" in lines
    assert "u4 u5 v4 v5 [buried]" in lines

    code, out, _ = run(capsys, "buried", fan_file)
    assert code == 1
    assert out.strip() == "no buried subgraph"


def test_gplus_lists_components(capsys, fan_file):
    code, out, _ = run(capsys, "gplus", fan_file)
    assert code == 0
    nontrivial = [l for l in out.splitlines() if "[non-trivial]" in l]
    assert len(nontrivial) == 2


def test_iclasses(capsys, sunlet_file):
    code, out, _ = run(capsys, "iclasses", sunlet_file)
    assert code == 0
    assert len(out.splitlines()) == 4


def test_substitute(capsys, sunlet_file):
    code, out, _ = run(capsys, "substitute", sunlet_file,
                       "--buried", "u1 v1 u2 v2 u3 v3", "--keep", "u1v1")
    assert code == 0
    g = parse_graph(out)
    assert g.u_count == 3 and g.v_count == 3 and g.edge_count == 5


def test_gen_is_deterministic(capsys):
    code, out1, _ = run(capsys, "gen", "--nu", "4", "--nv", "4", "--seed", "7")
    code2, out2, _ = run(capsys, "gen", "--nu", "4", "--nv", "4", "--seed", "7")
    assert code == code2 == 0
    assert out1 == out2
    g = parse_graph(out1)
    assert g.u_count == 4 and g.v_count == 4


def test_gen_bipartite_mode(capsys):
    code, out, _ = run(capsys, "gen", "--nu", "3", "--nv", "3", "--seed", "1",
                       "--mode", "bipartite", "--p", "0.5")
    assert code == 0
    parse_graph(out)


def test_render_deterministic_svg(capsys, fan_file):
    code, out1, _ = run(capsys, "render", fan_file)
    code2, out2, _ = run(capsys, "render", fan_file)
    assert code == code2 == 0
    assert out1 == out2
    assert out1.startswith('<?xml version="1.0"')
    assert "<svg" in out1 and out1.rstrip().endswith("</svg>")


def test_render_with_explicit_representation(capsys, tmp_path, fan_file):
    rep = tmp_path / "rep.txt"
    rep.write_text(FAN_REP_TEXT)
    code, out, _ = run(capsys, "render", fan_file, "--rep", str(rep))
    assert code == 0
    # u1 is first in both orders: endpoint at the lowest-left grid point
    assert '<circle cx="60" cy="260"' in out
    assert out.count("<circle") == 6


def test_oracle_subcommand(capsys, sunlet_file, cycle_file):
    code, out, _ = run(capsys, "oracle", sunlet_file)
    assert code == 0
    assert "normalized-representation-count: 4" in out
    assert "buried-subgraphs: 2" in out
    assert "FAIL" not in out

    code, out, _ = run(capsys, "oracle", cycle_file)
    assert code == 0
    assert "pass recognition-routes-agree" in out


def test_exit_code_2_on_parse_error(capsys, tmp_path):
    bad = tmp_path / "bad.tdorg"
    bad.write_text("p tdorg 2 2\n")
    code, _, err = run(capsys, "recognize", str(bad))
    assert code == 2
    assert "error:" in err


def test_exit_code_2_on_missing_file(capsys):
    code, _, err = run(capsys, "recognize", "/nonexistent/file.tdorg")
    assert code == 2


def test_exit_code_3_on_guard(capsys, tmp_path):
    # 18 vertices exceed the buried-subgraph enumeration guard
    from tdorg import chain_graph_from_sizes
    g = chain_graph_from_sizes((9, 8, 7, 6, 5, 4, 3, 2, 1), 9)
    p = tmp_path / "big.tdorg"
    p.write_text(serialize_graph(g))
    code, _, err = run(capsys, "buried", str(p), "--all")
    assert code == 3
    assert "guard" in err


def test_output_flag_writes_file(capsys, tmp_path, fan_file):
    out_path = tmp_path / "rep.out"
    code, out, _ = run(capsys, "represent", fan_file, "-o", str(out_path))
    assert code == 0 and out == ""
    assert out_path.read_text() == FAN_REP_TEXT
