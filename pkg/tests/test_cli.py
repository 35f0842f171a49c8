import os

import pytest

from hellyext import cli, graphs, helly
from hellyext.helly import violation_from_text


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def write_graph(tmp_path, name, g):
    path = tmp_path / name
    path.write_text(graphs.graph_to_text(g))
    return str(path)


def test_gen_and_dist(tmp_path, capsys):
    out_file = str(tmp_path / "c6.graph")
    code, out, err = run(capsys, "gen", "--family", "cycle", "6", "-o", out_file)
    assert code == 0 and out.strip() == out_file
    assert graphs.graph_from_text(open(out_file).read()) == graphs.cycle_graph(6)

    code, out, err = run(capsys, "dist", out_file)
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "0 1 2 3 2 1"
    assert lines[-1] == "diameter 3"


def test_gen_star_and_products(tmp_path, capsys):
    star_file = str(tmp_path / "star.graph")
    code, out, _ = run(capsys, "gen", "--family", "star", "1", "1", "2", "-o", star_file)
    assert code == 0
    assert graphs.graph_from_text(open(star_file).read()) == graphs.star_tree((1, 1, 2))

    p2 = write_graph(tmp_path, "p2.graph", graphs.path_graph(2))
    p3 = write_graph(tmp_path, "p3.graph", graphs.path_graph(3))
    strong_file = str(tmp_path / "strong.graph")
    code, out, _ = run(capsys, "gen", "--family", "strong", p2, p3, "-o", strong_file)
    assert code == 0
    assert graphs.graph_from_text(open(strong_file).read()) == graphs.strong_product(
        graphs.path_graph(2), graphs.path_graph(3)
    )

    tensor_out = str(tmp_path / "tensor.graph")
    code, out, _ = run(capsys, "gen", "--family", "tensor", p3, p3, "-o", tensor_out)
    assert code == 0
    parts = out.strip().splitlines()
    assert parts == [
        str(tmp_path / "tensor_c0.graph"),
        str(tmp_path / "tensor_c1.graph"),
    ]
    comps = graphs.tensor_product(graphs.path_graph(3), graphs.path_graph(3))
    for path, comp in zip(parts, comps):
        assert graphs.graph_from_text(open(path).read()) == comp


def test_helly_exit_codes_and_certificates(tmp_path, capsys):
    c6 = write_graph(tmp_path, "c6.graph", graphs.cycle_graph(6))
    code, out, _ = run(capsys, "helly", c6, "--n", "2", "--m", "2")
    assert code == 0 and out.strip() == "holds"

    code, out, _ = run(capsys, "helly", c6, "--n", "3", "--m", "2")
    assert code == 1
    v = violation_from_text(out)
    assert helly.verify_violation(graphs.cycle_graph(6), v) is True

    code, out, _ = run(capsys, "helly", c6, "--d", "3", "--t", "2")
    assert code == 1
    assert "mode scaled t=2" in out

    code, out, _ = run(capsys, "helly", c6, "--n", "4", "--m", "2", "--bipartite")
    assert code == 1
    assert "mode bipartite" in out

    code, out, err = run(capsys, "helly", c6, "--n", "3")
    assert code == 2 and "error" in err

    code, out, err = run(capsys, "helly", c6, "--n", "3", "--m", "2", "--d", "2")
    assert code == 2

    code, out, err = run(capsys, "helly", str(tmp_path / "nope.graph"), "--n", "3", "--m", "2")
    assert code == 2


def test_extend_round_trip(tmp_path, capsys):
    write_graph(tmp_path, "c6.graph", graphs.cycle_graph(6))
    map_file = tmp_path / "wit.map"
    map_file.write_text(
        "map d=2 t=1 target=c6.graph\n(1,0) -> 0\n(-1,0) -> 2\n(0,1) -> 4\n"
    )
    pts_file = tmp_path / "pts.txt"
    pts_file.write_text("(0,0)\n")

    code, out, _ = run(capsys, "extend", "--map", str(map_file), "--targets", str(pts_file))
    assert code == 1
    assert out.splitlines()[0] == "stuck (0,0)"
    assert sorted(out.splitlines()[1:]) == ["ball 0 1", "ball 2 1", "ball 4 1"]

    code, out, _ = run(
        capsys, "extend", "--map", str(map_file), "--targets", str(pts_file), "--t", "2"
    )
    assert code == 0
    assert "(0,0) -> 0" in out

    code, out, _ = run(capsys, "extend", "--map", str(map_file), "--box", "1")
    assert code == 1  # the box corners plus the old domain still pin the origin


def test_oracle_subcommands(tmp_path, capsys):
    c6 = write_graph(tmp_path, "c6.graph", graphs.cycle_graph(6))
    map_file = tmp_path / "wit.map"
    map_file.write_text(
        "map d=2 t=1 target=c6.graph\n(1,0) -> 0\n(-1,0) -> 2\n(0,1) -> 4\n"
    )
    pts_file = tmp_path / "pts.txt"
    pts_file.write_text("(0,0)\n")

    code, out, _ = run(
        capsys, "oracle", "extend", "--map", str(map_file), "--targets", str(pts_file)
    )
    assert code == 1 and out.strip() == "not extendable"

    code, out, _ = run(capsys, "oracle", "helly", c6, "--n", "3", "--m", "2")
    assert code == 1
    v = violation_from_text(out)
    assert tuple((b.center, b.radius) for b in v.balls) == ((0, 1), (2, 1), (4, 1))

    code, out, _ = run(capsys, "oracle", "helly", c6, "--n", "2", "--m", "2")
    assert code == 0 and out.strip() == "holds"


def test_holefill_cli(tmp_path, capsys):
    write_graph(tmp_path, "c6.graph", graphs.cycle_graph(6))
    write_graph(tmp_path, "p5.graph", graphs.path_graph(5))
    wind = tmp_path / "wind.bc"
    wind.write_text(
        "boundary d=2 n=2 target=c6.graph\n"
        "(0,0) -> 0\n(1,0) -> 1\n(2,0) -> 2\n(2,1) -> 3\n"
        "(2,2) -> 4\n(1,2) -> 5\n(0,2) -> 0\n(0,1) -> 1\n"
    )
    ruler = tmp_path / "ruler.bc"
    ruler.write_text(
        "boundary d=2 n=2 target=p5.graph\n"
        "(0,1) -> 0\n(0,0) -> 1\n(1,0) -> 2\n(2,0) -> 3\n"
        "(2,1) -> 4\n(2,2) -> 3\n(1,2) -> 2\n(0,2) -> 1\n"
    )

    code, out, _ = run(capsys, "holefill", "--boundary", str(ruler))
    assert code == 1
    assert out.splitlines()[0] == "no"
    assert out.splitlines()[1] == "pair (0,1) (2,1) l1 2 target 4"

    with pytest.warns(Warning):
        code, out, _ = run(capsys, "holefill", "--boundary", str(wind))
    assert code == 0 and out.strip() == "yes"

    with pytest.warns(Warning):
        code, out, _ = run(capsys, "holefill", "--boundary", str(wind), "--construct")
    assert code == 1
    assert out.splitlines()[0] == "yes"
    assert out.splitlines()[1] == "stuck (1,1)"

    bad = tmp_path / "bad.bc"
    bad.write_text("boundary d=2 n=2 target=c6.graph\n(0,0) -> 0\n")
    code, out, err = run(capsys, "holefill", "--boundary", str(bad))
    assert code == 2 and "error" in err


def test_harness_cli(capsys):
    code, out, _ = run(capsys, "harness", "--d", "2", "--max-vertices", "4")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[-1] == "total 10 agree 10"
    assert lines[0].split("\t") == ["n1_0", "true", "true", "true"]

    code2, out2, _ = run(capsys, "harness", "--d", "2", "--max-vertices", "4", "--jobs", "2")
    assert code2 == 0 and out2 == out

    code, out, err = run(capsys, "harness", "--d", "3", "--max-vertices", "4")
    assert code == 2


def test_gen_rejects_bad_params(tmp_path, capsys):
    out_file = str(tmp_path / "x.graph")
    code, _, err = run(capsys, "gen", "--family", "cycle", "six", "-o", out_file)
    assert code == 2 and "error" in err
    code, _, err = run(capsys, "gen", "--family", "cycle", "2", "-o", out_file)
    assert code == 2
    code, _, err = run(capsys, "gen", "--family", "star", "-o", out_file)
    assert code == 2
