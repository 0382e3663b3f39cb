import csv
import io as stdio

import pytest
from hypothesis import given, strategies as st

from mwbis.cli import CSV_COLUMNS, RunReport, main, run
from mwbis.core import Instance
from mwbis.errors import BadParams, IncompatibleSolver, ParseError, SelfLoop, VertexOutOfRange
from mwbis.generate import FAMILIES, generate, mbf_tight, prism
from mwbis.io import parse, parse_text, write, write_text
from mwbis.tree import RootedTree

from conftest import seeds

PATH3 = "mwbis 3 2 3\nv 0 1000 1\nv 1 1000 1\nv 2 1000 1\ne 0 1\ne 1 2\n"

SMALL = {
    "tree": {"n": 8}, "forest": {"n": 8}, "cycle": {"n": 6}, "graph": {"n": 8},
    "claw-free": {"n": 6, "d": 2}, "interval": {"n": 8}, "planar": {"levels": "3,4"},
    "mbf-tight": {"d": 3}, "mwbrf-bad": {"d": 2, "M": 4}, "knapsack": {"n": 6},
}


# parsing

def test_parse_path():
    inst = parse_text(PATH3)
    assert isinstance(inst, Instance) and inst.n == 3 and inst.edges() == [(0, 1), (1, 2)]


def test_parse_reports_the_bad_line():
    text = "mwbis 3 1 3\n# comment\nv 0 1 1\nv 1 1 1\nv 2 1 1\ne 0 5\n"
    with pytest.raises(VertexOutOfRange, match="line 6"):
        parse_text(text)


def test_empty_file():
    with pytest.raises(ParseError, match="missing header"):
        parse_text("# nothing here\n\n")


@pytest.mark.parametrize(
    "text, err",
    [
        ("mwbis 2 0 1\nv 0 1 1\n", ParseError),  # missing vertex
        ("mwbis 1 1 1\nv 0 1 1\n", ParseError),  # edge count
        ("mwbis 1 0 1\nv 0 x 1\n", ParseError),
        ("mwbis 1 0 1\nv 0 1 1\nq 1\n", ParseError),
        ("mwbis 2 1 1\nv 0 1 1\nv 1 1 1\ne 1 1\n", SelfLoop),
        ("intervals 1 3\ni 0 1 2\n", ParseError),
        ("knapsack 2 3\nk 1 1\n", ParseError),
    ],
)
def test_malformed_files(text, err):
    with pytest.raises(err):
        parse_text(text)


def test_root_directive():
    tree = parse_text(PATH3.replace("\nv 0", "\nroot 1\nv 0", 1))
    assert isinstance(tree, RootedTree) and tree.root == 1
    assert parse_text(PATH3, "tree").root == 0


@pytest.mark.parametrize("family", FAMILIES)
def test_round_trip(family, tmp_path):
    obj = generate(family, SMALL[family], seed=7)
    assert parse_text(write_text(obj)) == obj
    write(obj, tmp_path / "x.txt")
    assert parse(tmp_path / "x.txt") == obj


@given(seeds)
def test_round_trip_random_planar(seed):
    obj = generate("planar", {"levels": "3,5,4"}, seed)
    assert parse_text(write_text(obj)) == obj


# generation

def test_generate_is_deterministic():
    for family in FAMILIES:
        assert write_text(generate(family, SMALL[family], 3)) == write_text(generate(family, SMALL[family], 3))


def test_gadget_families():
    tight = generate("mbf-tight", {"d": 3}, 0)
    assert tight == mbf_tight(3)
    assert tight.budget == (1, 2, 2, 2) and tight.B == 6
    bad = generate("mwbrf-bad", {"d": 2, "M": 4}, 0)
    assert bad.B == 8 and bad.weight == (1000, 2000, 2000)


def test_single_vertex_tree_family():
    tree = generate("tree", {"n": 1}, 0)
    assert tree.instance.n == 1


def test_bad_params():
    with pytest.raises(BadParams):
        generate("nope", {}, 0)
    with pytest.raises(BadParams):
        generate("cycle", {"n": 2}, 0)


# run

def test_run_reports():
    rep = run("tree", parse_text(PATH3), "path3", oracle=True)
    assert rep.ratio == 1 and rep.weight == 2000
    rep = run("mbf", mbf_tight(3), oracle=True)
    assert (rep.ratio.numerator, rep.ratio.denominator) == (1, 3)
    rep = run("ptas", prism(), k=1, oracle=True)
    assert rep.ratio >= 0.5
    assert run("tree", parse_text(PATH3)).ratio is None


def test_zero_optimum_counts_as_exact():
    assert RunReport("x", "y", 1, 0, 0, 0, 0, (), 0).ratio == 1


def test_incompatible_solver():
    with pytest.raises(IncompatibleSolver):
        run("interval", parse_text(PATH3))
    with pytest.raises(IncompatibleSolver):
        run("band", parse_text(PATH3))


@pytest.mark.parametrize(
    "solver, family",
    [("brute", "graph"), ("forest", "forest"), ("cycle", "cycle"), ("interval", "interval"),
     ("band", "planar"), ("knapsack", "knapsack"), ("mwbrf", "graph"), ("tree", "knapsack")],
)
def test_exact_solvers_through_run(solver, family):
    rep = run(solver, generate(family, SMALL[family], 1), oracle=True)
    if solver != "mwbrf":
        assert rep.ratio == 1


# command line

@pytest.fixture
def files(tmp_path):
    (tmp_path / "path3.mwbis").write_text(PATH3)
    write(mbf_tight(3), tmp_path / "mbf-tight-d3.mwbis")
    write(prism(), tmp_path / "prism.lpg")
    return tmp_path


def _csv(out):
    rows = list(csv.reader(stdio.StringIO(out)))
    assert tuple(rows[0]) == CSV_COLUMNS
    return [dict(zip(CSV_COLUMNS, r)) for r in rows[1:]]


def test_cli_run_examples(files, capsys):
    assert main(["run", "tree", str(files / "path3.mwbis"), "--oracle", "--format", "csv"]) == 0
    (row,) = _csv(capsys.readouterr().out)
    assert (row["ratio_num"], row["ratio_den"]) == ("1", "1")

    assert main(["run", "mbf", str(files / "mbf-tight-d3.mwbis"), "--oracle", "--format", "csv"]) == 0
    (row,) = _csv(capsys.readouterr().out)
    assert (row["ratio_num"], row["ratio_den"]) == ("1", "3")

    assert main(["run", "ptas", str(files / "prism.lpg"), "-k", "1", "--oracle"]) == 0
    assert "ratio=2/3" in capsys.readouterr().out


def test_cli_greedy(files, capsys):
    path = str(files / "mbf-tight-d3.mwbis")
    assert main(["greedy", path, "--algo", "mbf", "--check-claw", "2"]) == 2
    assert main(["greedy", path, "--algo", "mbf", "--check-claw", "3", "--oracle"]) == 0
    assert "ratio=1/3" in capsys.readouterr().out
    assert main(["greedy", path, "--algo", "mwbrf", "--keep-scanning"]) == 0


def test_cli_validate_and_exit_codes(files, capsys):
    assert main(["validate", str(files / "prism.lpg")]) == 0
    assert "planar n=6 m=9" in capsys.readouterr().out
    bad = files / "bad.mwbis"
    bad.write_text("mwbis 3 1 3\nv 0 1 1\nv 1 1 1\nv 2 1 1\ne 0 5\n")
    assert main(["validate", str(bad)]) == 2
    assert "line 5" in capsys.readouterr().err
    assert main(["validate", str(files / "missing.mwbis")]) == 2
    assert main(["run", "interval", str(files / "path3.mwbis")]) == 3


def test_cli_generate_reduce_bench(files, capsys):
    out = files / "kp.txt"
    assert main(["generate", "knapsack", "-p", "n=5", "--seed", "4", "-o", str(out)]) == 0
    assert main(["reduce", "knapsack-to-star", str(out)]) == 0
    star = parse_text(capsys.readouterr().out)
    assert isinstance(star, RootedTree) and star.instance.n == 6
    assert main(["generate", "tree", "-p", "n=4"]) == 0
    assert parse_text(capsys.readouterr().out).instance.n == 4
    assert main(["generate", "tree", "-p", "n"]) == 2

    paths = [str(files / "prism.lpg"), str(files / "prism.lpg")]
    assert main(["bench", "band", *paths, "--oracle", "--jobs", "2"]) == 0
    rows = _csv(capsys.readouterr().out)
    assert len(rows) == 2 and all(r["ratio_num"] == r["ratio_den"] == "1" for r in rows)
