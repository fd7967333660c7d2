import csv
import subprocess
import sys

import pytest

from spreadmem.cli import CSV_HEADER, main

from conftest import FIXTURES

EX1 = str(FIXTURES / "example1.mem")
EX2 = str(FIXTURES / "example2.mem")


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_recall_prefix(capsys):
    code, out, _ = run(capsys, "recall", "--memories", EX1, "--fragment", "1 -1")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "1 -1 -1 -1 1"
    assert lines[1:] == [
        "step 0: 1 -1 0 0 0",
        "step 1: 1 -1 -1 0 0",
        "step 2: 1 -1 -1 -1 0",
        "step 3: 1 -1 -1 -1 1",
    ]


def test_recall_trace_shows_paper_intermediate(capsys):
    _, out, _ = run(capsys, "recall", "-m", EX1, "-f", "1")
    assert "step 2: 1 1 1 0 0" in out


def test_recall_with_order(capsys):
    _, out, _ = run(capsys, "recall", "-m", EX1, "--fragment=4:-1", "--order", "(4)1325")
    assert out.splitlines()[0] == "1 -1 -1 -1 1"


def test_generators(capsys, tmp_path):
    path = tmp_path / "gen.csv"
    code, out, _ = run(capsys, "generators", "-m", EX1, "--csv", str(path))
    assert code == 0
    assert out.splitlines()[0] == "(1)2345, (12)345, (123)45"
    assert "memory#2  (12)345  fragment=1:+1,2:-1  minimal=yes" in out
    rows = list(csv.reader(path.open()))
    assert rows[0] == CSV_HEADER
    assert rows[2] == ["memory#2", "1 -1 -1 -1 1", "1:+1,2:-1", "(12)345", "2", "yes", "yes"]


def test_verify_example2(capsys):
    code, out, _ = run(capsys, "verify", "-m", EX2)
    assert code == 0
    assert out.count("stored=yes") == 3
    assert out.splitlines()[-1] == "3/3 memories stored"


def test_train(capsys):
    _, out, _ = run(capsys, "train", "-m", EX2)
    assert out.splitlines()[:2] == ["T =", " 0 -1 -1  3"]
    assert " 3 -1 -1  0" in out.split("B =")[1]


def test_onebit(capsys, tmp_path):
    path = tmp_path / "one.csv"
    _, out, _ = run(capsys, "onebit", "-m", EX2, "--memory", "3", "--csv", str(path))
    assert "memory#3  (4)213  fragment=4:-1  minimal=yes" in out
    assert "capacity (ascending policy): 2 distinct of 8 seeds, bound 8" in out
    rows = list(csv.reader(path.open()))
    assert len(rows) == 25


def test_onebit_spread_policy(capsys):
    code, out, _ = run(capsys, "onebit", "-m", EX1, "--memory", "1", "--policy", "spread")
    assert code == 0 and "capacity (spread policy)" in out


def test_census(capsys):
    _, out, _ = run(capsys, "census", "-m", EX2, "--spread-classes")
    assert "stored: 3" in out
    assert "complements: 1\n  -1 -1 -1 -1" in out
    assert "single-seed classes: 1\n  1 1 -1 -1" in out


def test_spread(capsys):
    _, out, _ = run(capsys, "spread", "-m", EX1, "--seed", "1", "--size", "3")
    assert "fragment: 1:+1,2:+1,3:-1" in out
    assert "recalled: 1 1 -1 -1 -1" in out


def test_spread_negative_value(capsys):
    _, out, _ = run(capsys, "spread", "-m", EX2, "--seed", "1", "--value", "-1", "--size", "1")
    assert "recalled: -1 1 1 -1" in out


def test_spread_with_coords(capsys, tmp_path):
    coords = tmp_path / "xy.txt"
    coords.write_text("1 0 0\n2 9 0\n3 1 0\n4 2 0\n5 3 0\n")
    _, out, _ = run(capsys, "spread", "-m", EX1, "--seed", "1", "--size", "5", "--coords", str(coords))
    assert "visit order: 1 3 4 5 2" in out


def test_graph_to_file(capsys, tmp_path):
    path = tmp_path / "g.dot"
    code, out, _ = run(capsys, "graph", "-m", EX1, "--out", str(path))
    assert code == 0 and out == ""
    assert "n3 -- n4 [color=blue, label=3, penwidth=3];" in path.read_text()


@pytest.mark.parametrize("argv, needle", [
    (["recall", "-m", EX1, "-f", "1 x"], "expected 1, +1 or -1"),
    (["recall", "-m", EX1, "-f", "2:1"], "prefix fragment"),
    (["recall", "-m", EX1, "-f", "1", "--order", "(2)1345"], "seeds"),
    (["verify", "-m", "/nonexistent.mem"], "No such file"),
    (["census", "-m", EX1, "--cap", "3"], "exceeds the cap"),
    (["onebit", "-m", EX1, "--max-n", "4"], "max_n=4"),
    (["generators", "-m", EX1, "--memory", "9"], "outside 1..3"),
])
def test_errors_are_one_line(capsys, argv, needle):
    code, out, err = run(capsys, *argv)
    assert code != 0
    assert out == ""
    assert err.count("\n") == 1 and needle in err


def test_parse_error_reports_position(capsys, tmp_path):
    bad = tmp_path / "bad.mem"
    bad.write_text("1 1\n1 2\n")
    code, _, err = run(capsys, "verify", "-m", str(bad))
    assert code == 1 and f"{bad}:2:3:" in err


@pytest.mark.parametrize("cmd", [
    ["train"], ["verify"], ["generators"], ["onebit"], ["census", "--spread-classes"], ["graph"],
    ["recall", "-f", "1 1"], ["spread", "--seed", "2", "--size", "4"],
])
def test_reports_are_byte_identical(cmd):
    argv = [sys.executable, "-m", "spreadmem", cmd[0], "-m", EX1, *cmd[1:]]
    first = subprocess.run(argv, capture_output=True, check=True)
    second = subprocess.run(argv, capture_output=True, check=True)
    assert first.stdout == second.stdout and first.stdout
