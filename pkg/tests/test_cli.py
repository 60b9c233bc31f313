import json
import subprocess
import sys

import pytest

from graphinv.cli import main
from graphinv.families import path
from graphinv.graph import format_edge_list, parse_edge_list


@pytest.fixture
def p4(tmp_path):
    f = tmp_path / "p4.txt"
    f.write_text(format_edge_list(path(4)))
    return str(f)


def test_compute_z(p4, capsys):
    assert main(["compute", p4, "--invariant", "z"]) == 0
    assert capsys.readouterr().out == "Z = 1\n"


def test_compute_all_with_witness(p4, capsys):
    assert main(["compute", p4, "--witness"]) == 0
    out = capsys.readouterr().out
    for line in ("dim = 1", "Z = 1", "Z_e = 1", "P = 1"):
        assert line in out
    assert "witness:" in out


def test_compute_line(p4, capsys):
    assert main(["compute", p4, "--line", "--invariant", "dim"]) == 0
    assert capsys.readouterr().out == "dim = 1\n"


def test_compute_budget_bracket(tmp_path, capsys):
    f = tmp_path / "k5.txt"
    main(["family", "complete", "5", "--line", "--out", str(f)])
    assert main(["--budget-nodes", "3", "compute", str(f), "--invariant", "z"]) == 0
    assert "budget exceeded" in capsys.readouterr().out


def test_family_emits_edge_list(tmp_path, capsys):
    assert main(["family", "wheel", "5"]) == 0
    g = parse_edge_list(capsys.readouterr().out)
    assert (g.n, g.m) == (6, 10)
    out = tmp_path / "lw.txt"
    assert main(["family", "wheel", "5", "--line", "--out", str(out)]) == 0
    assert parse_edge_list(out.read_text()).n == 10
    assert main(["family", "path", "3", "--dot"]) == 0
    assert capsys.readouterr().out.startswith("graph")


def test_table_md(capsys):
    assert main(["table", "--format", "md"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("| id |") and "W1,8" in out


def test_sweep(capsys):
    assert main(["sweep", "z-vs-2zl", "--max-n", "5"]) == 0
    captured = capsys.readouterr()
    data = json.loads(captured.out)
    assert data["summary"]["violations"] == []
    assert "violations 0" in captured.err


def test_sweep_csv_to_file(tmp_path):
    out = tmp_path / "r.csv"
    assert main(["sweep", "p-vs-z", "--max-n", "4", "--format", "csv", "--out", str(out)]) == 0
    assert out.read_text().startswith("id,source,params")


def test_verify_witnesses(capsys):
    assert main(["verify-witnesses", "--family", "wheel"]) == 0
    assert "violations 0" in capsys.readouterr().out


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["compute"],
        ["sweep", "no-such-conjecture"],
        ["compute", "/nonexistent/file.txt"],
        ["family", "wheel", "2"],
        ["family", "petersen"],
    ],
)
def test_usage_and_input_errors(argv, capsys):
    assert main(argv) == 2
    assert capsys.readouterr().err


def test_bad_edge_list(tmp_path, capsys):
    f = tmp_path / "bad.txt"
    f.write_text("3 1\n0 0\n")
    assert main(["compute", str(f)]) == 2
    assert "error" in capsys.readouterr().err


def test_module_entry_point(p4):
    r = subprocess.run([sys.executable, "-m", "graphinv", "compute", p4, "--invariant", "z"], capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout == "Z = 1\n"
