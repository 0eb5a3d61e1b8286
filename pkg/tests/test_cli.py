import importlib.util
import io
import json
import sys
from pathlib import Path

import pandas as pd
import pytest

CLI_PATH = Path(__file__).resolve().parent.parent / "scripts" / "simplex_cli.py"


@pytest.fixture(scope="module")
def cli():
    spec = importlib.util.spec_from_file_location("simplex_cli", CLI_PATH)
    module = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(module)
    return module


def _run(cli, capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_catalog_piped_to_xi(cli, capsys, monkeypatch):
    code, text, _ = _run(cli, capsys, "catalog", "s1")
    assert code == 0
    monkeypatch.setattr(sys, "stdin", io.StringIO(text))
    code, out, _ = _run(cli, capsys, "xi")
    assert code == 0
    assert json.loads(out)["xi"] == "3"


def test_simplex_file_argument(cli, capsys, tmp_path):
    path = tmp_path / "triangle.txt"
    path.write_text("0 0\n1 0\n0 1\n")
    code, out, _ = _run(cli, capsys, "norm-cube", str(path), "--bilateral")
    assert code == 0
    report = json.loads(out)
    assert report["norm"] == "3"
    assert report["upper"] == "4"


def test_catalog_option(cli, capsys):
    code, out, _ = _run(cli, capsys, "diam", "--catalog", "s-star", "-n", "5")
    assert code == 0
    assert "1" in out


def test_d_series_csv(cli, capsys):
    code, out, _ = _run(cli, capsys, "d-series", "--max", "50", "--format", "csv")
    assert code == 0
    frame = pd.read_csv(io.StringIO(out))
    assert len(frame) == 50
    assert frame.loc[frame["d_n"] == 0, "n"].tolist() == [3, 8, 15, 24, 35, 48]


def test_limit_exit_code(cli, capsys):
    code, _, err = _run(cli, capsys, "search-01", "-n", "6")
    assert code == 3
    assert err.strip().splitlines()[-1].startswith("error:")


def test_invalid_input_exit_code(cli, capsys, tmp_path):
    path = tmp_path / "flat.txt"
    path.write_text("0 0\n1 1\n2 2\n")
    code, _, err = _run(cli, capsys, "xi", str(path))
    assert code == 2
    assert "error:" in err


def test_closed_form_boundary_exit_code(cli, capsys):
    code, _, err = _run(cli, capsys, "cut-volumes", "--closed-form", "4/9")
    assert code == 2
    assert "piece boundary" in err


def test_theta_lower_table(cli, capsys):
    code, out, _ = _run(cli, capsys, "table", "--name", "theta-lower")
    assert code == 0
    rows = json.loads(out)
    assert len(rows) == 54
    assert [row["n"] for row in rows] == list(range(1, 55))


def test_table_output_file(cli, capsys, tmp_path):
    target = tmp_path / "xi_small.csv"
    code, _, _ = _run(cli, capsys, "table", "--name", "xi-small", "--format", "csv", "--output", str(target))
    assert code == 0
    assert pd.read_csv(target)["n"].tolist() == list(range(1, 11))


def test_catalog_list(cli, capsys):
    code, out, _ = _run(cli, capsys, "catalog", "--list")
    assert code == 0
    assert out.split()[:4] == ["H7", "S1", "S2", "T8"]


def test_inscription_check(cli, capsys):
    code, out, _ = _run(cli, capsys, "inscription-check", "--catalog", "h7", "--trials", "50", "--seed", "3")
    assert code == 0
    report = json.loads(out)
    assert report["diagnostics"]["precondition_met"] and report["diagnostics"]["passed"]
    assert report["quasi_rigidity"]["applicable"] and report["quasi_rigidity"]["passed"]
