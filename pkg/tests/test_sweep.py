import csv
import io
import json

import pytest

from dee import EXIT_OK, EXIT_USAGE, main
from graphs import GraphFamilyError
from reporting import SweepRow, parse_range, rows_to_csv, run_sweep


def test_parse_range():
    assert parse_range("3..12") == (3, 12)
    assert parse_range("5..5") == (5, 5)
    for bad in ("3-12", "a..b", "9..3", "1..2..3"):
        with pytest.raises(GraphFamilyError):
            parse_range(bad)


def test_cycle_sweep_rows_in_order():
    doc = run_sweep("cycle", 3, 12, workers=4)
    assert [row.param for row in doc.rows] == list(range(3, 13))
    assert all(row.error is None and row.chain_holds for row in doc.rows)
    hexagon = doc.rows[3]
    assert (hexagon.n, hexagon.wiener, hexagon.diameter) == (6, 27, 3)
    assert hexagon.dee == 8105.49
    assert hexagon.corollary1_lower == hexagon.lower_thm1


def test_complete_sweep_lower_ratio_is_one():
    doc = run_sweep("complete", 2, 8, workers=2)
    assert all(row.lower_ratio == 1.0 and row.equality_lower for row in doc.rows)
    assert all(0 < row.upper_ratio < 1 for row in doc.rows)


def test_path_sweep_regular_only_at_two():
    doc = run_sweep("path", 1, 10)
    by_param = {row.param: row for row in doc.rows}
    assert by_param[2].corollary1_lower is not None
    assert all(by_param[p].corollary1_lower is None for p in range(3, 11))
    assert all(0 < row.lower_ratio <= 1 for row in doc.rows)


def test_failing_instance_becomes_error_row():
    doc = run_sweep("cycle", 2, 4, workers=1)
    assert doc.rows[0].param == 2
    assert "n >= 3" in doc.rows[0].error
    assert doc.rows[0].dee is None
    assert [row.error for row in doc.rows[1:]] == [None, None]


def test_sweep_needs_parametric_family():
    with pytest.raises(GraphFamilyError):
        run_sweep("c60_truncated_icosahedron", 1, 3)


def test_csv_layout():
    text = rows_to_csv(run_sweep("star", 2, 4))
    rows = list(csv.DictReader(io.StringIO(text)))
    assert text.splitlines()[0].split(",") == list(SweepRow.model_fields)
    assert [r["param"] for r in rows] == ["2", "3", "4"]
    assert rows[0]["error"] == ""


def test_cli_sweep_json(capsys):
    assert main(["sweep", "cycle", "3..12", "--json"]) == EXIT_OK
    out, _ = capsys.readouterr()
    doc = json.loads(out)
    assert doc["family"] == "cycle"
    assert len(doc["rows"]) == 10


def test_cli_sweep_csv_file(tmp_path, capsys):
    path = tmp_path / "sweep.csv"
    assert main(["sweep", "complete", "2..5", "-o", str(path)]) == EXIT_OK
    assert capsys.readouterr().out == ""
    assert len(path.read_text(encoding="utf-8").splitlines()) == 5


def test_cli_sweep_rejects_fixed_family(capsys):
    assert main(["sweep", "c60", "1..2"]) == EXIT_USAGE
    assert main(["sweep", "cycle", "7..3"]) == EXIT_USAGE


class _Terminal(io.StringIO):
    def isatty(self):
        return True


def test_progress_bar_only_on_a_terminal(monkeypatch, capsys):
    run_sweep("cycle", 3, 5, workers=1, progress=True)
    assert "sweep cycle" not in capsys.readouterr().err

    terminal = _Terminal()
    monkeypatch.setattr("sys.stderr", terminal)
    run_sweep("cycle", 3, 5, workers=1, progress=True)
    assert "sweep cycle" in terminal.getvalue()
