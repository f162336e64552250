"""CLI front end: commands, JSON schemas, caching, SVG, exit codes."""

import json
import os
import xml.etree.ElementTree as ET

import pytest

from reflexo.cli import main


def run(capsys, *argv):
    try:
        code = main(list(argv))
    except SystemExit as e:  # argparse usage errors
        code = e.code
    out = capsys.readouterr()
    return code, out.out, out.err


class TestCatalog:
    def test_sixteen_rows(self, capsys):
        code, out, _ = run(capsys, "catalog")
        assert code == 0
        lines = out.strip().splitlines()
        assert len(lines) == 16
        assert lines[0].startswith("3\t")
        assert "dual=9" in lines[0]


class TestTable2:
    def test_rows(self, capsys):
        # [PAPER] spot-check three quoted rows of the summary table
        code, out, _ = run(capsys, "table2")
        assert code == 0
        lines = {l.split("|")[0].strip(): l for l in out.strip().splitlines()}
        assert "I9, 3xI1" in lines["3"] and "Z/3Z" in lines["3"]
        assert "I4, I1*, I1" in lines["8c"] and "Z/4Z" in lines["8c"]
        assert "I7, I2, 3xI1" in lines["5b"] and lines["5b"].rstrip().endswith("Z")

    def test_check_passes(self, capsys):
        # the master regression gate
        code, out, _ = run(capsys, "table2", "--check")
        assert code == 0
        assert "[MISMATCH]" not in out
        assert out.count("[ok]") == 16


class TestAnalyze:
    def test_6b_fibre_schema(self, capsys, tmp_path, monkeypatch):
        # [PAPER] the documented report entry for polygon 6b
        monkeypatch.setenv("REFLEXO_CACHE", str(tmp_path))
        code, out, _ = run(capsys, "analyze", "6b", "--no-pf")
        assert code == 0
        report = json.loads(out)
        assert report["polygon"] == "6b"
        assert {"where": "infinity", "type": "I6"} in report["fibres"]
        assert {"where": "2", "type": "I3"} in report["fibres"]
        assert {"where": "3", "type": "I2"} in report["fibres"]
        assert {"where": "-6", "type": "I1"} in report["fibres"]

    def test_irrational_schema(self, capsys, tmp_path, monkeypatch):
        # [PAPER] conjugate locations carry a factor object and a count
        monkeypatch.setenv("REFLEXO_CACHE", str(tmp_path))
        code, out, _ = run(capsys, "analyze", "5a", "--no-pf")
        report = json.loads(out)
        assert {
            "where": {"factor": "l^3-l^2-18*l+43"}, "type": "I1", "count": 3
        } in report["fibres"]

    def test_mw_schema(self, capsys, tmp_path, monkeypatch):
        # [PAPER] documented mw block for polygon 3
        monkeypatch.setenv("REFLEXO_CACHE", str(tmp_path))
        _, out, _ = run(capsys, "analyze", "3", "--no-pf")
        mw = json.loads(out)["mw"]
        assert mw == {
            "rank": 0, "torsion": 3, "group": "Z/3", "detT": 9,
            "positions": [0, 3, 6],
        }

    def test_height_matrix_strings(self, capsys, tmp_path, monkeypatch):
        # [PAPER] exact rationals as "p/q" strings, never floats
        monkeypatch.setenv("REFLEXO_CACHE", str(tmp_path))
        _, out, _ = run(capsys, "analyze", "4b", "--no-pf")
        mw = json.loads(out)["mw"]
        assert mw["height_matrix"] == [
            ["1/2", "1/4", "3/4"],
            ["1/4", "1/8", "3/8"],
            ["3/4", "3/8", "9/8"],
        ]

    def test_period_option(self, capsys, tmp_path, monkeypatch):
        # [PAPER] P3 coefficients 1, 0, 0, 6, 0, 0, 90, 0, 0, 1680
        monkeypatch.setenv("REFLEXO_CACHE", str(tmp_path))
        _, out, _ = run(capsys, "analyze", "3", "--period", "9", "--no-pf")
        assert json.loads(out)["period"] == [
            "1", "0", "0", "6", "0", "0", "90", "0", "0", "1680"
        ]

    def test_cache_byte_identical(self, capsys, tmp_path, monkeypatch):
        monkeypatch.setenv("REFLEXO_CACHE", str(tmp_path))
        _, first, _ = run(capsys, "analyze", "4a", "--no-pf")
        files = os.listdir(tmp_path)
        assert len(files) == 1 and files[0].endswith(".json")
        _, second, _ = run(capsys, "analyze", "4a", "--no-pf")
        assert first == second

    def test_unknown_name_exits_2(self, capsys):
        code, _, err = run(capsys, "analyze", "zz")
        assert code == 2


class TestPeriodCommands:
    def test_period_lines(self, capsys):
        code, out, _ = run(capsys, "period", "3", "-n", "6")
        assert code == 0
        assert out.strip().splitlines() == ["1", "0", "0", "6", "0", "0", "90"]

    def test_pf_both_forms(self, capsys):
        code, out, _ = run(capsys, "pf", "3")
        assert code == 0
        t_form, d_form = out.strip().splitlines()
        assert "D^2" in t_form and "t^3" in t_form
        assert d_form.startswith("(") and "D^2" in d_form


class TestMutationsCommand:
    def test_4c(self, capsys):
        code, out, _ = run(capsys, "mutations", "4c")
        assert code == 0
        assert any(line.endswith("-> 4a") for line in out.strip().splitlines())

    def test_classes(self, capsys):
        code, out, _ = run(capsys, "classes")
        assert code == 0
        assert out.strip().splitlines() == [
            "3", "4a,4c", "4b", "5a,5b", "6a,6b,6c,6d", "7a,7b",
            "8a,8b,8c", "9",
        ]


class TestSvg:
    def test_polygon_3(self, capsys):
        # [TRIVIAL] triangle with 4 lattice dots (3 on hull, origin inside)
        code, out, _ = run(capsys, "svg", "3", "polygon")
        assert code == 0
        root = ET.fromstring(out)
        assert root.tag.endswith("svg")
        dots = [c for c in root if c.tag.endswith("circle")]
        assert len(dots) >= 4

    def test_dual_3(self, capsys):
        # [PAPER] (P3) polar = P9: 9 boundary lattice points on the hull
        code, out, _ = run(capsys, "svg", "3", "dual")
        assert code == 0
        ET.fromstring(out)  # well-formed
        assert "polygon" in out

    def test_fibres_6b(self, capsys):
        # [PAPER] diagram labeled I6, I3, I2, I1
        code, out, _ = run(capsys, "svg", "6b", "fibres")
        assert code == 0
        ET.fromstring(out)
        for label in ("I6", "I3", "I2", "I1"):
            assert label in out

    def test_bad_mode_exits_2(self, capsys):
        code, _, _ = run(capsys, "svg", "3", "everything")
        assert code == 2


class TestUsage:
    def test_no_command_exits_2(self, capsys):
        code, _, _ = run(capsys)
        assert code == 2
