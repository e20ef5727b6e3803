"""Dataset loading, rendering, and the command-line surface."""

import io
import os

import pytest

from superpoly.laurent import Poly3, parse_poly, format_poly
from superpoly.complexes import build_torus_complex, serialize_complex
from superpoly.dataset import DatasetError, bundled_path, load_dataset
from superpoly.render import render_svg, render_text
from superpoly.cli import main


class TestDataset:
    def test_bundled_loads_clean(self):
        records = load_dataset("bundled")
        names = {r.name for r in records}
        assert {"3_1", "4_1", "7_3", "9_42", "8_19", "10_124"} <= names

    def test_trefoil_row_matches_torus_family(self):
        from superpoly.torus import super_t2

        rows = {r.name: r for r in load_dataset()}
        assert rows["3_1"].superpoly == super_t2(1)
        assert rows["5_1"].superpoly == super_t2(2)
        assert rows["7_1"].superpoly == super_t2(3)

    def test_9_42_polynomial(self):
        rows = {r.name: r for r in load_dataset()}
        assert rows["9_42"].homfly == parse_poly(
            "a^-2*q^-2 + a^-2*q^2 - q^-4 - 1 - q^4 + a^2*q^-2 + a^2*q^2"
        )
        c = rows["9_42"].load_complex()
        assert c is not None and len(c) == 9

    def test_empty_file(self, tmp_path):
        path = tmp_path / "empty.tsv"
        path.write_text("# nothing here\n\n")
        assert load_dataset(str(path)) == []

    def test_bad_row_diagnostics(self, tmp_path):
        path = tmp_path / "bad.tsv"
        path.write_text(
            "ok\t0\t0\t1\n"
            "broken\t0\t0\ta^2\t\t\tq^2*t\n"  # superpoly does not specialize
        )
        with pytest.raises(DatasetError) as err:
            load_dataset(str(path))
        assert any("broken" in p for p in err.value.problems)

    def test_short_row_rejected(self, tmp_path):
        path = tmp_path / "short.tsv"
        path.write_text("just_a_name\t0\n")
        with pytest.raises(DatasetError):
            load_dataset(str(path))


class TestRender:
    def test_trefoil_grid(self):
        text = render_text(build_torus_complex(2, 3))
        lines = [l for l in text.splitlines() if l.startswith("a=")]
        assert len(lines) == 2  # two a-levels
        assert lines[0].startswith("a=   4")
        assert "bottom row a-grading: 2" in text

    def test_unknot_single_cell(self):
        from superpoly.complexes import DotComplex

        text = render_text(DotComplex([(0, 0, 0)], {}))
        assert "a=   0 | 0" in text

    def test_t34_row_sizes(self):
        c = build_torus_complex(3, 4)
        text = render_text(c)
        rows = [l for l in text.splitlines() if l.startswith("a=")]
        assert len(rows) == 3
        counts = [sum(1 for cell in row.split("|")[1].split() if cell) for row in rows]
        assert counts == [1, 5, 5]
        assert "bottom row a-grading: 6" in text

    def test_svg_self_contained(self):
        svg = render_svg(build_torus_complex(2, 3))
        assert svg.startswith("<svg") and svg.endswith("</svg>")
        assert svg.count("<circle") == 3
        assert svg.count("<line") == 2


class TestCli:
    def test_homfly_canonical_round_trip(self, capsys):
        assert main(["homfly", "torus", "2", "3"]) == 0
        out = capsys.readouterr().out.strip()
        assert parse_poly(out) == parse_poly("a^2*q^-2 + a^2*q^2 - a^4")
        assert format_poly(parse_poly(out)) == out

    def test_homfly_forms_agree(self, capsys):
        main(["homfly", "torus", "3", "5", "--form", "jones"])
        jones = capsys.readouterr().out
        main(["homfly", "torus", "3", "5", "--form", "product"])
        assert jones == capsys.readouterr().out

    def test_reduce_torus(self, capsys):
        assert main(["reduce", "--torus", "3", "4", "--n", "2"]) == 0
        out = capsys.readouterr().out.strip()
        assert parse_poly(out) == parse_poly(
            "q^6 + q^10*t^2 + q^12*t^3 + q^12*t^4 + q^16*t^5"
        )

    def test_super_thin_stdin(self, capsys, monkeypatch):
        monkeypatch.setattr("sys.stdin", io.StringIO("a^2*q^-2 + a^2*q^2 - a^4"))
        assert main(["super", "thin", "--homfly", "-", "--s", "2"]) == 0
        out = capsys.readouterr().out.strip()
        assert parse_poly(out) == parse_poly("a^2*q^-2 + a^2*q^2*t^2 + a^4*t^3")

    def test_super_unreduced(self, capsys):
        assert main(["super", "torus", "2", "3", "--unreduced"]) == 0
        out = parse_poly(capsys.readouterr().out.strip())
        # dividing by q - q^{-1} after a = q^N must stay exact
        from superpoly.torus import khrN_unreduced_prediction

        khrN_unreduced_prediction(out, 4)

    def test_stable_header(self, capsys):
        assert main(["stable", "--n", "2", "--qmax", "8"]) == 0
        out = capsys.readouterr().out
        assert out.startswith("# qmax=8\n")

    def test_stable_reduce(self, capsys):
        assert main(["stable", "--n", "3", "--qmax", "24", "--reduce", "2"]) == 0
        body = capsys.readouterr().out.splitlines()[1]
        assert parse_poly(body).coeff(0, 4, 2) == 1
        assert main(["stable", "--n", "3", "--qmax", "24", "--reduce", "0"]) == 0

    def test_check_bundled(self, capsys):
        assert main(["check", "--dataset", "bundled"]) == 0
        out = capsys.readouterr().out
        assert "FAIL" not in out and "PASS" in out

    def test_check_only(self, capsys):
        assert main(["check", "--dataset", "bundled", "--only", "patterns"]) == 0
        out = capsys.readouterr().out
        assert out.count("PASS") == 1

    def test_check_failure_exit_code(self, tmp_path, capsys):
        bad = tmp_path / "bad.tsv"
        bad.write_text("x\t0\t0\tnot a poly\n")
        assert main(["check", "--dataset", str(bad)]) == 1

    def test_verify_and_render_files(self, tmp_path, capsys):
        path = tmp_path / "t34.cplx"
        path.write_text(serialize_complex(build_torus_complex(3, 4)))
        assert main(["verify", "--complex", str(path)]) == 0
        out = capsys.readouterr().out
        assert "OK" in out and "thin" in out.replace("thick", "thin")
        assert main(["render", "--complex", str(path), "--format", "svg"]) == 0
        assert capsys.readouterr().out.startswith("<svg")

    def test_verify_rejects_broken_complex(self, tmp_path, capsys):
        path = tmp_path / "broken.cplx"
        path.write_text("gen 0 2 0 1\ngen 1 0 4 0\ndiff 1 0 1 1/1\n")
        assert main(["verify", "--complex", str(path)]) == 1

    def test_usage_error_is_2(self):
        with pytest.raises(SystemExit) as err:
            main(["frobnicate"])
        assert err.value.code == 2

    def test_parse_error_is_2(self, capsys):
        assert main(["super", "thin", "--homfly", "a^+bad", "--s", "0"]) == 2

    def test_invalid_torus_is_2(self):
        assert main(["homfly", "torus", "4", "2"]) == 2
