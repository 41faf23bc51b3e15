"""The revolve command line: output formats, curve and line specs, exit codes."""

import csv
import io
import json
import math

import pytest
from click.testing import CliRunner

from commands.options import (
    EXIT_CHECK_FAILED,
    EXIT_IO_ERROR,
    EXIT_NUMERICAL_ERROR,
    EXIT_OK,
    EXIT_SPEC_ERROR,
)
from commands.specs import CurveSpec, LineSpec, map_symbol
from main import cli
from services.errors import DegenerateLine, LineSpecError, NonFiniteLine

TWO_PI = repr(2.0 * math.pi)
TORUS = ["--parametric", "cos(t)", "sin(t)", "--from", "0", "--to", TWO_PI, "--line", "3x+4y=25"]
CONE_THROUGH_AXIS = ["--graph", "x", "--from", "-1", "--to", "1", "--line", "y=0"]


@pytest.fixture
def runner():
    return CliRunner(mix_stderr=False)


class TestLineSpec:
    @pytest.mark.parametrize(
        "raw, expected",
        [
            ("3x+4y=25", (3.0, 4.0, 25.0)),
            ("3x - 4y = 0", (3.0, -4.0, 0.0)),
            ("x=0", (1.0, 0.0, 0.0)),
            ("2y=7", (0.0, 2.0, 7.0)),
            ("y = 2*x + 1", (-2.0, 1.0, 1.0)),
            ("y=x", (-1.0, 1.0, 0.0)),
            ("y=2x-3y+1", (-2.0, 4.0, 1.0)),
            ("-x+0.5y=-2", (-1.0, 0.5, -2.0)),
        ],
    )
    def test_parse(self, raw, expected):
        line = LineSpec.parse(raw).parsed
        assert (line.A, line.B, line.C) == expected

    @pytest.mark.parametrize("raw", ["3x+4y", "3x+=0", "x=y=1", "3z=1", "=1", "3x4=1", "*x=1", "\u0662x=1", "1e999x=0"])
    def test_malformed(self, raw):
        with pytest.raises(LineSpecError):
            LineSpec.parse(raw)

    def test_degenerate(self):
        with pytest.raises(DegenerateLine):
            LineSpec.parse("0x+0y=1")

    def test_coefficients_overflowing_after_collection(self):
        with pytest.raises(NonFiniteLine):
            LineSpec.parse("1e308x=-1e308x")



class TestCurveSpec:
    def test_graph_variable_is_renamed(self):
        assert map_symbol("exp(x)+x^2", "x") == "exp(t)+t^2"

    def test_graph_and_inverse_graph(self):
        graph = CurveSpec(mode="graph", expressions=("x^2",), t0=0.0, t1=2.0).build()
        assert graph.y.evaluate(1.5) == 2.25 and graph.x.evaluate(1.5) == 1.5
        inverse = CurveSpec(mode="inverse-graph", expressions=("y^2",), t0=0.0, t1=2.0).build()
        assert inverse.x.evaluate(1.5) == 2.25 and inverse.y.evaluate(1.5) == 1.5


class TestArea:
    def test_torus_json(self, runner):
        result = runner.invoke(cli, ["area", *TORUS, "--json"])
        assert result.exit_code == EXIT_OK, result.stderr
        report = json.loads(result.stdout)
        assert set(report) == {"area", "errorEstimate", "crossings", "segments"}
        assert report["area"] == pytest.approx(197.392088021787, rel=1e-8)
        assert report["crossings"] == []
        assert report["segments"] == 1

    def test_text_output(self, runner):
        result = runner.invoke(cli, ["area", *TORUS])
        assert result.exit_code == EXIT_OK, result.stderr
        lines = result.stdout.splitlines()
        assert [line.split(":")[0] for line in lines] == ["area", "errorEstimate", "crossings", "segments"]
        assert float(lines[0].split(": ")[1]) == pytest.approx(4.0 * math.pi**2 * 5.0, rel=1e-8)
        assert lines[2] == "crossings: none"

    def test_crossing_on_grid_point(self, runner):
        result = runner.invoke(cli, ["area", *CONE_THROUGH_AXIS, "--grid", "3", "--json"])
        assert result.exit_code == EXIT_OK, result.stderr
        report = json.loads(result.stdout)
        assert report["crossings"] == [0.0]
        assert report["segments"] == 2
        assert report["area"] == pytest.approx(2.0 * math.sqrt(2.0) * math.pi, rel=1e-9)

    def test_graph_variable_spellings_agree(self, runner):
        common = ["--from", "0", "--to", "3", "--line", "y=0"]
        with_x = runner.invoke(cli, ["area", "--graph", "x^2-3*x+12", *common])
        with_t = runner.invoke(cli, ["area", "--graph", "t^2-3*t+12", *common])
        assert with_x.exit_code == EXIT_OK
        assert with_x.stdout == with_t.stdout

    @pytest.mark.parametrize("line, expected", [("y=0", math.pi * math.sqrt(2.0)), ("y=x", 0.0)])
    def test_segment(self, runner, line, expected):
        result = runner.invoke(cli, ["area", "--graph", "t", "--from", "0", "--to", "1", "--line", line, "--json"])
        assert result.exit_code == EXIT_OK, result.stderr
        assert json.loads(result.stdout)["area"] == pytest.approx(expected, rel=1e-9, abs=1e-12)

    def test_inverse_graph(self, runner):
        result = runner.invoke(
            cli, ["area", "--inverse-graph", "y", "--from", "0", "--to", "1", "--line", "x=0", "--json"]
        )
        assert result.exit_code == EXIT_OK, result.stderr
        assert json.loads(result.stdout)["area"] == pytest.approx(math.pi * math.sqrt(2.0), rel=1e-9)

    def test_verbose_logs_go_to_stderr(self, runner):
        quiet = runner.invoke(cli, ["area", *TORUS, "--json"])
        verbose = runner.invoke(cli, ["--verbose", "area", *TORUS, "--json"])
        assert verbose.exit_code == EXIT_OK
        assert verbose.stdout == quiet.stdout
        assert verbose.stderr


class TestExitCodes:
    @pytest.mark.parametrize(
        "args",
        [
            ["--graph", "t $ 2", "--from", "0", "--to", "1", "--line", "y=0"],
            ["--graph", "t^t", "--from", "0", "--to", "1", "--line", "y=0"],
            ["--graph", "t", "--from", "0", "--to", "1", "--line", "3x+=0"],
            ["--graph", "t", "--from", "0", "--to", "1", "--line", "0x+0y=1"],
            ["--graph", "t", "--from", "0", "--to", "1", "--line", "1e999x=0"],
            ["--graph", "t", "--from", "1", "--to", "1", "--line", "y=0"],
            ["--graph", "t", "--parametric", "t", "t", "--from", "0", "--to", "1", "--line", "y=0"],
            ["--from", "0", "--to", "1", "--line", "y=0"],
        ],
    )
    def test_bad_input(self, runner, args):
        result = runner.invoke(cli, ["area", *args])
        assert result.exit_code == EXIT_SPEC_ERROR
        assert result.stdout == ""

    def test_lex_error_message(self, runner):
        result = runner.invoke(cli, ["area", "--graph", "t $ 2", "--from", "0", "--to", "1", "--line", "y=0"])
        assert "offset 2" in result.stderr

    def test_numerical_failure(self, runner):
        result = runner.invoke(cli, ["area", "--graph", "sqrt(t)", "--from", "-1", "--to", "1", "--line", "y=0"])
        assert result.exit_code == EXIT_NUMERICAL_ERROR
        assert result.stdout == ""

    def test_unwritable_output(self, runner, tmp_path):
        target = tmp_path / "missing" / "torus.obj"
        result = runner.invoke(cli, ["mesh", *TORUS, "--rings", "8", "--segments", "8", "--out", str(target)])
        assert result.exit_code == EXIT_IO_ERROR

    def test_output_is_a_directory(self, runner, tmp_path):
        result = runner.invoke(cli, ["mesh", *TORUS, "--rings", "8", "--segments", "8", "--out", str(tmp_path)])
        assert result.exit_code == EXIT_IO_ERROR
        assert result.stdout == ""

    @pytest.mark.parametrize("command", ["area", "mesh", "check", "table"])
    def test_non_finite_line(self, runner, command, tmp_path):
        args = [command, "--graph", "t", "--from", "0", "--to", "1", "--line", "1e999x=0"]
        if command == "mesh":
            args += ["--out", str(tmp_path / "x.obj")]
        result = runner.invoke(cli, args)
        assert result.exit_code == EXIT_SPEC_ERROR
        assert result.stdout == ""



class TestTable:
    def test_half_circle(self, runner):
        result = runner.invoke(
            cli,
            ["table", "--parametric", "cos(t)", "sin(t)", "--from", "0", "--to", repr(math.pi),
             "--line", "y=0", "--samples", "3"],
        )
        assert result.exit_code == EXIT_OK, result.stderr
        rows = list(csv.reader(io.StringIO(result.stdout)))
        assert rows[0] == ["t", "x", "y", "r", "arc_speed", "integrand"]
        values = [[float(cell) for cell in row] for row in rows[1:]]
        assert len(values) == 3
        assert [row[3] for row in values] == pytest.approx([0.0, 1.0, 0.0], abs=1e-12)
        for t, x, y, r, speed, integrand in values:
            assert speed == pytest.approx(1.0)
            assert integrand == pytest.approx(2.0 * math.pi * r * speed, abs=1e-12)

    def test_default_sample_count(self, runner):
        result = runner.invoke(cli, ["table", *CONE_THROUGH_AXIS])
        assert result.exit_code == EXIT_OK, result.stderr
        assert len(result.stdout.splitlines()) == 1 + 101

    def test_kink_on_sample_fails_cleanly(self, runner):
        result = runner.invoke(cli, ["table", "--graph", "abs(x)", "--from", "-1", "--to", "1", "--line", "y=-1",
                                     "--samples", "3"])
        assert result.exit_code == EXIT_NUMERICAL_ERROR
        assert result.stdout == ""


class TestMesh:
    def test_obj(self, runner, tmp_path):
        target = tmp_path / "torus.obj"
        result = runner.invoke(cli, ["mesh", *TORUS, "--rings", "16", "--segments", "12", "--out", str(target)])
        assert result.exit_code == EXIT_OK, result.stderr
        lines = target.read_text().splitlines()
        assert sum(line.startswith("v ") for line in lines) == 16 * 12
        assert sum(line.startswith("f ") for line in lines) == 2 * 15 * 12
        assert result.stdout.startswith("mesh_area: ")

    def test_stl_json(self, runner, tmp_path):
        target = tmp_path / "torus.stl"
        result = runner.invoke(
            cli, ["mesh", *TORUS, "--rings", "16", "--segments", "12", "--format", "stl", "--out", str(target), "--json"]
        )
        assert result.exit_code == EXIT_OK, result.stderr
        report = json.loads(result.stdout)
        assert report["triangles"] == 2 * 15 * 12
        assert report["vertices"] == 16 * 12
        assert report["format"] == "stl"
        assert target.stat().st_size == 84 + 50 * report["triangles"]

    def test_torus_mesh_area(self, runner, tmp_path):
        result = runner.invoke(cli, ["mesh", *TORUS, "--out", str(tmp_path / "torus.obj"), "--json"])
        assert result.exit_code == EXIT_OK, result.stderr
        assert json.loads(result.stdout)["mesh_area"] == pytest.approx(4.0 * math.pi**2 * 5.0, rel=5e-3)

    def test_slanted_graph_scene(self, runner, tmp_path):
        target = tmp_path / "slant.stl"
        result = runner.invoke(
            cli,
            ["mesh", "--graph", "x^2-3*x+12", "--from", "0", "--to", "3", "--line", "3x-4y=0",
             "--rings", "64", "--segments", "64", "--format", "stl", "--out", str(target)],
        )
        assert result.exit_code == EXIT_OK, result.stderr
        assert target.stat().st_size == 84 + 50 * 2 * 63 * 64

    def test_inverse_graph_scene(self, runner, tmp_path):
        target = tmp_path / "vase.obj"
        result = runner.invoke(
            cli,
            ["mesh", "--inverse-graph", "y^3-4*y^2+62", "--from", "-2", "--to", "5", "--line", "x=0",
             "--rings", "64", "--segments", "64", "--out", str(target)],
        )
        assert result.exit_code == EXIT_OK, result.stderr
        assert target.exists()

    def test_resolution_too_low(self, runner, tmp_path):
        result = runner.invoke(cli, ["mesh", *TORUS, "--rings", "1", "--out", str(tmp_path / "x.obj")])
        assert result.exit_code == EXIT_SPEC_ERROR


class TestCheck:
    def test_torus_passes(self, runner):
        result = runner.invoke(cli, ["check", *TORUS])
        assert result.exit_code == EXIT_OK, result.stderr
        assert result.stdout.splitlines()[-1] == "result: PASS"

    def test_cone_through_axis_passes(self, runner):
        result = runner.invoke(cli, ["check", *CONE_THROUGH_AXIS, "--rings", "257", "--segments", "256", "--json"])
        assert result.exit_code == EXIT_OK, result.stderr
        report = json.loads(result.stdout)
        assert report["passed"] is True
        assert len(report["crossings"]) == 1

    def test_coarse_sphere_fails(self, runner):
        result = runner.invoke(
            cli,
            ["check", "--parametric", "cos(t)", "sin(t)", "--from", "0", "--to", repr(math.pi),
             "--line", "y=0", "--rings", "2", "--segments", "3"],
        )
        assert result.exit_code == EXIT_CHECK_FAILED
        assert result.stdout.splitlines()[-1] == "result: FAIL"


def test_version(runner):
    result = runner.invoke(cli, ["--version"])
    assert result.exit_code == EXIT_OK
    assert "0.1.0" in result.stdout
