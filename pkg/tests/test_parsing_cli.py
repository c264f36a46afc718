import json
import subprocess
import sys
from fractions import Fraction

import jsonschema
import pytest

from galoiskit import ParseError
from galoiskit.cli import EXIT_DEGREE_CAP, EXIT_INPUT, EXIT_OK, REPORT_SCHEMA, main
from galoiskit.parsing import evaluate_in_field, parse_poly
from galoiskit.poly import render_poly
from galoiskit.splitting import splitting_field

from helpers import P


class TestParsePoly:
    def test_plain_quintic(self):
        assert parse_poly("x^5 - x - 1") == P(-1, -1, 0, 0, 0, 1)

    def test_product_expands(self):
        assert parse_poly("(x^2-2)*(x^2-3)") == P(6, 0, -5, 0, 1)

    def test_unknown_symbol_with_column(self):
        with pytest.raises(ParseError) as err:
            parse_poly("x^2 - y")
        assert err.value.column == 7
        assert "unknown symbol y" in str(err.value)

    def test_rational_coefficients(self):
        assert parse_poly("x/2 + 1/3") == P(0, 1) * Fraction(1, 2) + P(1) * Fraction(1, 3)

    def test_unary_minus_and_parens(self):
        assert parse_poly("-(x - 1)^2") == -(P(-1, 1) ** 2)

    def test_division_by_polynomial_rejected(self):
        with pytest.raises(ParseError):
            parse_poly("1/x")

    def test_division_by_zero_rejected(self):
        with pytest.raises(ParseError):
            parse_poly("x/0")

    def test_trailing_garbage_rejected(self):
        with pytest.raises(ParseError):
            parse_poly("x^2 2")

    def test_unexpected_character(self):
        with pytest.raises(ParseError) as err:
            parse_poly("x^2 - $")
        assert err.value.column == 7

    def test_fractional_exponent_rejected(self):
        with pytest.raises(ParseError):
            parse_poly("x^(1/2)")

    def test_roundtrip_render(self):
        for text in ("x^5 - x - 1", "2*x^3 + 1/2*x - 7", "x", "-3"):
            p = parse_poly(text)
            assert parse_poly(render_poly(p)) == p


class TestRadicandEvaluation:
    def test_environment_names(self):
        e = splitting_field(P(-2, 0, 1))
        s2 = e.roots[1]
        val = evaluate_in_field("1 + r1^2 - r1", e.field.ext, {"r1": s2})
        assert val == 3 - s2

    def test_unknown_name_lists_known(self):
        e = splitting_field(P(-2, 0, 1))
        with pytest.raises(ParseError) as err:
            evaluate_in_field("r2", e.field.ext, {"r1": e.roots[0]})
        assert "known names" in str(err.value)

    def test_division_in_field(self):
        e = splitting_field(P(-2, 0, 1))
        s2 = e.roots[1]
        assert evaluate_in_field("1/r1", e.field.ext, {"r1": s2}) == s2 / 2


def run_cli(*argv):
    return main(list(argv))


class TestCliExitCodes:
    def test_group_ok(self, capsys):
        assert run_cli("group", "x^3-2") == EXIT_OK
        out = capsys.readouterr().out
        assert "order" in out

    def test_parse_error_exit_2(self, capsys):
        assert run_cli("split", "x^2 - y") == EXIT_INPUT
        err = capsys.readouterr().err
        assert "column 7" in err

    def test_degree_cap_exit_3(self, capsys):
        assert run_cli("split", "x^5-x-1") == EXIT_DEGREE_CAP
        err = capsys.readouterr().err
        assert "cap" in err

    def test_degree_cap_flag(self, capsys):
        assert run_cli("split", "x^3-2", "--degree-cap", "3") == EXIT_DEGREE_CAP

    def test_bad_chain_file_exit_2(self, tmp_path, capsys):
        bad = tmp_path / "bad.json"
        bad.write_text("{not json")
        assert run_cli("normalize", "--chain", str(bad)) == EXIT_INPUT

    def test_zero_radicand_exit_2(self, tmp_path, capsys):
        f = tmp_path / "chain.json"
        f.write_text(json.dumps({"stages": [{"k": 2, "radicand": 0}]}))
        assert run_cli("normalize", "--chain", str(f)) == EXIT_INPUT


def cli_json(capsys, *argv):
    code = run_cli(*argv, "--json")
    assert code == EXIT_OK
    out = capsys.readouterr().out
    report = json.loads(out)
    jsonschema.validate(report, REPORT_SCHEMA)
    return out, report


class TestCliJson:
    def test_factor_schema(self, capsys):
        _, report = cli_json(capsys, "factor", "x^4-1")
        assert report["command"] == "factor"
        assert [f["polynomial"] for f in report["result"]["factors"]] == [
            "x - 1", "x + 1", "x^2 + 1",
        ]

    def test_group_schema_and_assertions(self, capsys):
        _, report = cli_json(capsys, "group", "x^4+1")
        assert report["result"]["order"] == 4
        names = {a["name"] for a in report["assertions"]}
        assert "galois.order_equals_degree" in names
        assert all(a["passed"] for a in report["assertions"])

    def test_minpoly_agreement(self, capsys):
        _, report = cli_json(capsys, "minpoly", "x^3-2", "--element", "r1 + r2")
        assert report["result"]["agree"] is True
        assert report["result"]["orbit_method"] == report["result"]["linear_algebra_method"]

    def test_fixed_field(self, capsys):
        _, report = cli_json(capsys, "fixed", "x^3-2", "--subgroup", "1")
        assert report["result"]["subgroup_order"] * report["result"]["fixed_field_degree"] == 6
        assert report["result"]["duality_roundtrip"] is True

    def test_solvable_both_ways(self, capsys):
        _, rep1 = cli_json(capsys, "solvable", "x^5-2")
        assert rep1["result"]["verdict"] == "SOLVABLE_GROUP"
        assert rep1["result"]["certificate"]["accepted"] is True
        _, rep2 = cli_json(capsys, "solvable", "x^5-x-1")
        assert rep2["result"]["verdict"] == "NOT_SOLVABLE_BY_RADICALS"
        assert rep2["result"]["quintic_witness"]["samples"][0] == {
            "prime": 2, "factor_degrees": [2, 3],
        }

    def test_chain_commands(self, tmp_path, capsys):
        f = tmp_path / "chain.json"
        f.write_text(json.dumps(
            {"stages": [{"k": 2, "radicand": 2}, {"k": 2, "radicand": "1 + r1"}]}
        ))
        _, rep = cli_json(capsys, "normalize", "--chain", str(f))
        assert rep["result"]["level_degrees"] == [1, 2, 8]
        _, rep = cli_json(capsys, "verify-tower", "--chain", str(f))
        assert rep["result"]["verification"]["all_passed"] is True
        _, rep = cli_json(capsys, "chain-groups", "--chain", str(f))
        assert rep["result"]["group_chain_orders"] == [8, 8, 4, 1]
        assert rep["result"]["certificate"]["accepted"] is True
        assert all(layer["embedded"] for layer in rep["result"]["abelian_layers"])

    def test_json_deterministic(self, capsys):
        out1, _ = cli_json(capsys, "group", "x^3-2", "--seed", "5")
        out2, _ = cli_json(capsys, "group", "x^3-2", "--seed", "5")
        assert out1 == out2


class TestConsoleScript:
    def test_subprocess_entry_point(self):
        proc = subprocess.run(
            [sys.executable, "-m", "galoiskit.cli", "factor", "x^2-1", "--json"],
            capture_output=True, text=True,
        )
        assert proc.returncode == 0
        report = json.loads(proc.stdout)
        assert report["command"] == "factor"
