"""Tests for the command-line front end (cli)."""

from __future__ import annotations

import json

import pandas as pd
import pytest

from artinian_hvec import __version__, cli
from artinian_hvec.cli import (
    EXIT_BUDGET,
    EXIT_INFEASIBLE,
    EXIT_INPUT,
    EXIT_MISMATCH,
    EXIT_OK,
    main,
)
from artinian_hvec.core.maxima import ExistenceBranch
from artinian_hvec.core.settings import ENV_BUDGET


def _run(capsys, *argv: str) -> tuple[int, str, str]:
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def _report(capsys, *argv: str) -> dict:
    code, out, _ = _run(capsys, *argv, "--json")
    assert code == EXIT_OK
    return json.loads(out)


# ---------------------------------------------------------------------------
# 1. Binomial helpers
# ---------------------------------------------------------------------------


class TestArithmetic:
    def test_expand(self, capsys):
        code, out, _ = _run(capsys, "expand", "7", "3")
        assert code == EXIT_OK
        assert out.strip() == "C(4,3)+C(3,2)"

    def test_growth_and_lower(self, capsys):
        assert _run(capsys, "growth", "7", "3")[1].strip() == "9"
        assert _run(capsys, "lower", "9", "4")[1].strip() == "7"

    def test_json_report_shape(self, capsys):
        report = _report(capsys, "growth", "6", "2")
        assert report["command"] == "growth"
        assert report["inputs"] == {"h": 6, "d": 2}
        assert report["outputs"] == {"growth": 10}
        assert report["version"] == __version__
        assert "growth" in report["provenance"]

    def test_json_is_deterministic(self, capsys):
        first = _run(capsys, "expand", "16", "3", "--json")[1]
        second = _run(capsys, "expand", "16", "3", "--json")[1]
        assert first == second

    def test_invalid_expansion(self, capsys):
        code, _, err = _run(capsys, "growth", "0", "2")
        assert code == EXIT_INPUT
        assert err.startswith("error:")


# ---------------------------------------------------------------------------
# 2. Bounds
# ---------------------------------------------------------------------------


class TestBound:
    def test_recursive(self, capsys):
        code, out, _ = _run(capsys, "bound", "--r", "3", "--socle", "(0,0,0,3,0,0,0,0,1)")
        assert code == EXIT_OK
        lines = out.splitlines()
        assert lines[0] == "(1,3,6,10,9,10,6,3,1)"
        assert "coincide=false" in lines[1]

    def test_fl_json(self, capsys):
        report = _report(
            capsys, "bound", "--r", "3", "--socle", "(0,0,0,3,0,0,0,0,1)", "--kind", "fl"
        )
        assert report["outputs"]["bound"] == [1, 3, 6, 10, 15, 10, 6, 3, 1]
        assert report["outputs"]["profile"]["coincide"] is False
        assert report["inputs"]["kind"] == "fl"

    def test_zanello_kind(self, capsys):
        code, out, _ = _run(
            capsys, "bound", "--r", "3", "--socle", "(0,0,0,3,0,0,0,0,1)", "--kind", "zanello"
        )
        assert code == EXIT_OK
        assert out.splitlines()[0] == "(1,3,6,10,9,10,6,3,1)"

    def test_profile_json_key(self, capsys):
        report = _report(capsys, "bound", "--r", "3", "--socle", "(0,0,0,3,0,0,0,0,1)")
        assert report["outputs"]["profile"]["zanello"] == [1, 3, 6, 10, 9, 10, 6, 3, 1]

    def test_top_degree_infeasible(self, capsys):
        code, out, err = _run(capsys, "bound", "--r", "3", "--socle", "(0,2,4)")
        assert code == EXIT_INFEASIBLE
        assert out == ""
        assert err.startswith("infeasible pair:")

    def test_fl_gorenstein_is_compressed(self, capsys):
        out = _run(capsys, "bound", "--r", "3", "--socle", "(0,0,0,0,0,1)", "--kind", "fl")[1]
        assert out.splitlines()[0] == "(1,3,6,6,3,1)"

    def test_symmetric(self, capsys):
        code, out, _ = _run(
            capsys, "bound", "--r", "4", "--socle", "(0,0,0,4,0,0,0,0,1)", "--kind", "symmetric"
        )
        assert code == EXIT_OK
        assert out.splitlines() == ["(1,4,10,20,25,16,10,4,1)", "known_admissible=false"]

    def test_symmetric_needs_two_entry_socle(self, capsys):
        code, _, err = _run(
            capsys, "bound", "--r", "3", "--socle", "(0,1,1,1)", "--kind", "symmetric"
        )
        assert code == EXIT_INPUT
        assert "symmetric" in err

    def test_infeasible(self, capsys):
        code, _, err = _run(capsys, "bound", "--r", "3", "--socle", "(0,0,6,0,1)")
        assert code == EXIT_INFEASIBLE
        assert err.startswith("infeasible pair:")

    def test_malformed_socle(self, capsys):
        code, _, _ = _run(capsys, "bound", "--r", "3", "--socle", "0,0,1")
        assert code == EXIT_INPUT

    def test_exists(self, capsys):
        assert _run(capsys, "exists", "--r", "3", "--socle", "(0,0,1,0,1)")[1].strip() == "exists"
        out = _run(capsys, "exists", "--r", "3", "--socle", "(0,0,0,3,0,0,0,0,1)")[1]
        assert out.strip() == "does-not-exist"


# ---------------------------------------------------------------------------
# 3. Checks and enumeration
# ---------------------------------------------------------------------------


class TestCheckAndEnumerate:
    def test_check_text(self, capsys):
        code, out, _ = _run(capsys, "check", "(1,3,6,10,8,7,6,3,1)")
        assert code == EXIT_OK
        lines = {line.split()[0]: line.split()[1] for line in out.splitlines()}
        assert lines["hvec.symmetric"] == "FAIL"
        assert lines["hvec.o_sequence"] == "PASS"

    def test_check_json(self, capsys):
        report = _report(capsys, "check", "(1,3,6,7,8,7,6,3,1)")
        assert report["outputs"]["failures"] == []
        assert {f["status"] for f in report["outputs"]["findings"]} == {"PASS"}

    def test_gorenstein_enumeration(self, capsys):
        code, out, _ = _run(capsys, "gorenstein", "--e", "4")
        assert code == EXIT_OK
        assert "(1,3,6,3,1)" in out.splitlines()
        assert "(1,3,1,3,1)" not in out.splitlines()

    def test_gorenstein_caps(self, capsys):
        out = _run(capsys, "gorenstein", "--e", "4", "--caps", "(1,2,inf,inf,inf)")[1]
        assert all(line.startswith("(1,2,") or line.startswith("(1,1,") for line in out.split())

    def test_bad_caps(self, capsys):
        code, _, _ = _run(capsys, "gorenstein", "--e", "4", "--caps", "(1,two)")
        assert code == EXIT_INPUT


# ---------------------------------------------------------------------------
# 4. Two-entry socles
# ---------------------------------------------------------------------------


class TestTwoEntry:
    def test_maxima(self, capsys):
        code, out, err = _run(capsys, "maxima", "--p", "3", "--sp", "3", "--e", "8")
        assert code == EXIT_OK
        assert out.splitlines() == [
            "unique=false",
            "(1,3,6,10,8,7,6,3,1)",
            "(1,3,6,10,9,7,5,3,1)",
        ]
        assert "candidates examined" in err

    def test_maxima_budget(self, capsys):
        code, _, err = _run(capsys, "maxima", "--p", "3", "--sp", "3", "--e", "8", "--budget", "4")
        assert code == EXIT_BUDGET
        assert err.startswith("budget exceeded:")

    def test_maxima_budget_from_environment(self, capsys, monkeypatch):
        monkeypatch.setenv(ENV_BUDGET, "4")
        code, _, _ = _run(capsys, "maxima", "--p", "3", "--sp", "3", "--e", "8")
        assert code == EXIT_BUDGET

    def test_maxima_infeasible(self, capsys):
        code, _, _ = _run(capsys, "maxima", "--p", "2", "--sp", "6", "--e", "6")
        assert code == EXIT_INFEASIBLE

    def test_bad_degrees(self, capsys):
        code, _, _ = _run(capsys, "classify", "--p", "6", "--sp", "1", "--e", "6")
        assert code == EXIT_INPUT

    def test_classify_non_existence(self, capsys):
        code, out, _ = _run(capsys, "classify", "--p", "3", "--sp", "3", "--e", "8")
        assert code == EXIT_OK
        assert out.splitlines() == [f"does-not-exist ({ExistenceBranch.NON_EXISTENCE.value})"]

    def test_classify_with_maximum(self, capsys):
        out = _run(capsys, "classify", "--p", "2", "--sp", "4", "--e", "6")[1]
        assert out.splitlines() == [
            f"exists ({ExistenceBranch.LARGE_SOCLE.value})",
            "(1,3,6,2,2,2,1)",
        ]

    def test_classify_json(self, capsys):
        report = _report(capsys, "classify", "--p", "4", "--sp", "10", "--e", "8")
        assert report["outputs"] == {
            "exists": True,
            "branch": ExistenceBranch.HIGH_DEGREE.value,
            "maximum": [1, 3, 6, 10, 15, 5, 5, 3, 1],
        }
        report = _report(capsys, "classify", "--p", "3", "--sp", "3", "--e", "8")
        assert report["outputs"]["maximum"] is None

    def test_witnesses(self, capsys):
        out = _run(capsys, "witnesses", "--p", "3", "--sp", "5", "--e", "8")[1]
        assert out.splitlines() == [
            "(1,3,6,10,5,5,5,3,1)",
            "(1,3,6,10,6,5,4,3,1)",
            "slope=-1 q=2",
        ]

    def test_witnesses_outside_regime(self, capsys):
        code, _, _ = _run(capsys, "witnesses", "--p", "2", "--sp", "2", "--e", "6")
        assert code == EXIT_INPUT

    def test_family(self, capsys):
        code, out, _ = _run(capsys, "family", "--n", "2", "--verify")
        assert code == EXIT_OK
        lines = out.splitlines()
        assert lines[0].startswith("socle (p=3,s_p=5,e=8)")
        assert lines[-1] == "verified=true"

    def test_family_json(self, capsys):
        report = _report(capsys, "family", "--n", "3")
        assert len(report["outputs"]["predicted"]) == 3
        assert "verified" not in report["outputs"]


# ---------------------------------------------------------------------------
# 5. Oracle
# ---------------------------------------------------------------------------


class TestOracle:
    def test_monomial_octic(self, capsys, monomial_octic_path):
        code, out, _ = _run(capsys, "oracle", "--file", str(monomial_octic_path), "--socle")
        assert code == EXIT_OK
        assert out.splitlines() == ["(1,3,5,7,8,7,5,3,1)", "(0,0,0,0,0,0,0,0,1)"]

    def test_added_cubics(self, capsys, conic_path):
        report = _report(
            capsys,
            "oracle",
            "--file",
            str(conic_path),
            "--socle",
            "--add-degree",
            "3",
            "--add-count",
            "3",
            "--seed",
            "7",
        )
        assert report["outputs"]["hvector"] == [1, 3, 6, 10, 9, 7, 5, 3, 1]
        assert report["outputs"]["socle"] == [0, 0, 0, 3, 0, 0, 0, 0, 1]
        assert report["inputs"]["seed"] == 7

    def test_add_count_needs_degree(self, capsys, conic_path):
        code, _, err = _run(capsys, "oracle", "--file", str(conic_path), "--add-count", "2")
        assert code == EXIT_INPUT
        assert "--add-degree" in err

    def test_missing_file(self, capsys, tmp_path):
        code, _, _ = _run(capsys, "oracle", "--file", str(tmp_path / "absent.txt"))
        assert code == EXIT_INPUT

    def test_parse_error(self, capsys, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_text("y1^2\ny1 + \n", encoding="utf-8")
        code, _, err = _run(capsys, "oracle", "--file", str(path))
        assert code == EXIT_INPUT
        assert "line 2" in err

    def test_non_utf8_form_line(self, capsys, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_bytes(b"y1^2\ny2^2\xff\n")
        code, out, err = _run(capsys, "oracle", "--file", str(path))
        assert code == EXIT_INPUT
        assert out == ""
        assert "line 2" in err

    def test_non_utf8_comment(self, capsys, tmp_path):
        path = tmp_path / "latin.txt"
        path.write_bytes(b"# caf\xe9\ny1^4*y2^3*y3\n")
        code, out, _ = _run(capsys, "oracle", "--file", str(path))
        assert code == EXIT_OK
        assert out.splitlines() == ["(1,3,5,7,8,7,5,3,1)"]


# ---------------------------------------------------------------------------
# 6. Sweeps, configuration and argument errors
# ---------------------------------------------------------------------------


class TestSweeps:
    def test_sweep_to_csv(self, capsys, tmp_path):
        path = tmp_path / "sweep.csv"
        code, _, err = _run(capsys, "sweep", "--max-e", "5", "--output", str(path))
        assert code == EXIT_OK
        assert "rows written" in err
        assert path.read_text(encoding="utf-8").startswith("e;p;s_p;")

    def test_sweep_bom(self, capsys, tmp_path):
        path = tmp_path / "sweep.csv"
        code, _, _ = _run(capsys, "sweep", "--max-e", "4", "--output", str(path), "--bom")
        assert code == EXIT_OK
        assert path.read_bytes().startswith(b"\xef\xbb\xbfe;p;s_p;")

    def test_certify_bom(self, capsys, tmp_path):
        plain, marked = tmp_path / "plain.csv", tmp_path / "marked.csv"
        base = ("certify", "--r", "3", "--max-e", "4", "--output")
        assert _run(capsys, *base, str(plain))[0] == EXIT_OK
        assert _run(capsys, *base, str(marked), "--bom")[0] == EXIT_OK
        assert marked.read_bytes() == b"\xef\xbb\xbf" + plain.read_bytes()

    def test_sweep_mismatch_exit(self, capsys, monkeypatch):
        def fake_sweep(max_e, budget):
            return pd.DataFrame({"p": [1, 2], "agrees": [True, False]})

        monkeypatch.setattr(cli, "existence_sweep", fake_sweep)
        code, _, err = _run(capsys, "sweep", "--max-e", "5")
        assert code == EXIT_MISMATCH
        assert "1 rows failed" in err

    def test_certify(self, capsys, tmp_path):
        path = tmp_path / "certify.xlsx"
        code, _, _ = _run(capsys, "certify", "--r", "3", "--max-e", "4", "--output", str(path))
        assert code == EXIT_OK
        assert path.exists()


class TestArguments:
    def test_unknown_command(self, capsys):
        assert _run(capsys, "frobnicate")[0] == EXIT_INPUT

    def test_missing_required(self, capsys):
        assert _run(capsys, "classify", "--p", "3")[0] == EXIT_INPUT

    def test_version(self, capsys):
        code, out, _ = _run(capsys, "--version")
        assert code == EXIT_OK
        assert __version__ in out

    def test_config_overlay(self, capsys, tmp_path):
        path = tmp_path / "overlay.yml"
        path.write_text("enumeration:\n  max_socle_degree: 4\n", encoding="utf-8")
        code, _, _ = _run(
            capsys, "maxima", "--p", "3", "--sp", "3", "--e", "8", "--config", str(path)
        )
        assert code == EXIT_BUDGET

    def test_bad_config(self, capsys, tmp_path):
        code, _, _ = _run(capsys, "expand", "7", "3", "--config", str(tmp_path / "absent.yml"))
        assert code == EXIT_INPUT

    @pytest.mark.parametrize("flag", ["--verbose", "-v"])
    def test_verbose(self, capsys, flag):
        assert _run(capsys, "expand", "7", "3", flag)[0] == EXIT_OK
