"""End-to-end tests of the command-line front end."""

import io
import json

import pytest

from growth.cli import CommandConfig, main, run
from growth.config import FIXTURES_DIR, GRAPHS_DIR, Command, ExitCode, OutputFormat
from growth.errors import InvariantViolation, UsageError
from growth.report import validate_report

GRAPHS = GRAPHS_DIR
A2TILDE = FIXTURES_DIR / "a2tilde-digraph.json"


def _run(capsys, *argv) -> tuple[int, str, str]:
    code = main([*argv])
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestAnalyze:
    def test_pentagon_text(self, capsys):
        code, out, _ = _run(capsys, "analyze", str(GRAPHS / "pentagon.json"), "--terms", "12")
        assert code == ExitCode.SUCCESS
        assert "2.6180339887" in out
        assert "PerronCertified" in out
        assert "beta > alpha: certified" in out
        for value in ("15", "40", "105"):
            assert value in out

    def test_json_round_trip(self, capsys):
        code, out, _ = _run(capsys, "analyze", str(GRAPHS / "golden.json"), "--format", "json", "--terms", "8")
        assert code == ExitCode.SUCCESS
        payload = json.loads(out)
        validate_report(payload)
        assert json.dumps(payload, indent=2, ensure_ascii=False) + "\n" == out

    def test_deterministic(self, capsys):
        argv = ("-q", "analyze", str(GRAPHS / "golden.json"), "--format", "json", "--terms", "6")
        first = _run(capsys, *argv)
        second = _run(capsys, *argv)
        assert first == second

    def test_hypothesis_not_claimed(self, capsys):
        code, out, _ = _run(capsys, "analyze", str(GRAPHS / "edgeless3.json"), "--terms", "4")
        assert code == ExitCode.SUCCESS
        assert "beta > alpha not claimed" in out

    def test_bundled_graph_by_name(self, capsys, monkeypatch, tmp_path):
        monkeypatch.chdir(tmp_path)
        code, out, _ = _run(capsys, "analyze", "pentagon.json", "--terms", "6")
        assert code == ExitCode.SUCCESS
        assert "2.6180339887" in out

    def test_quiet(self, capsys):
        _, _, err = _run(capsys, "-q", "analyze", str(GRAPHS / "path.json"), "--terms", "4")
        assert err == ""


class TestCompare:
    def test_golden_passes(self, capsys):
        code, out, _ = _run(capsys, "compare", str(GRAPHS / "golden.json"), "--max", "8")
        assert code == ExitCode.SUCCESS
        assert out.count("PASS") == 9
        assert "FAIL" not in out

    def test_raag(self, capsys):
        code, _, _ = _run(capsys, "compare", str(GRAPHS / "p4.txt"), "--max", "5", "--format", "json")
        assert code == ExitCode.SUCCESS

    def test_failure_exit_code(self, capsys, monkeypatch):
        monkeypatch.setattr("growth.cli.sphere_walk", lambda spec, n, cap: ([1] * (n + 1), [1] * (n + 1)))
        code, _, err = _run(capsys, "compare", str(GRAPHS / "golden.json"), "--max", "4")
        assert code == ExitCode.COMPARISON_FAIL
        assert "FAIL" in err


class TestCertify:
    def test_a2tilde_fixture(self, capsys):
        code, out, _ = _run(capsys, "certify", str(A2TILDE))
        assert code == ExitCode.SUCCESS
        assert "NotCertified: period 2" in out
        assert "radius encloses 1.41421356" in out

    def test_group(self, capsys):
        code, out, _ = _run(capsys, "certify", str(GRAPHS / "pentagon.json"), "--format", "json")
        assert code == ExitCode.SUCCESS
        certificates = json.loads(out)["certificates"]
        assert [c["matrix"] for c in certificates] == ["shortlex", "geodesic"]
        assert all(c["verdict"] == "PerronCertified" for c in certificates)
        assert all(c["factor"] == ["1", "2", "3", "4", "5"] for c in certificates)

    @pytest.mark.parametrize("name", ["z-squared.json", "pentagon.json", "golden.json", "p4.txt"])
    def test_agrees_with_analyze(self, capsys, name):
        _, certified, _ = _run(capsys, "certify", str(GRAPHS / name), "--format", "json")
        _, analyzed, _ = _run(capsys, "analyze", str(GRAPHS / name), "--format", "json", "--terms", "4")
        certified, analyzed = json.loads(certified), json.loads(analyzed)
        for rate in ("alpha", "beta"):
            assert certified[rate] == analyzed[rate]
        assert certified["factors"] == analyzed["factors"]

    def test_z_squared_has_no_matrix(self, capsys):
        code, out, _ = _run(capsys, "certify", str(GRAPHS / "z-squared.json"), "--format", "json")
        assert code == ExitCode.SUCCESS
        payload = json.loads(out)
        assert payload["certificates"] == []
        assert payload["alpha"]["verdict"] == "RateOne"
        assert payload["beta"]["verdict"] == "PerronCertified"

    def test_group_text(self, capsys):
        code, out, _ = _run(capsys, "certify", str(GRAPHS / "golden.json"))
        assert code == ExitCode.SUCCESS
        assert "shortlex of factor {a, b, c}: PerronCertified" in out
        assert "group beta" in out

    def test_factors_without_matrices(self, capsys):
        code, out, _ = _run(capsys, "certify", str(GRAPHS / "path.json"))
        assert code == ExitCode.SUCCESS
        assert "factor {a, c}: Dinfinity" in out
        assert "factor {b}: Finite" in out
        assert "shortlex of factor" not in out

    def test_bundled_fixture_by_name(self, capsys, monkeypatch, tmp_path):
        monkeypatch.chdir(tmp_path)
        code, out, _ = _run(capsys, "certify", "a2tilde-digraph.json")
        assert code == ExitCode.SUCCESS
        assert "NotCertified: period 2" in out


class TestOtherCommands:
    def test_count_json(self, capsys):
        code, out, _ = _run(capsys, "count", str(GRAPHS / "z-squared.json"), "--terms", "4", "--format", "json")
        assert code == ExitCode.SUCCESS
        payload = json.loads(out)
        assert payload["a_coeffs"] == ["1", "4", "8", "12", "16"]
        assert payload["b_coeffs"] == ["1", "4", "12", "28", "60"]

    def test_automaton_dot(self, capsys):
        code, out, _ = _run(capsys, "automaton", str(GRAPHS / "d-infinity.json"))
        assert code == ExitCode.SUCCESS
        assert out.startswith("digraph")
        assert out.count("->") == 4

    def test_automaton_json(self, capsys):
        code, out, _ = _run(capsys, "automaton", str(GRAPHS / "golden.json"), "--automaton", "geodesic", "--format", "json")
        assert code == ExitCode.SUCCESS
        assert json.loads(out)["kind"] == "geodesic"

    def test_oracle(self, capsys):
        code, out, _ = _run(capsys, "oracle", str(GRAPHS / "golden.json"), "--terms", "5")
        assert code == ExitCode.SUCCESS
        assert "f(t) = (1 + 2t + t^2) / (1 - t - t^2)" in out

    def test_survey_to_file(self, capsys, tmp_path):
        target = tmp_path / "survey.csv"
        code, _, err = _run(capsys, "survey", "--max-vertices", "3", "--output", str(target))
        assert code == ExitCode.SUCCESS
        assert target.exists()
        assert len(target.read_text(encoding="utf-8").splitlines()) == 1 + 7
        assert "Saved 7 rows" in err


class TestExitCodes:
    def test_missing_file(self, capsys, tmp_path):
        code, _, err = _run(capsys, "analyze", str(tmp_path / "missing.json"))
        assert code == ExitCode.USAGE
        assert "cannot read" in err

    def test_parse_error(self, capsys, tmp_path):
        broken = tmp_path / "broken.json"
        broken.write_text('{"vertices": ["a", "a"], "edges": [], "kind": "racg"}', encoding="utf-8")
        code, _, err = _run(capsys, "analyze", str(broken))
        assert code == ExitCode.PARSE_ERROR
        assert "vertices[1]" in err

    def test_state_cap(self, capsys):
        code, _, _ = _run(capsys, "count", str(GRAPHS / "pentagon.json"), "--state-cap", "3")
        assert code == ExitCode.CAP_EXCEEDED

    def test_frontier_cap(self, capsys):
        code, _, _ = _run(capsys, "oracle", str(GRAPHS / "pentagon.json"), "--terms", "6", "--frontier-cap", "10")
        assert code == ExitCode.CAP_EXCEEDED

    def test_bad_terms(self, capsys):
        code, _, err = _run(capsys, "count", str(GRAPHS / "golden.json"), "--terms", "0")
        assert code == ExitCode.USAGE
        assert "--terms" in err

    def test_bad_tolerance(self, capsys):
        with pytest.raises(SystemExit) as excinfo:
            main(["analyze", str(GRAPHS / "golden.json"), "--tolerance", "abc"])
        assert excinfo.value.code == ExitCode.USAGE

    def test_unsupported_format(self):
        with pytest.raises(UsageError):
            CommandConfig(Command.COUNT, GRAPHS / "golden.json", output_format=OutputFormat.DOT)

    def test_invariant_violation(self, monkeypatch):
        def broken(*args, **kwargs):
            raise InvariantViolation("counts disagree")

        monkeypatch.setattr("growth.cli.whole_group_counts", broken)
        err = io.StringIO()
        code = run(CommandConfig(Command.COUNT, GRAPHS / "golden.json"), io.StringIO(), err)
        assert code == ExitCode.INVARIANT_VIOLATION
        assert "counts disagree" in err.getvalue()
