"""Tests for growth.report and growth.formatting."""

import json
from decimal import ROUND_CEILING, ROUND_FLOOR, Decimal
from fractions import Fraction

import pytest

from growth.analysis import analyze
from growth.errors import ReportSchemaError
from growth.formatting import coefficient_table, format_enclosure, report_text, truncate_integer
from growth.report import decimal_string, dump_report, load_report, report_to_dict, validate_report
from growth.spectral import RateEnclosure


@pytest.fixture
def golden_payload(golden):
    return report_to_dict(analyze(golden, terms=8))


class TestDecimalString:
    def test_rounds_outward(self):
        third = Fraction(1, 3)
        assert decimal_string(third, ROUND_FLOOR, 5) == "0.33333"
        assert decimal_string(third, ROUND_CEILING, 5) == "0.33334"

    def test_bounds_still_enclose(self, golden_payload, golden):
        report = analyze(golden, terms=8)
        lower = Decimal(golden_payload["alpha"]["lower"])
        upper = Decimal(golden_payload["alpha"]["upper"])
        assert Fraction(lower) <= report.alpha.lower
        assert Fraction(upper) >= report.alpha.upper


class TestReportDict:
    def test_keys(self, golden_payload):
        assert list(golden_payload) == [
            "schema_version",
            "kind",
            "order_used",
            "analyzed_order",
            "tolerance",
            "factors",
            "alpha",
            "beta",
            "delta",
            "C",
            "a_coeffs",
            "b_coeffs",
            "notes",
        ]
        assert golden_payload["a_coeffs"][:4] == ["1", "3", "5", "8"]
        assert golden_payload["alpha"]["verdict"] == "PerronCertified"

    def test_disconnected_complement_omits_delta(self, path3):
        payload = report_to_dict(analyze(path3, terms=4))
        assert "delta" not in payload and "C" not in payload
        validate_report(payload)

    def test_general_factor_order(self, pentagon, path3):
        payload = report_to_dict(analyze(pentagon, terms=4))
        assert payload["factors"][0]["order"] == ["1", "3", "4", "5", "2"]
        assert all("order" not in factor for factor in report_to_dict(analyze(path3, terms=4))["factors"])

    def test_round_trip(self, golden):
        text = dump_report(analyze(golden, terms=8))
        payload = load_report(text)
        assert json.dumps(payload, indent=2, ensure_ascii=False) + "\n" == text

    def test_deterministic(self, pentagon):
        assert dump_report(analyze(pentagon, terms=6)) == dump_report(analyze(pentagon, terms=6))


class TestValidateReport:
    def test_accepts_report(self, golden_payload):
        validate_report(golden_payload)

    @pytest.mark.parametrize(
        "mutate",
        [
            lambda p: p.update(schema_version=2),
            lambda p: p.update(kind="coxeter"),
            lambda p: p.update(tolerance="tiny"),
            lambda p: p.update(factors=[]),
            lambda p: p["alpha"].update(lower="2", upper="1"),
            lambda p: p["beta"].update(verdict="Maybe"),
            lambda p: p["factors"][0].update(classification="Huge"),
            lambda p: p["factors"][0].update(order="abc"),
            lambda p: p["C"].update(window=[30]),
            lambda p: p.update(a_coeffs=["1", "x"]),
            lambda p: p.update(b_coeffs=["1"]),
        ],
    )
    def test_rejects(self, golden_payload, mutate):
        mutate(golden_payload)
        with pytest.raises(ReportSchemaError):
            validate_report(golden_payload)

    def test_invalid_json(self):
        with pytest.raises(ReportSchemaError, match="invalid JSON"):
            load_report("{")


class TestFormatting:
    def test_truncate_integer(self):
        assert truncate_integer(12345, digits=10) == "12345"
        assert truncate_integer(10**50, digits=5) == "10000... (51 digits)"

    def test_exact_enclosure(self):
        assert format_enclosure(RateEnclosure.exact(2)) == "2"

    def test_periodic_flag(self):
        text = format_enclosure(RateEnclosure.from_bounds(Fraction(1), Fraction(2), periodic=True))
        assert text.endswith("(via cyclic class)")

    def test_coefficient_table(self):
        frame = coefficient_table({"a_n": [1, 3, 5], "b_n": [1, 3, 6, 10]})
        assert list(frame["n"]) == [0, 1, 2]
        assert list(frame["b_n"]) == ["1", "3", "6"]

    def test_report_text(self, pentagon):
        text = report_text(analyze(pentagon, terms=6))
        assert "2.618033988" in text
        assert "PerronCertified" in text
        assert "General" in text
