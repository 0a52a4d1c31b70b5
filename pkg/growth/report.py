"""
Versioned JSON serialization of growth reports and certificates.

Rational bounds are written as decimal strings rounded outward (lower bounds
down, upper bounds up), so a serialized enclosure still contains the true value.
Big integers are written as strings.
"""

import json
from decimal import ROUND_CEILING, ROUND_FLOOR, Decimal, InvalidOperation, localcontext
from fractions import Fraction

from growth.analysis import FactorReport, GrowthReport
from growth.config import DECIMAL_DIGITS, SCHEMA_VERSION, FactorClass, GroupKind, Verdict
from growth.errors import ReportSchemaError
from growth.spectral import PerronReport, RateEnclosure


def decimal_string(value: Fraction, rounding: str, digits: int = DECIMAL_DIGITS) -> str:
    """`value` as a plain decimal string with `digits` significant digits, rounded in the given direction."""
    with localcontext() as ctx:
        ctx.prec = digits
        ctx.rounding = rounding
        result = Decimal(value.numerator) / Decimal(value.denominator)
    return format(result, "f")


def enclosure_to_dict(enclosure: RateEnclosure, verdict: Verdict | None = None) -> dict:
    payload = {
        "lower": decimal_string(enclosure.lower, ROUND_FLOOR),
        "upper": decimal_string(enclosure.upper, ROUND_CEILING),
        "hint": enclosure.value_hint,
    }
    if verdict is not None:
        payload["verdict"] = verdict.value
    return payload


def factor_to_dict(factor: FactorReport) -> dict:
    payload = {
        "vertices": list(factor.vertices),
        "classification": factor.classification.value,
        "alpha": enclosure_to_dict(factor.alpha, factor.alpha_verdict),
        "beta": enclosure_to_dict(factor.beta, factor.beta_verdict),
    }
    if factor.order:
        payload["order"] = list(factor.order)
    return payload


def report_to_dict(report: GrowthReport) -> dict:
    """GrowthReport as a JSON-ready dict (schema version 1)."""
    payload = {
        "schema_version": SCHEMA_VERSION,
        "kind": report.kind.value,
        "order_used": list(report.order_used),
        "analyzed_order": list(report.analyzed_order),
        "tolerance": str(report.tolerance),
        "factors": [factor_to_dict(f) for f in report.factors],
        "alpha": enclosure_to_dict(report.alpha, report.alpha_perron),
        "beta": enclosure_to_dict(report.beta, report.beta_perron),
    }
    if report.delta_ratio is not None:
        payload["delta"] = {
            "lower": decimal_string(report.delta_ratio.lower, ROUND_FLOOR),
            "upper": decimal_string(report.delta_ratio.upper, ROUND_CEILING),
        }
    if report.constant is not None:
        payload["C"] = {
            "eigen_estimate": report.constant.eigen_estimate,
            "window_estimate": report.constant.window_estimate,
            "window": list(report.constant.window),
            "discrepancy": report.constant.discrepancy,
        }
    payload["a_coeffs"] = [str(c) for c in report.a_coeffs]
    payload["b_coeffs"] = [str(c) for c in report.b_coeffs]
    payload["notes"] = list(report.notes)
    return payload


def perron_to_dict(name: str, report: PerronReport, labels: tuple[str, ...] | None = None) -> dict:
    """Perron certificate as a JSON-ready dict."""
    certificate = report.certificate

    def name_of(i: int) -> str | int:
        return labels[i] if labels is not None else i

    return {
        "matrix": name,
        "verdict": report.verdict.value,
        "reasons": list(report.reasons),
        "radius": enclosure_to_dict(report.enclosure),
        "periodic_enclosure": report.enclosure.periodic,
        "strongly_connected": certificate.strongly_connected,
        "components": [[name_of(i) for i in c] for c in certificate.components],
        "component": [name_of(i) for i in certificate.component] if certificate.component is not None else None,
        "period": certificate.period,
        "cycle_lengths": list(certificate.cycle_lengths),
        "char_poly": list(report.char_poly.coefficients) if report.char_poly is not None else None,
        "separation": report.separation,
    }


def dump_json(payload: dict) -> str:
    return json.dumps(payload, indent=2, ensure_ascii=False) + "\n"


def dump_report(report: GrowthReport) -> str:
    return dump_json(report_to_dict(report))


def _require(condition: bool, message: str):
    if not condition:
        raise ReportSchemaError(message)


def _check_decimal(value, where: str) -> Decimal:
    _require(isinstance(value, str), f"{where} must be a decimal string")
    try:
        result = Decimal(value)
    except InvalidOperation:
        raise ReportSchemaError(f"{where} is not a decimal: {value!r}") from None
    _require(result.is_finite(), f"{where} must be finite")
    return result


def _check_enclosure(payload, where: str, with_verdict: bool = True):
    _require(isinstance(payload, dict), f"{where} must be an object")
    lower = _check_decimal(payload.get("lower"), f"{where}.lower")
    upper = _check_decimal(payload.get("upper"), f"{where}.upper")
    _require(lower <= upper, f"{where}: lower exceeds upper")
    if "hint" in payload:
        _require(isinstance(payload["hint"], int | float), f"{where}.hint must be a number")
    if with_verdict:
        _require(payload.get("verdict") in {v.value for v in Verdict}, f"{where}.verdict is not a known verdict")


def _check_coefficients(values, where: str):
    _require(isinstance(values, list), f"{where} must be a list")
    for k, value in enumerate(values):
        _require(isinstance(value, str) and value.lstrip("-").isdigit(), f"{where}[{k}] must be an integer string")


def validate_report(payload: dict) -> None:
    """
    Check a decoded report against schema version 1.

    Raises:
        ReportSchemaError: On the first violation found.
    """
    _require(isinstance(payload, dict), "report must be an object")
    _require(payload.get("schema_version") == SCHEMA_VERSION, f"schema_version must be {SCHEMA_VERSION}")
    _require(payload.get("kind") in {k.value for k in GroupKind}, "kind must be 'racg' or 'raag'")
    for key in ("order_used", "analyzed_order"):
        _require(isinstance(payload.get(key), list) and all(isinstance(v, str) for v in payload[key]), f"{key} must be a list of strings")
    try:
        Fraction(payload.get("tolerance"))
    except (TypeError, ValueError, ZeroDivisionError):
        raise ReportSchemaError("tolerance must be a rational string") from None

    _require(isinstance(payload.get("factors"), list) and payload["factors"], "factors must be a nonempty list")
    for k, factor in enumerate(payload["factors"]):
        where = f"factors[{k}]"
        _require(isinstance(factor, dict), f"{where} must be an object")
        _require(isinstance(factor.get("vertices"), list) and factor["vertices"], f"{where}.vertices must be a nonempty list")
        _require(factor.get("classification") in {c.value for c in FactorClass}, f"{where}.classification is not a known class")
        _check_enclosure(factor.get("alpha"), f"{where}.alpha")
        _check_enclosure(factor.get("beta"), f"{where}.beta")
        if "order" in factor:
            order = factor["order"]
            _require(isinstance(order, list) and all(isinstance(v, str) for v in order), f"{where}.order must be a list of strings")

    _check_enclosure(payload.get("alpha"), "alpha")
    _check_enclosure(payload.get("beta"), "beta")
    if "delta" in payload:
        _check_enclosure(payload["delta"], "delta", with_verdict=False)
    if "C" in payload:
        constant = payload["C"]
        _require(isinstance(constant, dict), "C must be an object")
        for key in ("eigen_estimate", "window_estimate", "discrepancy"):
            _require(isinstance(constant.get(key), int | float), f"C.{key} must be a number")
        window = constant.get("window")
        _require(isinstance(window, list) and len(window) == 2 and all(isinstance(n, int) for n in window), "C.window must be [start, end]")

    _check_coefficients(payload.get("a_coeffs"), "a_coeffs")
    _check_coefficients(payload.get("b_coeffs"), "b_coeffs")
    _require(len(payload["a_coeffs"]) == len(payload["b_coeffs"]), "a_coeffs and b_coeffs must have equal length")
    _require(isinstance(payload.get("notes", []), list), "notes must be a list")


def load_report(text: str) -> dict:
    """Decode and validate a serialized report."""
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as e:
        raise ReportSchemaError(f"invalid JSON: {e.msg}") from None
    validate_report(payload)
    return payload
