"""
Human-readable rendering of reports and tables.

Tables are built as pandas DataFrames and printed with `to_string`; big integers
are truncated for display (full values are in the JSON output).
"""

from fractions import Fraction

import pandas as pd

from growth.analysis import GrowthReport
from growth.config import DISPLAY_DIGITS
from growth.spectral import PerronReport, RateEnclosure

ENCLOSURE_DIGITS = 12


def truncate_integer(value: int, digits: int = DISPLAY_DIGITS) -> str:
    """Show at most `digits` leading digits of a big integer, noting the full length."""
    text = str(value)
    if len(text.lstrip("-")) <= digits:
        return text
    return f"{text[:digits]}... ({len(text.lstrip('-'))} digits)"


def format_fraction(value: Fraction, digits: int = ENCLOSURE_DIGITS) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{float(value):.{digits}f}"


def format_enclosure(enclosure: RateEnclosure) -> str:
    """E.g. '1.618033988750 in [1.618033988749, 1.618033988750]'; exact values print plainly."""
    if enclosure.is_exact:
        return format_fraction(enclosure.lower)
    flags = "" if enclosure.converged else " (not converged)"
    if enclosure.periodic:
        flags += " (via cyclic class)"
    return f"{enclosure.value_hint:.{ENCLOSURE_DIGITS}f} in [{format_fraction(enclosure.lower)}, {format_fraction(enclosure.upper)}]{flags}"


def coefficient_table(columns: dict[str, list[int]], start: int = 0) -> pd.DataFrame:
    """One row per length n with a column per integer sequence."""
    length = min(len(values) for values in columns.values())
    frame = pd.DataFrame({"n": range(start, length)})
    for name, values in columns.items():
        frame[name] = [truncate_integer(v) for v in values[start:length]]
    return frame


def render_table(frame: pd.DataFrame) -> str:
    if frame.empty:
        return "(empty)\n"
    return frame.to_string(index=False) + "\n"


def factor_table(report: GrowthReport) -> pd.DataFrame:
    rows = []
    for factor in report.factors:
        rows.append(
            {
                "vertices": ",".join(factor.vertices),
                "class": factor.classification.value,
                "alpha": format_enclosure(factor.alpha),
                "alpha verdict": factor.alpha_verdict.value,
                "beta": format_enclosure(factor.beta),
                "beta verdict": factor.beta_verdict.value,
                "automaton order": " < ".join(factor.order) if factor.order else "-",
            }
        )
    return pd.DataFrame(rows)


def report_text(report: GrowthReport) -> str:
    """Text rendering of a GrowthReport."""
    lines = [
        f"{'=' * 60}",
        f"📊 {report.kind.value.upper()} on {len(report.order_used)} vertices, order {' < '.join(report.order_used)}",
        f"{'=' * 60}",
    ]
    if report.analyzed_order != report.order_used:
        lines.append(f"doubled order: {' < '.join(report.analyzed_order)}")
    lines.append("")
    lines.append("Factors:")
    lines.append(render_table(factor_table(report)))
    lines.append(f"alpha (spherical) = {format_enclosure(report.alpha)}  [{report.alpha_perron.value}]")
    lines.append(f"beta  (geodesic)  = {format_enclosure(report.beta)}  [{report.beta_perron.value}]")
    if report.delta_ratio is not None:
        lines.append(f"delta = beta/alpha = {format_enclosure(report.delta_ratio)}")
    if report.constant is not None:
        c = report.constant
        lines.append(
            f"C ~ {c.eigen_estimate:.10g} (eigenvectors), {c.window_estimate:.10g} (n = {c.window[0]}..{c.window[1]}), "
            f"discrepancy {c.discrepancy:.2e}"
        )
    for note in report.notes:
        lines.append(f"note: {note}")
    lines.append("")
    lines.append(render_table(coefficient_table({"a_n": list(report.a_coeffs), "b_n": list(report.b_coeffs)})))
    return "\n".join(lines)


def certificate_text(name: str, report: PerronReport, labels: tuple[str, ...] | None = None) -> str:
    """Text rendering of a Perron certificate."""
    certificate = report.certificate

    def names(component) -> str:
        return "{" + ", ".join(labels[i] if labels else str(i) for i in component) + "}"

    lines = [f"{name}: {report.summary()}"]
    lines.append(f"  strongly connected: {certificate.strongly_connected} ({len(certificate.components)} components)")
    if certificate.component is not None and not certificate.strongly_connected:
        lines.append(f"  analyzed component: {names(certificate.component)} (size {len(certificate.component)})")
    if certificate.period is not None:
        lines.append(f"  period: {certificate.period}, closed walk lengths {list(certificate.cycle_lengths)}")
    lines.append(f"  radius: {format_enclosure(report.enclosure)}")
    if report.char_poly is not None:
        lines.append(f"  characteristic polynomial: {report.char_poly}")
    lines.append(f"  dominant-root separation: {report.separation}")
    return "\n".join(lines) + "\n"
