"""
Command-line front end.

Usage:
    python main.py analyze data/graphs/pentagon.json --terms 12
    python main.py compare data/graphs/golden.json --max 8
    python main.py certify data/fixtures/a2tilde-digraph.json
    python main.py automaton data/graphs/golden.json --automaton shortlex --format dot

Tables, JSON and DOT go to stdout; progress and errors go to stderr.
"""

import argparse
import json
import logging
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import TextIO

import pandas as pd

from growth.analysis import analyze, combine_factors, decompose, theorem_e_check, theorem_e_hypothesis, whole_group_counts
from growth.automata import automaton_to_dict, build, export_dot
from growth.config import (
    COMMANDS,
    DEFAULT_TERMS,
    DEFAULT_TOLERANCE,
    FIXTURES_DIR,
    FRONTIER_CAP,
    GRAPHS_DIR,
    STATE_CAP,
    AutomatonKind,
    Command,
    ExitCode,
    GroupKind,
    OutputFormat,
)
from growth.errors import GrowthError, UsageError
from growth.formatting import certificate_text, coefficient_table, format_enclosure, render_table, report_text
from growth.graphcore import GroupSpec, parse_graph
from growth.oracles import format_polynomial, sphere_walk, steinberg_rational_function, steinberg_series
from growth.report import dump_json, dump_report, enclosure_to_dict, factor_to_dict, perron_to_dict
from growth.spectral import TransferMatrix, perron_certificate
from growth.survey import survey, write_survey

logger = logging.getLogger(__name__)


@dataclass
class CommandConfig:
    """Options of one CLI invocation."""

    command: Command
    input_path: Path | None = None
    kind: GroupKind | None = None
    terms: int = DEFAULT_TERMS
    tolerance: Fraction = DEFAULT_TOLERANCE
    output_format: OutputFormat = OutputFormat.TEXT
    automaton: AutomatonKind = AutomatonKind.SHORTLEX
    max_length: int | None = None
    certify: bool = True
    cross_check: int = 0
    max_vertices: int = 5
    labeled: bool = False
    output_path: Path | None = None
    state_cap: int = STATE_CAP
    frontier_cap: int = FRONTIER_CAP
    quiet: bool = False

    def __post_init__(self):
        if self.terms < 1:
            raise UsageError(f"--terms must be at least 1, got {self.terms}")
        if self.tolerance <= 0:
            raise UsageError(f"--tolerance must be positive, got {self.tolerance}")
        if self.max_length is not None and self.max_length < 1:
            raise UsageError(f"--max must be at least 1, got {self.max_length}")
        if not COMMANDS[self.command].accepts(self.output_format):
            raise UsageError(f"{self.command.value} does not support --format {self.output_format.value}")
        if self.command != Command.SURVEY and self.input_path is None:
            raise UsageError(f"{self.command.value} needs an input file")


def _progress(config: CommandConfig, message: str, stream: TextIO):
    if not config.quiet:
        print(message, file=stream)


def resolve_input(path: Path) -> Path:
    """A missing relative path is looked up in the bundled graph and fixture directories."""
    path = Path(path)
    if path.exists() or path.is_absolute():
        return path
    for directory in (GRAPHS_DIR, FIXTURES_DIR):
        if (directory / path).is_file():
            logger.debug("resolved %s to %s", path, directory / path)
            return directory / path
    return path


def _read(path: Path) -> str:
    try:
        return resolve_input(path).read_text(encoding="utf-8")
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from None


def load_group(config: CommandConfig) -> GroupSpec:
    return parse_graph(_read(config.input_path), str(config.input_path), config.kind)


def _is_digraph_fixture(text: str) -> bool:
    if not text.lstrip().startswith("{"):
        return False
    try:
        payload = json.loads(text)
    except json.JSONDecodeError:
        return False
    return isinstance(payload, dict) and "nodes" in payload


def run_analyze(config: CommandConfig, out: TextIO, err: TextIO) -> int:
    spec = load_group(config)
    _progress(config, f"🚀 Analyzing {spec.kind.value.upper()} on {spec.graph.size} vertices...", err)
    report = analyze(
        spec,
        terms=config.terms,
        tolerance=config.tolerance,
        certify=config.certify,
        cross_check=config.cross_check,
        state_cap=config.state_cap,
        frontier_cap=config.frontier_cap,
    )
    if config.output_format == OutputFormat.JSON:
        out.write(dump_report(report))
    else:
        out.write(report_text(report))
        holds, reason = theorem_e_hypothesis(spec)
        if holds:
            check = theorem_e_check(spec, report, state_cap=config.state_cap)
            verdict = "certified" if check.inequality_certified else "not certified"
            out.write(f"beta > alpha: {verdict} (tolerance {check.tolerance})\n")
            if check.skipped_reason:
                out.write(f"asymptotic check skipped: {check.skipped_reason}\n")
            else:
                out.write(f"r_n over n = {check.window[0]}..{check.window[1]}: max relative change {check.max_relative_change:.2e}\n")
        else:
            out.write(f"beta > alpha not claimed: {reason}\n")
    _progress(config, "✅ Analysis complete", err)
    return ExitCode.SUCCESS


def run_count(config: CommandConfig, out: TextIO, err: TextIO) -> int:
    spec = load_group(config)
    a, b = whole_group_counts(spec, config.terms, config.state_cap)
    if config.output_format == OutputFormat.JSON:
        payload = {
            "kind": spec.kind.value,
            "order_used": list(spec.graph.vertices),
            "a_coeffs": [str(c) for c in a],
            "b_coeffs": [str(c) for c in b],
        }
        out.write(dump_json(payload))
    else:
        out.write(render_table(coefficient_table({"a_n": a, "b_n": b})))
    return ExitCode.SUCCESS


def run_automaton(config: CommandConfig, out: TextIO, err: TextIO) -> int:
    spec = load_group(config)
    if spec.kind == GroupKind.RAAG:
        _progress(config, "🔧 RAAG input: exporting the automaton of the doubled graph", err)
    automaton = build(spec.doubled(), config.automaton, config.state_cap)
    if config.output_format == OutputFormat.DOT:
        out.write(export_dot(automaton))
    elif config.output_format == OutputFormat.JSON:
        out.write(dump_json(automaton_to_dict(automaton)))
    else:
        for s, v, t in automaton.transitions():
            source, target = automaton.states[s].label(automaton.graph), automaton.states[t].label(automaton.graph)
            out.write(f"{source} --{automaton.generators[v]}--> {target}\n")
    return ExitCode.SUCCESS


def run_oracle(config: CommandConfig, out: TextIO, err: TextIO) -> int:
    spec = load_group(config)
    _progress(config, f"🔍 Enumerating spheres up to length {config.terms}...", err)
    a, b = sphere_walk(spec, config.terms, config.frontier_cap)
    numerator, denominator = steinberg_rational_function(spec.doubled(), config.state_cap)
    series = steinberg_series(spec.doubled(), config.terms, config.state_cap)
    if config.output_format == OutputFormat.JSON:
        payload = {
            "kind": spec.kind.value,
            "cayley_counts": [str(c) for c in a],
            "geodesic_counts": [str(c) for c in b],
            "steinberg_series": [str(c) for c in series],
            "steinberg_numerator": numerator,
            "steinberg_denominator": denominator,
        }
        out.write(dump_json(payload))
    else:
        out.write(f"f(t) = ({format_polynomial(numerator)}) / ({format_polynomial(denominator)})\n")
        out.write(render_table(coefficient_table({"cayley": a, "geodesic": b, "steinberg": series})))
    return ExitCode.SUCCESS


def run_compare(config: CommandConfig, out: TextIO, err: TextIO) -> int:
    spec = load_group(config)
    n_max = config.max_length or config.terms
    _progress(config, f"🔍 Comparing automata with oracles up to length {n_max}...", err)
    a, b = whole_group_counts(spec, n_max, config.state_cap)
    oracle_a, oracle_b = sphere_walk(spec, n_max, config.frontier_cap)
    series = steinberg_series(spec.doubled(), n_max, config.state_cap)

    rows = []
    for n in range(n_max + 1):
        passed = a[n] == oracle_a[n] == series[n] and b[n] == oracle_b[n]
        rows.append(
            {
                "n": n,
                "shortlex": a[n],
                "cayley": oracle_a[n],
                "steinberg": series[n],
                "geodesic": b[n],
                "geodesic oracle": oracle_b[n],
                "verdict": "PASS" if passed else "FAIL",
            }
        )
    failed = [row["n"] for row in rows if row["verdict"] == "FAIL"]

    if config.output_format == OutputFormat.JSON:
        serialized = [{key: value if key in ("n", "verdict") else str(value) for key, value in row.items()} for row in rows]
        out.write(dump_json({"rows": serialized, "failed": failed}))
    else:
        out.write(render_table(pd.DataFrame(rows)))
    if failed:
        print(f"❌ Comparison FAIL at lengths {failed}", file=err)
        return ExitCode.COMPARISON_FAIL
    _progress(config, f"✅ PASS on all lengths 0..{n_max}", err)
    return ExitCode.SUCCESS


def run_certify(config: CommandConfig, out: TextIO, err: TextIO) -> int:
    text = _read(config.input_path)
    if _is_digraph_fixture(text):
        matrix = TransferMatrix.from_digraph_json(text, str(config.input_path))
        report = perron_certificate(matrix, config.tolerance)
        if config.output_format == OutputFormat.JSON:
            out.write(dump_json({"certificates": [perron_to_dict("digraph", report, matrix.labels)]}))
        else:
            out.write(certificate_text("digraph", report, matrix.labels))
        return ExitCode.SUCCESS

    spec = parse_graph(text, str(config.input_path), config.kind)
    factors = decompose(spec, config.tolerance, certify=True, state_cap=config.state_cap)
    alpha, beta, alpha_perron, beta_perron = combine_factors(factors)
    # (factor, matrix name, matrix, certificate) for every general factor
    certified = [
        (factor, name, matrix, certificate)
        for factor in factors
        if factor.matrices is not None
        for name, matrix, certificate in zip(("shortlex", "geodesic"), factor.matrices, (factor.alpha_certificate, factor.beta_certificate))
    ]

    if config.output_format == OutputFormat.JSON:
        certificates = [
            {**perron_to_dict(name, certificate, matrix.labels), "factor": list(factor.vertices), "order": list(factor.order)}
            for factor, name, matrix, certificate in certified
        ]
        payload = {
            "certificates": certificates,
            "factors": [factor_to_dict(f) for f in factors],
            "alpha": enclosure_to_dict(alpha, alpha_perron),
            "beta": enclosure_to_dict(beta, beta_perron),
        }
        out.write(dump_json(payload))
        return ExitCode.SUCCESS

    for factor in factors:
        if factor.matrices is None:
            rates = f"alpha = {format_enclosure(factor.alpha)}, beta = {format_enclosure(factor.beta)}"
            out.write(f"factor {{{', '.join(factor.vertices)}}}: {factor.classification.value}, {rates}\n")
    for factor, name, matrix, certificate in certified:
        out.write(certificate_text(f"{name} of factor {{{', '.join(factor.vertices)}}}", certificate, matrix.labels))
    out.write(f"group alpha = {format_enclosure(alpha)}  [{alpha_perron.value}]\n")
    out.write(f"group beta  = {format_enclosure(beta)}  [{beta_perron.value}]\n")
    return ExitCode.SUCCESS


def run_survey(config: CommandConfig, out: TextIO, err: TextIO) -> int:
    kind = config.kind or GroupKind.RACG
    _progress(config, f"🚀 Surveying {kind.value.upper()}s on up to {config.max_vertices} vertices...", err)
    frame = survey(kind, config.max_vertices, config.tolerance, labeled=config.labeled, progress=not config.quiet)
    if config.output_path is not None:
        path = write_survey(frame, config.output_path)
        _progress(config, f"💾 Saved {len(frame)} rows to {path}", err)
    elif config.output_format == OutputFormat.JSON:
        out.write(frame.to_json(orient="records", indent=2) + "\n")
    else:
        out.write(render_table(frame))
    return ExitCode.SUCCESS


HANDLERS = {
    Command.ANALYZE: run_analyze,
    Command.COUNT: run_count,
    Command.AUTOMATON: run_automaton,
    Command.ORACLE: run_oracle,
    Command.COMPARE: run_compare,
    Command.CERTIFY: run_certify,
    Command.SURVEY: run_survey,
}


def run(config: CommandConfig, out: TextIO | None = None, err: TextIO | None = None) -> int:
    """
    Execute one command.

    Returns:
        Exit status: 0 success, 1 usage, 2 parse error, 3 cap exceeded,
        4 comparison FAIL, 5 internal invariant violation.
    """
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        return int(HANDLERS[config.command](config, out, err))
    except GrowthError as e:
        print(f"❌ {e}", file=err)
        return int(e.exit_code)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(ExitCode.USAGE, f"❌ {message}\n")


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="coxeter-growth", description="Growth rates and automata of right-angled Coxeter and Artin groups.")
    parser.add_argument("-v", "--verbose", action="store_true", help="Debug logging on stderr.")
    parser.add_argument("-q", "--quiet", action="store_true", help="Suppress progress lines.")
    subparsers = parser.add_subparsers(dest="command", required=True)

    for command, spec in COMMANDS.items():
        sub = subparsers.add_parser(command.value, help=spec.help, description=spec.help)
        if command != Command.SURVEY:
            sub.add_argument("input", type=Path, help="Graph file (JSON or edge list); certify also takes a raw digraph fixture.")
        sub.add_argument("--kind", choices=[k.value for k in GroupKind], help="Override the group kind given in the input.")
        sub.add_argument("--terms", type=int, default=DEFAULT_TERMS, help=f"Coefficients up to this length (default {DEFAULT_TERMS}).")
        sub.add_argument("--tolerance", type=_fraction, default=DEFAULT_TOLERANCE, help="Enclosure width, e.g. 1/10000000000 or 1e-9.")
        default_format = OutputFormat.DOT if command == Command.AUTOMATON else OutputFormat.TEXT
        sub.add_argument("--format", choices=[f.value for f in spec.formats], default=default_format.value, help="Output format.")
        sub.add_argument("--state-cap", type=int, default=STATE_CAP, help="Clique / automaton state cap.")
        sub.add_argument("--frontier-cap", type=int, default=FRONTIER_CAP, help="Oracle sphere cap.")
        if command == Command.AUTOMATON:
            sub.add_argument(
                "--automaton", choices=[k.value for k in AutomatonKind], default=AutomatonKind.SHORTLEX.value, help="Which automaton."
            )
        if command == Command.ANALYZE:
            sub.add_argument("--no-certify", action="store_true", help="Skip the dominant-root separation check.")
            sub.add_argument("--cross-check", type=int, default=0, help="Compare the first N coefficients with the oracles.")
        if command == Command.COMPARE:
            sub.add_argument("--max", type=int, dest="max_length", help="Largest length compared (default: --terms).")
        if command == Command.SURVEY:
            sub.add_argument("--max-vertices", type=int, default=5, help="Largest vertex count (at most 7 without --labeled).")
            sub.add_argument("--labeled", action="store_true", help="All labeled graphs instead of isomorphism classes.")
            sub.add_argument("--output", type=Path, help="Write CSV or parquet instead of printing.")
    return parser


def config_from_args(args: argparse.Namespace) -> CommandConfig:
    return CommandConfig(
        command=Command(args.command),
        input_path=getattr(args, "input", None),
        kind=GroupKind(args.kind) if args.kind else None,
        terms=args.terms,
        tolerance=args.tolerance,
        output_format=OutputFormat(args.format),
        automaton=AutomatonKind(getattr(args, "automaton", AutomatonKind.SHORTLEX.value)),
        max_length=getattr(args, "max_length", None),
        certify=not getattr(args, "no_certify", False),
        cross_check=getattr(args, "cross_check", 0),
        max_vertices=getattr(args, "max_vertices", 5),
        labeled=getattr(args, "labeled", False),
        output_path=getattr(args, "output", None),
        state_cap=args.state_cap,
        frontier_cap=args.frontier_cap,
        quiet=args.quiet,
    )


def main(argv: list[str] | None = None) -> int:
    """Main execution function."""
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
        force=True,
    )
    try:
        config = config_from_args(args)
    except GrowthError as e:
        print(f"❌ {e}", file=sys.stderr)
        return int(e.exit_code)
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
