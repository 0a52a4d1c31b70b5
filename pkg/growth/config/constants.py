"""
Enumerations and the CLI command registry.
"""

from dataclasses import dataclass, field
from enum import Enum


class GroupKind(str, Enum):
    RACG = "racg"
    RAAG = "raag"


class AutomatonKind(str, Enum):
    GEODESIC = "geodesic"
    SHORTLEX = "shortlex"


class FactorClass(str, Enum):
    """Direct-product factor types, one per complement component (isolated vertices grouped)."""

    FINITE = "Finite"
    Z2 = "Z2"
    DINFINITY = "Dinfinity"
    ZFACTOR = "Zfactor"
    GENERAL = "General"


class Verdict(str, Enum):
    PERRON_CERTIFIED = "PerronCertified"
    RATE_ONE = "RateOne"
    RATE_ZERO = "RateZero"
    NOT_CERTIFIED = "NotCertified"


class OutputFormat(str, Enum):
    TEXT = "text"
    JSON = "json"
    DOT = "dot"


class Command(str, Enum):
    ANALYZE = "analyze"
    COUNT = "count"
    AUTOMATON = "automaton"
    ORACLE = "oracle"
    COMPARE = "compare"
    CERTIFY = "certify"
    SURVEY = "survey"


class ExitCode(int, Enum):
    SUCCESS = 0
    USAGE = 1
    PARSE_ERROR = 2
    CAP_EXCEEDED = 3
    COMPARISON_FAIL = 4
    INVARIANT_VIOLATION = 5


@dataclass
class CommandSpec:
    """Help text and accepted output formats of one CLI command."""

    help: str
    formats: list[OutputFormat] = field(default_factory=lambda: [OutputFormat.TEXT, OutputFormat.JSON])

    def accepts(self, output_format: OutputFormat) -> bool:
        return output_format in self.formats


COMMANDS = {
    Command.ANALYZE: CommandSpec(help="Full growth report: factors, rates, certificates, coefficients."),
    Command.COUNT: CommandSpec(help="Exact a_n / b_n tables from the automata."),
    Command.AUTOMATON: CommandSpec(
        help="Export the shortlex or geodesic automaton.",
        formats=[OutputFormat.DOT, OutputFormat.JSON, OutputFormat.TEXT],
    ),
    Command.ORACLE: CommandSpec(help="Brute-force Cayley graph and Steinberg series tables."),
    Command.COMPARE: CommandSpec(help="Automaton counts against oracle counts, PASS/FAIL per length."),
    Command.CERTIFY: CommandSpec(help="Perron certificates per direct-product factor of a group, or for a raw digraph fixture."),
    Command.SURVEY: CommandSpec(help="Sweep all small defining graphs and tabulate rates and certificates."),
}
