"""
Exception hierarchy for coxeter-growth.

Every error carries the CLI exit code it maps to; library code raises, only the
CLI catches.
"""

from growth.config import ExitCode


class GrowthError(Exception):
    """Base class for all library errors."""

    exit_code = ExitCode.INVARIANT_VIOLATION


class GraphParseError(GrowthError, ValueError):
    """Malformed graph or fixture input, reported with its location."""

    exit_code = ExitCode.PARSE_ERROR

    def __init__(self, message: str, location: str | None = None):
        self.location = location
        super().__init__(f"{location}: {message}" if location else message)


class UnknownVertex(GrowthError, KeyError):
    exit_code = ExitCode.PARSE_ERROR

    def __init__(self, vertex: str):
        self.vertex = vertex
        super().__init__(f"unknown vertex {vertex!r}")

    def __str__(self) -> str:
        return self.args[0]


class GroupKindError(GrowthError, ValueError):
    """Operation is defined for one group kind only."""

    exit_code = ExitCode.USAGE


class CapExceeded(GrowthError):
    exit_code = ExitCode.CAP_EXCEEDED


class CliqueExplosion(CapExceeded):
    def __init__(self, cap: int, lower_bound: int):
        self.cap = cap
        self.lower_bound = lower_bound
        super().__init__(f"clique count exceeds cap {cap} (at least {lower_bound} cliques); raise GROWTH_STATE_CAP")


class FrontierCap(CapExceeded):
    def __init__(self, cap: int, size: int, length: int):
        self.cap = cap
        self.size = size
        self.length = length
        super().__init__(f"oracle sphere of radius {length} has {size} elements, cap is {cap}; raise GROWTH_FRONTIER_CAP")


class DimensionCap(CapExceeded):
    def __init__(self, cap: int, dimension: int):
        self.cap = cap
        self.dimension = dimension
        super().__init__(f"matrix dimension {dimension} exceeds characteristic polynomial cap {cap}")


class NoCycle(GrowthError, ValueError):
    """Component is a single vertex without a self-loop."""


class NotPrimitive(GrowthError, ValueError):
    pass


class NoConvergence(GrowthError):
    """Tolerance not reached within the iteration cap; the best enclosure is attached."""

    def __init__(self, message: str, enclosure=None):
        self.enclosure = enclosure
        super().__init__(message)


class HypothesisNotMet(GrowthError, ValueError):
    pass


class InvariantViolation(GrowthError):
    exit_code = ExitCode.INVARIANT_VIOLATION


class UsageError(GrowthError, ValueError):
    """Invalid command-line options."""

    exit_code = ExitCode.USAGE


class ReportSchemaError(GrowthError, ValueError):
    """A serialized report does not match the report schema."""
