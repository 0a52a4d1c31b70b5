"""
Configuration module for coxeter-growth.
"""

from .constants import COMMANDS, AutomatonKind, Command, CommandSpec, ExitCode, FactorClass, GroupKind, OutputFormat, Verdict
from .settings import (
    ASYMPTOTIC_WINDOW,
    CHARPOLY_DIM_CAP,
    DATA_DIR,
    DECIMAL_DIGITS,
    DEFAULT_TERMS,
    DEFAULT_TOLERANCE,
    DISPLAY_DIGITS,
    FIXTURES_DIR,
    FRONTIER_CAP,
    GRAPHS_DIR,
    MAX_VERTICES,
    POWER_ITERATION_CAP,
    SCHEMA_VERSION,
    STATE_CAP,
    TIGHTENING_ROUNDS,
)

__all__ = [
    # Settings
    "ASYMPTOTIC_WINDOW",
    "CHARPOLY_DIM_CAP",
    "DATA_DIR",
    "DECIMAL_DIGITS",
    "DEFAULT_TERMS",
    "DEFAULT_TOLERANCE",
    "DISPLAY_DIGITS",
    "FIXTURES_DIR",
    "FRONTIER_CAP",
    "GRAPHS_DIR",
    "MAX_VERTICES",
    "POWER_ITERATION_CAP",
    "SCHEMA_VERSION",
    "STATE_CAP",
    "TIGHTENING_ROUNDS",
    # Constants
    "COMMANDS",
    "AutomatonKind",
    "Command",
    "CommandSpec",
    "ExitCode",
    "FactorClass",
    "GroupKind",
    "OutputFormat",
    "Verdict",
]
