"""
Configuration settings for coxeter-growth.

Values come from the environment (a `.env` file in the working directory is
loaded on import) with the defaults below.
"""

import os
from fractions import Fraction
from pathlib import Path

from dotenv import load_dotenv

load_dotenv()

# Base paths
BASE_DIR = Path(__file__).parent.parent  # growth/
DATA_DIR = BASE_DIR.parent / "data"
GRAPHS_DIR = DATA_DIR / "graphs"
FIXTURES_DIR = DATA_DIR / "fixtures"

# Caps
STATE_CAP = int(os.getenv("GROWTH_STATE_CAP", 2**20))  # cliques / automaton states
FRONTIER_CAP = int(os.getenv("GROWTH_FRONTIER_CAP", 500_000))  # oracle sphere size
CHARPOLY_DIM_CAP = int(os.getenv("GROWTH_CHARPOLY_CAP", 512))
POWER_ITERATION_CAP = int(os.getenv("GROWTH_ITERATION_CAP", 10**6))
MAX_VERTICES = 64

# Numerics
DEFAULT_TOLERANCE = Fraction(os.getenv("GROWTH_TOLERANCE", "1/10000000000"))
DEFAULT_TERMS = int(os.getenv("GROWTH_TERMS", 12))
ASYMPTOTIC_WINDOW = tuple(int(n) for n in os.getenv("GROWTH_WINDOW", "30,40").split(","))
TIGHTENING_ROUNDS = 6  # tolerance divided by 1000 per round in theorem_e_check

# Output
DISPLAY_DIGITS = int(os.getenv("GROWTH_DISPLAY_DIGITS", 40))
DECIMAL_DIGITS = int(os.getenv("GROWTH_DECIMAL_DIGITS", 30))
SCHEMA_VERSION = 1
