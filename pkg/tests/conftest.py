"""
Shared fixtures: the small groups used throughout the tests and helpers for
checking enclosures against exact polynomials.
"""

from fractions import Fraction
from pathlib import Path

import pytest

from growth.config import FIXTURES_DIR, GRAPHS_DIR, GroupKind
from growth.graphcore import DefiningGraph, GroupSpec, parse_graph
from growth.spectral import RateEnclosure, TransferMatrix


def make_spec(vertices, edges, kind: GroupKind = GroupKind.RACG) -> GroupSpec:
    return GroupSpec(DefiningGraph.from_edges(list(vertices), list(edges)), kind)


def polynomial_value(coefficients, x: Fraction) -> Fraction:
    """Horner evaluation, coefficients from the leading one down."""
    value = Fraction(0)
    for c in coefficients:
        value = value * x + c
    return value


def brackets_root(enclosure: RateEnclosure, coefficients) -> bool:
    """True iff the polynomial changes sign (or vanishes) between the enclosure's bounds."""
    low = polynomial_value(coefficients, enclosure.lower)
    high = polynomial_value(coefficients, enclosure.upper)
    return low == 0 or high == 0 or (low < 0) != (high < 0)


@pytest.fixture
def golden() -> GroupSpec:
    """Z2 * (Z2 x Z2): vertices a < b < c, one edge b-c."""
    return make_spec("abc", [("b", "c")])


@pytest.fixture
def pentagon() -> GroupSpec:
    return make_spec("12345", [("1", "2"), ("2", "3"), ("3", "4"), ("4", "5"), ("5", "1")])


@pytest.fixture
def triangle_pair() -> GroupSpec:
    """Triangles 1-2-3 and 4-5-6 joined by the edge 1-4; the shortlex automaton in input order is reducible."""
    return make_spec("123456", [("1", "2"), ("1", "3"), ("1", "4"), ("2", "3"), ("4", "5"), ("4", "6"), ("5", "6")])


@pytest.fixture
def path3() -> GroupSpec:
    return make_spec("abc", [("a", "b"), ("b", "c")])


@pytest.fixture
def edgeless3() -> GroupSpec:
    return make_spec("abc", [])


@pytest.fixture
def d_infinity() -> GroupSpec:
    return make_spec("ab", [])


@pytest.fixture
def z_squared() -> GroupSpec:
    return make_spec("xy", [("x", "y")], GroupKind.RAAG)


@pytest.fixture
def a2tilde() -> TransferMatrix:
    path = FIXTURES_DIR / "a2tilde-digraph.json"
    return TransferMatrix.from_digraph_json(path.read_text(encoding="utf-8"), str(path))


@pytest.fixture
def graph_file():
    """Path of a bundled graph file."""

    def _path(name: str) -> Path:
        return GRAPHS_DIR / name

    return _path


@pytest.fixture
def load_graph(graph_file):
    def _load(name: str) -> GroupSpec:
        path = graph_file(name)
        return parse_graph(path.read_text(encoding="utf-8"), str(path))

    return _load
