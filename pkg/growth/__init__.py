"""
coxeter-growth: word acceptors, Perron certificates and growth rates of
right-angled Coxeter and Artin groups.
"""

from .analysis import GrowthReport, analyze, theorem_e_check
from .automata import build_geodesic, build_shortlex, count_words, export_dot, prune
from .graphcore import DefiningGraph, GroupSpec, double, parse_graph
from .oracles import cayley_counts, geodesic_counts, steinberg_series
from .spectral import TransferMatrix, certify_primitive, char_poly, perron_certificate, spectral_radius

__all__ = [
    "DefiningGraph",
    "GroupSpec",
    "GrowthReport",
    "TransferMatrix",
    "analyze",
    "build_geodesic",
    "build_shortlex",
    "cayley_counts",
    "certify_primitive",
    "char_poly",
    "count_words",
    "double",
    "export_dot",
    "geodesic_counts",
    "parse_graph",
    "perron_certificate",
    "prune",
    "spectral_radius",
    "steinberg_series",
    "theorem_e_check",
]
