"""
Exhaustive checks over small graph families.

These take minutes; run them with `pytest -m slow`.
"""

import pytest

from growth.analysis import analyze, theorem_e_check, theorem_e_hypothesis, whole_group_counts
from growth.automata import build_geodesic, build_shortlex, count_words, transfer_matrix
from growth.config import FactorClass, GroupKind, Verdict
from growth.graphcore import GroupSpec, atlas_graphs, complement_component_indices, labeled_graphs, spanning_tree_order
from growth.oracles import sphere_walk, steinberg_series
from growth.spectral import certify_primitive

pytestmark = pytest.mark.slow


def _connected_complement(graph, minimum: int) -> bool:
    return graph.size >= minimum and len(complement_component_indices(graph)) == 1


def test_automata_match_oracles_on_five_vertices():
    for graph in labeled_graphs(5):
        spec = GroupSpec(graph, GroupKind.RACG)
        a, b = sphere_walk(spec, 8)
        assert count_words(build_shortlex(spec), 8) == a == steinberg_series(spec, 8), graph.edges
        assert count_words(build_geodesic(spec), 8) == b, graph.edges


def test_connected_complement_gives_primitive_matrices():
    for graph in atlas_graphs(6):
        if not _connected_complement(graph, 3):
            continue
        spec = GroupSpec(graph.reordered(spanning_tree_order(graph)), GroupKind.RACG)
        for automaton in (build_shortlex(spec), build_geodesic(spec)):
            certificate = certify_primitive(transfer_matrix(automaton))
            assert certificate.strongly_connected and certificate.period == 1, graph.edges


def test_connected_complement_gives_perron_rates():
    for kind, max_n in ((GroupKind.RACG, 6), (GroupKind.RAAG, 4)):
        for graph in atlas_graphs(max_n):
            if not _connected_complement(graph, 3 if kind == GroupKind.RACG else 2):
                continue
            report = analyze(GroupSpec(graph, kind), terms=4, certify=False)
            assert report.factors[0].classification == FactorClass.GENERAL
            assert report.alpha_perron == report.beta_perron == Verdict.PERRON_CERTIFIED, graph.edges


def test_raag_doubling_preserves_counts():
    for graph in atlas_graphs(4):
        spec = GroupSpec(graph, GroupKind.RAAG)
        counts = sphere_walk(spec, 6)
        assert sphere_walk(spec.doubled(), 6) == counts, graph.edges
        assert whole_group_counts(spec, 6) == counts, graph.edges


def test_beta_exceeds_alpha_on_six_vertices():
    for graph in atlas_graphs(6):
        spec = GroupSpec(graph, GroupKind.RACG)
        report = analyze(spec, terms=8, certify=False)
        holds, _ = theorem_e_hypothesis(spec)
        if holds:
            assert theorem_e_check(spec, report).inequality_certified, graph.edges
            continue
        # excluded family: a complete complement component plus isolated vertices
        assert (report.alpha.lower, report.alpha.upper) == (report.beta.lower, report.beta.upper), graph.edges
        if graph.edge_count == 0:
            assert report.a_coeffs == report.b_coeffs
