"""Tests for growth.analysis: factor decomposition, combined rates, the beta > alpha check."""

import time

import pytest

from growth.analysis import (
    analyze,
    combine_geodesic,
    combine_spherical,
    decompose,
    factor_counts,
    product_counts,
    theorem_e_check,
    theorem_e_hypothesis,
    whole_group_counts,
)
from growth.config import FactorClass, GroupKind, Verdict
from growth.errors import HypothesisNotMet, InvariantViolation, NotPrimitive
from growth.oracles import sphere_walk

from tests.conftest import brackets_root, make_spec


class TestDecompose:
    def test_path_splits_into_dihedral_and_finite(self, path3):
        factors = decompose(path3)
        assert [(f.vertices, f.classification) for f in factors] == [(("a", "c"), FactorClass.DINFINITY), (("b",), FactorClass.FINITE)]

    def test_single_vertex_racg(self):
        (factor,) = decompose(make_spec("a", []))
        assert factor.classification == FactorClass.Z2
        assert factor.alpha_verdict == Verdict.RATE_ZERO

    def test_isolated_vertices_are_grouped(self):
        k3 = make_spec("abc", [("a", "b"), ("b", "c"), ("a", "c")])
        (factor,) = decompose(k3)
        assert factor.vertices == ("a", "b", "c")
        assert factor.classification == FactorClass.FINITE

    def test_raag_factors(self, z_squared, load_graph):
        assert [f.classification for f in decompose(z_squared)] == [FactorClass.ZFACTOR, FactorClass.ZFACTOR]
        (factor,) = decompose(load_graph("p4.txt"))
        assert factor.classification == FactorClass.GENERAL
        assert factor.alpha_verdict == Verdict.PERRON_CERTIFIED

    def test_general_factor_carries_certificates(self, golden):
        (factor,) = decompose(golden)
        assert factor.classification == FactorClass.GENERAL
        assert factor.alpha_certificate.verdict == Verdict.PERRON_CERTIFIED
        assert factor.beta_certificate.verdict == Verdict.PERRON_CERTIFIED


class TestAnalyze:
    def test_pentagon_within_a_second(self, pentagon):
        start = time.perf_counter()
        report = analyze(pentagon)
        assert time.perf_counter() - start < 1.0
        assert report.alpha_perron == Verdict.PERRON_CERTIFIED
        assert all(f.alpha_certificate.separation == "verified" for f in report.factors)

    def test_path(self, path3):
        report = analyze(path3)
        assert report.alpha.is_exact and report.alpha.lower == 1
        assert report.beta.is_exact and report.beta.lower == 1
        assert report.alpha_perron == Verdict.RATE_ONE
        assert report.delta_ratio is None
        assert not report.complement_connected

    def test_free_abelian(self, z_squared):
        report = analyze(z_squared, terms=10)
        assert report.alpha.lower == 1 and report.beta.lower == 2
        assert report.beta_perron == Verdict.PERRON_CERTIFIED
        assert list(report.b_coeffs[1:]) == [2 ** (n + 2) - 4 for n in range(1, 11)]
        assert report.analyzed_order == ("y-", "x-", "x+", "y+")

    def test_golden(self, golden):
        report = analyze(golden)
        assert brackets_root(report.alpha, [1, -1, -1])
        assert brackets_root(report.beta, [1, 0, -2, -2])
        assert report.alpha.upper < report.beta.lower
        assert report.alpha_perron == report.beta_perron == Verdict.PERRON_CERTIFIED
        assert report.delta_ratio.value_hint == pytest.approx(1.0935, abs=1e-3)
        assert report.constant.discrepancy < 0.01

    def test_pentagon_coefficients(self, pentagon):
        report = analyze(pentagon, terms=20)
        a = report.a_coeffs
        assert a[:4] == (1, 5, 15, 40)
        assert all(a[n] == 3 * a[n - 1] - a[n - 2] for n in range(3, 21))
        assert report.alpha.width <= report.tolerance

    def test_finite(self):
        report = analyze(make_spec("abc", [("a", "b"), ("b", "c"), ("a", "c")]), terms=5)
        assert report.alpha_perron == report.beta_perron == Verdict.RATE_ZERO
        assert report.a_coeffs == (1, 3, 3, 1, 0, 0)

    def test_cross_check(self, golden):
        report = analyze(golden, cross_check=6)
        assert any("passed" in note for note in report.notes)

    def test_cross_check_disagreement(self, golden, monkeypatch):
        monkeypatch.setattr("growth.analysis.sphere_walk", lambda spec, n, cap: ([0] * (n + 1), [0] * (n + 1)))
        with pytest.raises(InvariantViolation):
            analyze(golden, cross_check=3)

    def test_raag_counts_match_oracle(self, load_graph):
        spec = load_graph("p4.txt")
        a, b = whole_group_counts(spec, 5)
        assert (a, b) == sphere_walk(spec, 5)

    def test_general_factor_in_spanning_tree_order(self, triangle_pair):
        report = analyze(triangle_pair, terms=6)
        (factor,) = report.factors
        assert factor.order == ("1", "5", "6", "2", "3", "4")
        assert report.order_used == ("1", "2", "3", "4", "5", "6")
        assert report.alpha_perron == report.beta_perron == Verdict.PERRON_CERTIFIED
        assert report.constant is not None
        assert report.a_coeffs[:2] == (1, 6)

    def test_constant_skipped_without_primitive_matrix(self, golden, monkeypatch):
        def reducible(*args, **kwargs):
            raise NotPrimitive("asymptotic constant needs a primitive matrix (not strongly connected (2 components))")

        monkeypatch.setattr("growth.analysis.asymptotic_constant", reducible)
        report = analyze(golden, terms=6)
        assert report.constant is None
        assert report.delta_ratio is not None
        assert "C skipped: factor transfer matrix is not primitive" in report.notes

    def test_product_disagreement(self, path3, monkeypatch):
        monkeypatch.setattr("growth.analysis.whole_group_counts", lambda spec, n, cap: ([1] * (n + 1), [1] * (n + 1)))
        with pytest.raises(InvariantViolation, match="product of the factor counts"):
            analyze(path3, terms=4)


class TestProducts:
    def test_cone_vertex(self, golden):
        cone = make_spec("abcd", [("b", "c"), ("a", "d"), ("b", "d"), ("c", "d")])
        a, b = whole_group_counts(golden, 8)
        cone_a, cone_b = whole_group_counts(cone, 8)
        assert cone_a == combine_spherical(a, [1, 1] + [0] * 7)
        assert cone_b == combine_geodesic(b, [1, 1] + [0] * 7)

    def test_square_is_product_of_dihedrals(self):
        square = make_spec("abcd", [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")])
        dihedral = [1] + [2] * 8
        a, b = whole_group_counts(square, 8)
        assert a == combine_spherical(dihedral, dihedral)
        assert b == combine_geodesic(dihedral, dihedral)

    @pytest.mark.parametrize("name", ["path3", "z_squared", "golden", "edgeless3", "triangle_pair"])
    def test_product_counts_match_whole_group(self, name, request):
        spec = request.getfixturevalue(name)
        assert product_counts(decompose(spec, certify=False), 7) == whole_group_counts(spec, 7)

    def test_finite_factor_counts(self):
        (factor,) = decompose(make_spec("abc", [("a", "b"), ("b", "c"), ("a", "c")]))
        assert factor_counts(factor, 4) == ([1, 3, 3, 1, 0], [1, 3, 6, 6, 0])


class TestHypothesis:
    @pytest.mark.parametrize(
        "vertices, edges, kind, holds",
        [
            ("abc", [("b", "c")], GroupKind.RACG, True),
            ("abc", [], GroupKind.RACG, False),
            ("abc", [("a", "b"), ("b", "c"), ("a", "c")], GroupKind.RACG, False),
            ("abcd", [("a", "d"), ("b", "d"), ("c", "d")], GroupKind.RACG, False),
            ("abcd", [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")], GroupKind.RACG, True),
            ("xy", [("x", "y")], GroupKind.RAAG, True),
            ("xy", [], GroupKind.RAAG, False),
        ],
    )
    def test_cases(self, vertices, edges, kind, holds):
        assert theorem_e_hypothesis(make_spec(vertices, edges, kind))[0] is holds

    def test_not_met_raises(self, edgeless3):
        with pytest.raises(HypothesisNotMet):
            theorem_e_check(edgeless3)


class TestBetaExceedsAlpha:
    @pytest.mark.parametrize("name", ["golden", "pentagon"])
    def test_connected_complement(self, name, request):
        check = theorem_e_check(request.getfixturevalue(name))
        assert check.inequality_certified
        assert check.skipped_reason is None
        assert check.max_relative_change < 0.01
        assert len(check.ratios) == 11

    def test_disconnected_complement(self, z_squared):
        check = theorem_e_check(z_squared)
        assert check.inequality_certified
        assert check.skipped_reason == "complement is disconnected"

    def test_square(self):
        check = theorem_e_check(make_spec("abcd", [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")]))
        assert check.inequality_certified
        assert check.alpha.upper == 1 and check.beta.lower == 2
