"""
Top-level group analysis.

The complement of the defining graph splits the group into a direct product, one
factor per complement component. Trivial factors get their rates directly;
general factors get shortlex and geodesic automata, Perron certificates and
enclosures. Combined rates follow alpha = max and beta = sum over the factors.
RAAGs are analyzed through the doubled graph.
"""

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction

from growth.automata import build_geodesic, build_shortlex, transfer_matrix
from growth.config import (
    ASYMPTOTIC_WINDOW,
    DEFAULT_TERMS,
    DEFAULT_TOLERANCE,
    FRONTIER_CAP,
    STATE_CAP,
    TIGHTENING_ROUNDS,
    FactorClass,
    GroupKind,
    Verdict,
)
from growth.errors import HypothesisNotMet, InvariantViolation, NotPrimitive
from growth.graphcore import GroupSpec, complement_component_indices, double, spanning_tree_order
from growth.oracles import sphere_walk
from growth.spectral import (
    PerronReport,
    RateEnclosure,
    TransferMatrix,
    asymptotic_constant,
    enclosure_max,
    enclosure_ratio,
    enclosure_sum,
    perron_certificate,
)

logger = logging.getLogger(__name__)


def _exact_verdict(enclosure: RateEnclosure) -> Verdict:
    if enclosure.is_exact and enclosure.lower == 0:
        return Verdict.RATE_ZERO
    if enclosure.is_exact and enclosure.lower == 1:
        return Verdict.RATE_ONE
    return Verdict.NOT_CERTIFIED


@dataclass(frozen=True)
class FactorReport:
    """One direct-product factor: a complement component (isolated RACG vertices grouped into one finite factor)."""

    vertices: tuple[str, ...]
    classification: FactorClass
    alpha: RateEnclosure
    beta: RateEnclosure
    alpha_certificate: PerronReport | None = None
    beta_certificate: PerronReport | None = None
    # generator order the factor's automata were built in (general factors only)
    order: tuple[str, ...] = ()
    matrices: tuple[TransferMatrix, TransferMatrix] | None = field(default=None, compare=False, repr=False)

    @property
    def alpha_verdict(self) -> Verdict:
        return self.alpha_certificate.verdict if self.alpha_certificate else _exact_verdict(self.alpha)

    @property
    def beta_verdict(self) -> Verdict:
        return self.beta_certificate.verdict if self.beta_certificate else _exact_verdict(self.beta)


@dataclass(frozen=True)
class ConstantEstimate:
    """Two estimates of C in b_n ~ C delta^n a_n and their relative discrepancy."""

    eigen_estimate: float
    window_estimate: float
    window: tuple[int, int]
    discrepancy: float
    ratios: tuple[float, ...]


@dataclass(frozen=True)
class GrowthReport:
    kind: GroupKind
    order_used: tuple[str, ...]
    analyzed_order: tuple[str, ...]
    factors: tuple[FactorReport, ...]
    alpha: RateEnclosure
    beta: RateEnclosure
    alpha_perron: Verdict
    beta_perron: Verdict
    a_coeffs: tuple[int, ...]
    b_coeffs: tuple[int, ...]
    delta_ratio: RateEnclosure | None
    constant: ConstantEstimate | None
    tolerance: Fraction
    notes: tuple[str, ...] = ()

    @property
    def complement_connected(self) -> bool:
        return self.delta_ratio is not None


def combined_verdict(enclosure: RateEnclosure, verdicts: list[Verdict]) -> Verdict:
    """
    Verdict for a max or sum of factor rates.

    Each factor rate is 0, 1 or a Perron number; maxima and sums of such values
    above 1 are Perron numbers again.
    """
    exact = _exact_verdict(enclosure)
    if exact != Verdict.NOT_CERTIFIED:
        return exact
    if Verdict.NOT_CERTIFIED in verdicts or enclosure.lower <= 1:
        return Verdict.NOT_CERTIFIED
    return Verdict.PERRON_CERTIFIED


def combine_factors(factors: list[FactorReport]) -> tuple[RateEnclosure, RateEnclosure, Verdict, Verdict]:
    """alpha = max and beta = sum over the factors, with their verdicts."""
    alpha = enclosure_max([f.alpha for f in factors])
    beta = enclosure_sum([f.beta for f in factors])
    alpha_perron = combined_verdict(alpha, [f.alpha_verdict for f in factors])
    beta_perron = combined_verdict(beta, [f.beta_verdict for f in factors])
    return alpha, beta, alpha_perron, beta_perron


def _general_factor(vertices: tuple[str, ...], racg: GroupSpec, tolerance: Fraction, certify: bool, state_cap: int) -> FactorReport:
    # rates do not depend on the order, primitivity of the shortlex matrix does
    racg = GroupSpec(racg.graph.reordered(spanning_tree_order(racg.graph)), GroupKind.RACG)
    shortlex = transfer_matrix(build_shortlex(racg, state_cap))
    geodesic = transfer_matrix(build_geodesic(racg, state_cap))
    # charpoly_cap=0 skips the dominant-root separation check
    separation_cap = {} if certify else {"charpoly_cap": 0}
    alpha_certificate = perron_certificate(shortlex, tolerance, **separation_cap)
    beta_certificate = perron_certificate(geodesic, tolerance, **separation_cap)
    if alpha_certificate.enclosure.lower <= 1 or beta_certificate.enclosure.lower <= 1:
        logger.warning("factor %s: rate enclosure not separated from 1 at tolerance %s", vertices, tolerance)
    return FactorReport(
        vertices,
        FactorClass.GENERAL,
        alpha_certificate.enclosure,
        beta_certificate.enclosure,
        alpha_certificate,
        beta_certificate,
        order=racg.graph.vertices,
        matrices=(shortlex, geodesic),
    )


def decompose(spec: GroupSpec, tolerance: Fraction = DEFAULT_TOLERANCE, certify: bool = True, state_cap: int = STATE_CAP) -> list[FactorReport]:
    """
    Factor reports in order of least vertex.

    RACG: isolated complement vertices form one finite factor (Z2 for a one-vertex
    graph), two-vertex components are infinite dihedral, larger components general.
    RAAG: single vertices are Z factors; larger components are general and analyzed
    on their doubled graph.
    """
    graph = spec.graph
    zero, one = RateEnclosure.exact(0), RateEnclosure.exact(1)
    keyed: list[tuple[int, FactorReport]] = []

    components = complement_component_indices(graph)
    if spec.kind == GroupKind.RACG:
        isolated = [c[0] for c in components if len(c) == 1]
        if isolated:
            classification = FactorClass.Z2 if graph.size == 1 else FactorClass.FINITE
            keyed.append((isolated[0], FactorReport(tuple(graph.vertices[i] for i in isolated), classification, zero, zero)))

    for component in components:
        labels = tuple(graph.vertices[i] for i in component)
        if spec.kind == GroupKind.RACG:
            if len(component) == 1:
                continue
            if len(component) == 2:
                report = FactorReport(labels, FactorClass.DINFINITY, one, one)
            else:
                report = _general_factor(labels, GroupSpec(graph.subgraph(component), GroupKind.RACG), tolerance, certify, state_cap)
        elif len(component) == 1:
            report = FactorReport(labels, FactorClass.ZFACTOR, one, one)
        else:
            doubled = GroupSpec(double(graph.subgraph(component)), GroupKind.RACG)
            report = _general_factor(labels, doubled, tolerance, certify, state_cap)
        keyed.append((component[0], report))

    return [report for _, report in sorted(keyed, key=lambda item: item[0])]


def whole_group_counts(spec: GroupSpec, n_max: int, state_cap: int = STATE_CAP) -> tuple[list[int], list[int]]:
    """a_0..a_n_max and b_0..b_n_max from the automata of the whole (doubled, for a RAAG) group."""
    racg = spec.doubled()
    a = transfer_matrix(build_shortlex(racg, state_cap)).word_counts(n_max)
    b = transfer_matrix(build_geodesic(racg, state_cap)).word_counts(n_max)
    return a, b


def combine_spherical(a: list[int], other: list[int]) -> list[int]:
    """Sphere sizes of a direct product: the Cauchy product of the factors' sequences."""
    n = min(len(a), len(other))
    return [sum(a[k] * other[m - k] for k in range(m + 1)) for m in range(n)]


def combine_geodesic(b: list[int], other: list[int]) -> list[int]:
    """Geodesic counts of a direct product: shuffles of one geodesic from each factor."""
    n = min(len(b), len(other))
    return [sum(math.comb(m, k) * b[k] * other[m - k] for k in range(m + 1)) for m in range(n)]


def factor_counts(factor: FactorReport, n_max: int) -> tuple[list[int], list[int]]:
    """a_0..a_n_max and b_0..b_n_max of one factor."""
    if factor.matrices is not None:
        shortlex, geodesic = factor.matrices
        return shortlex.word_counts(n_max), geodesic.word_counts(n_max)
    if factor.classification in (FactorClass.Z2, FactorClass.FINITE):
        # (Z2)^k: one commuting involution per vertex
        generator = [1, 1] + [0] * (n_max - 1)
        a, b = [1] + [0] * n_max, [1] + [0] * n_max
        for _ in factor.vertices:
            a, b = combine_spherical(a, generator), combine_geodesic(b, generator)
        return a, b
    # D-infinity and Z: two elements and one geodesic of each positive length
    line = [1] + [2] * n_max
    return line, list(line)


def product_counts(factors: list[FactorReport], n_max: int) -> tuple[list[int], list[int]]:
    """Counts of the direct product of `factors`, combined with the product formulas."""
    a, b = [1] + [0] * n_max, [1] + [0] * n_max
    for factor in factors:
        factor_a, factor_b = factor_counts(factor, n_max)
        a, b = combine_spherical(a, factor_a), combine_geodesic(b, factor_b)
    return a, b


def _constant_estimate(
    factor: FactorReport, alpha: RateEnclosure, beta: RateEnclosure, tolerance: Fraction, window
) -> ConstantEstimate | None:
    shortlex, geodesic = factor.matrices
    try:
        spherical = asymptotic_constant(shortlex, tolerance, window)
        geodesic_constant = asymptotic_constant(geodesic, tolerance, window)
    except NotPrimitive as e:
        logger.warning("factor %s: constant estimate inconclusive (%s)", factor.vertices, e)
        return None
    ratios = _window_ratios(shortlex.word_counts(window[1]), geodesic.word_counts(window[1]), alpha, beta, window)
    eigen_estimate = geodesic_constant.value / spherical.value
    window_estimate = ratios[-1]
    return ConstantEstimate(eigen_estimate, window_estimate, tuple(window), abs(eigen_estimate - window_estimate) / window_estimate, ratios)


def _window_ratios(a: list[int], b: list[int], alpha: RateEnclosure, beta: RateEnclosure, window) -> tuple[float, ...]:
    """r_n = b_n / (delta^n a_n) with delta = beta / alpha from the value hints."""
    delta = beta.value_hint / alpha.value_hint
    return tuple(float(Fraction(b[n], a[n])) / delta**n for n in range(window[0], window[1] + 1))


def analyze(
    spec: GroupSpec,
    terms: int = DEFAULT_TERMS,
    tolerance: Fraction = DEFAULT_TOLERANCE,
    certify: bool = True,
    cross_check: int = 0,
    window: tuple[int, int] = ASYMPTOTIC_WINDOW,
    state_cap: int = STATE_CAP,
    frontier_cap: int = FRONTIER_CAP,
) -> GrowthReport:
    """
    Analyze a RACG or RAAG.

    Args:
        spec: Group to analyze.
        terms: Coefficients a_n, b_n are reported for n = 0..terms.
        tolerance: Target width of the rate enclosures.
        certify: Run the dominant-root separation check on general factors.
        cross_check: When positive, compare the first `cross_check` coefficients against the oracles.
        window: Coefficient window of the constant estimate.
        state_cap: Automaton state cap.
        frontier_cap: Oracle sphere cap (cross-check only).

    Returns:
        GrowthReport. delta and the constant are present only when the complement is connected.

    Raises:
        CliqueExplosion: If a factor has more than `state_cap` cliques.
        FrontierCap: If the cross-check exceeds `frontier_cap`.
        InvariantViolation: If the cross-check or the factor product disagrees with the automaton counts.
    """
    factors = decompose(spec, tolerance, certify, state_cap)
    alpha, beta, alpha_perron, beta_perron = combine_factors(factors)

    a_coeffs, b_coeffs = whole_group_counts(spec, terms, state_cap)
    if product_counts(factors, terms) != (a_coeffs, b_coeffs):
        raise InvariantViolation("whole-group counts disagree with the product of the factor counts")
    notes = []
    if cross_check > 0:
        n = min(cross_check, terms)
        oracle_a, oracle_b = sphere_walk(spec, n, frontier_cap)
        if oracle_a != a_coeffs[: n + 1] or oracle_b != b_coeffs[: n + 1]:
            raise InvariantViolation(f"automaton counts disagree with the Cayley graph oracle up to length {n}")
        notes.append(f"oracle cross-check passed for n <= {n}")

    delta_ratio = None
    constant = None
    if len(factors) == 1 and factors[0].classification == FactorClass.GENERAL:
        delta_ratio = enclosure_ratio(beta, alpha)
        constant = _constant_estimate(factors[0], alpha, beta, tolerance, window)
        if constant is None:
            notes.append("C skipped: factor transfer matrix is not primitive")
    else:
        notes.append("delta and C skipped: complement is disconnected or the group is elementary")

    logger.debug("analysis of %s on %d vertices: alpha ~ %s, beta ~ %s", spec.kind.value, spec.graph.size, alpha.value_hint, beta.value_hint)
    return GrowthReport(
        kind=spec.kind,
        order_used=spec.graph.vertices,
        analyzed_order=spec.doubled().graph.vertices,
        factors=tuple(factors),
        alpha=alpha,
        beta=beta,
        alpha_perron=alpha_perron,
        beta_perron=beta_perron,
        a_coeffs=tuple(a_coeffs),
        b_coeffs=tuple(b_coeffs),
        delta_ratio=delta_ratio,
        constant=constant,
        tolerance=tolerance,
        notes=tuple(notes),
    )


def theorem_e_hypothesis(spec: GroupSpec) -> tuple[bool, str]:
    """
    Whether geodesic growth strictly exceeds spherical growth is claimed for `spec`.

    RACG: the complement must not be a complete graph plus isolated vertices (which
    includes the finite groups). RAAG: the defining graph needs an edge.
    """
    graph = spec.graph
    if spec.kind == GroupKind.RAAG:
        if graph.edge_count == 0:
            return False, "defining graph has no edges (free group, unique geodesics)"
        return True, ""

    nontrivial = [c for c in complement_component_indices(graph) if len(c) > 1]
    if not nontrivial:
        return False, "group is finite (complement has no edges)"
    if len(nontrivial) == 1 and all(not graph.adjacent(i, j) for i in nontrivial[0] for j in nontrivial[0] if i != j):
        return False, "complement is a complete graph plus isolated vertices"
    return True, ""


@dataclass(frozen=True)
class TheoremECheck:
    """Diagnostics for b_n ~ C delta^n a_n with delta = beta / alpha > 1."""

    inequality_certified: bool
    alpha: RateEnclosure
    beta: RateEnclosure
    tolerance: Fraction
    tightening_rounds: int
    window: tuple[int, int]
    ratios: tuple[float, ...] = ()
    max_relative_change: float | None = None
    constant_estimate: float | None = None
    skipped_reason: str | None = None


def theorem_e_check(
    spec: GroupSpec,
    report: GrowthReport | None = None,
    window: tuple[int, int] = ASYMPTOTIC_WINDOW,
    state_cap: int = STATE_CAP,
) -> TheoremECheck:
    """
    Certify beta > alpha and, for a connected complement, check that r_n = b_n / (delta^n a_n) settles.

    The tolerance is divided by 1000 per round until the alpha and beta enclosures
    separate. With a disconnected complement only the inequality is checked: there
    a_n may carry a polynomial factor (Z^2 has a_n = 4n), so r_n need not converge
    to a positive constant.

    Raises:
        HypothesisNotMet: If the hypothesis fails.
    """
    holds, reason = theorem_e_hypothesis(spec)
    if not holds:
        raise HypothesisNotMet(reason)
    report = report or analyze(spec, state_cap=state_cap)

    tolerance, alpha, beta, rounds = report.tolerance, report.alpha, report.beta, 0
    while not alpha.upper < beta.lower and rounds < TIGHTENING_ROUNDS:
        tolerance /= 1000
        rounds += 1
        logger.debug("tightening tolerance to %s", tolerance)
        alpha, beta, _, _ = combine_factors(decompose(spec, tolerance, certify=False, state_cap=state_cap))
    certified = alpha.upper < beta.lower

    if not report.complement_connected:
        return TheoremECheck(certified, alpha, beta, tolerance, rounds, tuple(window), skipped_reason="complement is disconnected")

    a, b = report.a_coeffs, report.b_coeffs
    if len(a) <= window[1]:
        a, b = whole_group_counts(spec, window[1], state_cap)
    ratios = _window_ratios(list(a), list(b), alpha, beta, window)
    changes = [abs(ratios[k + 1] - ratios[k]) / abs(ratios[k]) for k in range(len(ratios) - 1)]
    return TheoremECheck(
        certified,
        alpha,
        beta,
        tolerance,
        rounds,
        tuple(window),
        ratios=ratios,
        max_relative_change=max(changes) if changes else 0.0,
        constant_estimate=report.constant.eigen_estimate if report.constant else None,
    )
