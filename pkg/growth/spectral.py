"""
Transfer-matrix analysis: strong connectivity, period, primitivity certificates,
rigorous spectral-radius enclosures, exact characteristic polynomials, Perron
certificates and asymptotic constants.

Every decision (verdicts, enclosure bounds) is made in exact integer / rational
arithmetic. Floats appear only in value hints and in the constant estimate.
"""

import json
import logging
import math
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction

import networkx as nx
import numpy as np
import sympy
from sympy.polys.domains import ZZ
from sympy.polys.matrices import DomainMatrix

from growth.config import ASYMPTOTIC_WINDOW, CHARPOLY_DIM_CAP, DEFAULT_TOLERANCE, POWER_ITERATION_CAP, Verdict
from growth.errors import DimensionCap, GraphParseError, InvariantViolation, NoConvergence, NoCycle, NotPrimitive

logger = logging.getLogger(__name__)

# Bit length above which power-iteration vectors are scaled back down
RESCALE_BITS = 512
RESCALE_KEEP_BITS = 256

# Rectangle widths tried in turn when isolating non-real characteristic roots
SEPARATION_EPS = (Fraction(1, 10), Fraction(1, 10**3), Fraction(1, 10**6), Fraction(1, 10**12))


@dataclass(frozen=True)
class TransferMatrix:
    """Square non-negative integer matrix with an optional start vector u."""

    entries: tuple[tuple[int, ...], ...]
    start_vector: tuple[int, ...] | None = None
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        n = len(self.entries)
        if n < 1:
            raise ValueError("transfer matrix must have dimension >= 1")
        for row in self.entries:
            if len(row) != n:
                raise ValueError(f"transfer matrix must be square, got a row of length {len(row)} for dimension {n}")
            if any(e < 0 for e in row):
                raise ValueError("transfer matrix entries must be non-negative")
        if self.start_vector is not None and len(self.start_vector) != n:
            raise ValueError(f"start vector has length {len(self.start_vector)}, expected {n}")
        if self.labels is not None and len(self.labels) != n:
            raise ValueError(f"{len(self.labels)} labels for dimension {n}")

    @classmethod
    def from_edges(
        cls,
        dimension: int,
        edges,
        start_vector: tuple[int, ...] | None = None,
        labels: tuple[str, ...] | None = None,
    ) -> "TransferMatrix":
        """Adjacency matrix of a directed multigraph given as (source, target) pairs."""
        rows = [[0] * dimension for _ in range(dimension)]
        for i, j in edges:
            rows[i][j] += 1
        return cls(tuple(tuple(row) for row in rows), start_vector, labels)

    @classmethod
    def from_digraph_json(cls, text: str, source: str = "<fixture>") -> "TransferMatrix":
        """
        Load a raw digraph fixture: {"nodes": [...], "edges": [[u, v] or [u, v, label], ...], "start_weights": {node: int}?}.

        Raises:
            GraphParseError: On malformed fixtures.
        """
        try:
            payload = json.loads(text)
        except json.JSONDecodeError as e:
            raise GraphParseError(f"invalid JSON: {e.msg}", f"{source}:{e.lineno}:{e.colno}") from None
        if not isinstance(payload, dict) or "nodes" not in payload:
            raise GraphParseError("digraph fixture needs a \"nodes\" list", source)

        nodes = [str(v) for v in payload["nodes"]]
        index = {v: i for i, v in enumerate(nodes)}
        if len(index) != len(nodes):
            raise GraphParseError("duplicate node", f"{source}:nodes")
        if not nodes:
            raise GraphParseError("digraph has no nodes", f"{source}:nodes")

        edges = []
        for k, edge in enumerate(payload.get("edges", [])):
            if not isinstance(edge, list) or len(edge) not in (2, 3):
                raise GraphParseError("edge must be [u, v] or [u, v, label]", f"{source}:edges[{k}]")
            u, v = str(edge[0]), str(edge[1])
            for endpoint in (u, v):
                if endpoint not in index:
                    raise GraphParseError(f"unknown node {endpoint!r}", f"{source}:edges[{k}]")
            edges.append((index[u], index[v]))

        start_vector = None
        if "start_weights" in payload:
            raw = payload["start_weights"]
            if not isinstance(raw, dict):
                raise GraphParseError("start_weights must be an object of node -> int", f"{source}:start_weights")
            weights = [0] * len(nodes)
            for node, weight in raw.items():
                if str(node) not in index:
                    raise GraphParseError(f"unknown node {node!r}", f"{source}:start_weights")
                if isinstance(weight, bool) or not isinstance(weight, int) or weight < 0:
                    raise GraphParseError(f"weight of {node!r} must be a non-negative integer", f"{source}:start_weights")
                weights[index[str(node)]] = int(weight)
            start_vector = tuple(weights)
        return cls.from_edges(len(nodes), edges, start_vector, tuple(nodes))

    @property
    def dimension(self) -> int:
        return len(self.entries)

    def successors(self, i: int) -> list[int]:
        return [j for j, e in enumerate(self.entries[i]) if e]

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels is not None else str(i)

    def to_networkx(self) -> nx.DiGraph:
        graph = nx.DiGraph()
        graph.add_nodes_from(range(self.dimension))
        graph.add_edges_from((i, j) for i in range(self.dimension) for j in self.successors(i))
        return graph

    def to_numpy(self) -> np.ndarray:
        return np.array(self.entries, dtype=float)

    def submatrix(self, indices) -> "TransferMatrix":
        indices = tuple(indices)
        rows = tuple(tuple(self.entries[i][j] for j in indices) for i in indices)
        labels = tuple(self.label(i) for i in indices) if self.labels is not None else None
        return TransferMatrix(rows, None, labels)

    def apply(self, x: list[int]) -> list[int]:
        """Exact product M x."""
        return [sum(e * xj for e, xj in zip(row, x) if e) for row in self.entries]

    def word_counts(self, n_max: int) -> list[int]:
        """Path counts c_0 = 1, c_l = u^T M^(l-1) 1 for l = 1..n_max."""
        if self.start_vector is None:
            raise ValueError("word counts need a start vector")
        counts = [1]
        v = [1] * self.dimension
        for _ in range(n_max):
            counts.append(sum(u * vi for u, vi in zip(self.start_vector, v)))
            v = self.apply(v)
        return counts

    def to_dict(self) -> dict:
        return {
            "labels": list(self.labels) if self.labels is not None else None,
            "entries": [list(row) for row in self.entries],
            "start_vector": list(self.start_vector) if self.start_vector is not None else None,
        }


@dataclass(frozen=True)
class PrimitivityCertificate:
    """
    Irreducibility and aperiodicity witnesses.

    `period` and `cycle_lengths` describe `component`: the whole matrix when it is
    strongly connected, otherwise the first attracting component with a cycle.
    """

    strongly_connected: bool
    components: tuple[tuple[int, ...], ...]
    component: tuple[int, ...] | None
    period: int | None
    cycle_lengths: tuple[int, ...]
    primitive: bool
    reasons: tuple[str, ...] = ()

    def __post_init__(self):
        if self.primitive != (self.strongly_connected and self.period == 1):
            raise InvariantViolation("primitive must equal strongly connected and period 1")


@dataclass(frozen=True)
class RateEnclosure:
    """Rational enclosure lower <= rho <= upper with a float hint."""

    lower: Fraction
    upper: Fraction
    value_hint: float
    converged: bool = True
    periodic: bool = False
    iterations: int = 0

    def __post_init__(self):
        if self.lower > self.upper:
            raise InvariantViolation(f"enclosure lower bound {self.lower} exceeds upper bound {self.upper}")

    @classmethod
    def exact(cls, value) -> "RateEnclosure":
        value = Fraction(value)
        return cls(value, value, float(value))

    @classmethod
    def from_bounds(cls, lower: Fraction, upper: Fraction, **kwargs) -> "RateEnclosure":
        return cls(lower, upper, _hint(lower, upper), **kwargs)

    @property
    def width(self) -> Fraction:
        return self.upper - self.lower

    @property
    def is_exact(self) -> bool:
        return self.lower == self.upper

    def contains(self, value) -> bool:
        return self.lower <= value <= self.upper


def _hint(lower: Fraction, upper: Fraction) -> float:
    hint = float((lower + upper) / 2)
    if Fraction(hint) < lower:
        hint = math.nextafter(hint, math.inf)
    elif Fraction(hint) > upper:
        hint = math.nextafter(hint, -math.inf)
    return hint


def enclosure_max(enclosures: list[RateEnclosure]) -> RateEnclosure:
    """Enclosure of the maximum of the enclosed values."""
    return RateEnclosure.from_bounds(
        max(e.lower for e in enclosures),
        max(e.upper for e in enclosures),
        converged=all(e.converged for e in enclosures),
        periodic=any(e.periodic for e in enclosures),
    )


def enclosure_sum(enclosures: list[RateEnclosure]) -> RateEnclosure:
    """Enclosure of the sum of the enclosed values."""
    return RateEnclosure.from_bounds(
        sum((e.lower for e in enclosures), Fraction(0)),
        sum((e.upper for e in enclosures), Fraction(0)),
        converged=all(e.converged for e in enclosures),
        periodic=any(e.periodic for e in enclosures),
    )


def enclosure_ratio(numerator: RateEnclosure, denominator: RateEnclosure) -> RateEnclosure:
    """Enclosure of numerator / denominator for non-negative numerator and positive denominator."""
    if denominator.lower <= 0:
        raise ValueError("denominator enclosure must be positive")
    return RateEnclosure.from_bounds(
        numerator.lower / denominator.upper,
        numerator.upper / denominator.lower,
        converged=numerator.converged and denominator.converged,
    )


@dataclass(frozen=True)
class CharPoly:
    """Monic integer characteristic polynomial, coefficients from the leading one down."""

    coefficients: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def as_poly(self) -> sympy.Poly:
        return sympy.Poly(list(self.coefficients), sympy.Symbol("x"), domain="ZZ")

    def evaluate(self, x: Fraction) -> Fraction:
        value = Fraction(0)
        for c in self.coefficients:
            value = value * x + c
        return value

    def annihilates(self, m: TransferMatrix) -> bool:
        """Cayley-Hamilton check: p(M) == 0, by Horner's scheme on integer matrices."""
        n = m.dimension
        result = [[0] * n for _ in range(n)]
        for c in self.coefficients:
            result = _matmul(result, m.entries)
            for i in range(n):
                result[i][i] += c
        return all(e == 0 for row in result for e in row)

    def __str__(self) -> str:
        return str(self.as_poly().as_expr()).replace("**", "^").replace("*", "")


@dataclass(frozen=True)
class PerronReport:
    verdict: Verdict
    enclosure: RateEnclosure
    certificate: PrimitivityCertificate
    char_poly: CharPoly | None = None
    separation: str = "not applicable"
    reasons: tuple[str, ...] = field(default_factory=tuple)

    def summary(self) -> str:
        detail = "; ".join(self.reasons)
        head = f"{self.verdict.value}: {detail}" if detail else self.verdict.value
        return f"{head}; radius encloses {self.enclosure.value_hint:.8f}"


@dataclass(frozen=True)
class AsymptoticConstant:
    """Constant C in count_n ~ C rho^n, estimated from eigenvectors and from a coefficient window."""

    value: float
    window_estimate: float
    window: tuple[int, int]
    residual: float
    rho_hint: float
    ratios: tuple[float, ...]


def _matmul(a, b) -> list[list[int]]:
    n = len(a)
    columns = list(zip(*b))
    return [[sum(x * y for x, y in zip(a[i], col) if x) for col in columns] for i in range(n)]


def _has_cycle(m: TransferMatrix, component) -> bool:
    return len(component) > 1 or m.entries[component[0]][component[0]] > 0


def _is_simple_cycle(m: TransferMatrix, component) -> bool:
    inside = set(component)
    return all(sum(m.entries[i][j] for j in inside) == 1 for i in component)


def strongly_connected(m: TransferMatrix) -> tuple[bool, list[tuple[int, ...]]]:
    """
    Strong connectivity and the SCC partition.

    A single vertex without a self-loop is not strongly connected in the cyclic sense.

    Returns:
        (is strongly connected, SCCs as sorted index tuples ordered by least index)
    """
    components = sorted((tuple(sorted(c)) for c in nx.strongly_connected_components(m.to_networkx())), key=lambda c: c[0])
    return len(components) == 1 and _has_cycle(m, components[0]), components


def attracting_components(m: TransferMatrix) -> list[tuple[int, ...]]:
    """SCCs with no edge leaving them."""
    _, components = strongly_connected(m)
    result = []
    for component in components:
        inside = set(component)
        if all(j in inside for i in component for j in m.successors(i)):
            result.append(component)
    return result


def _levels(m: TransferMatrix, component) -> dict[int, int]:
    inside = set(component)
    root = component[0]
    level = {root: 0}
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for v in m.successors(u):
            if v in inside and v not in level:
                level[v] = level[u] + 1
                queue.append(v)
    if len(level) != len(inside):
        raise ValueError("component is not strongly connected")
    return level


def period(m: TransferMatrix, component) -> int:
    """
    Period of an SCC: gcd of level[u] + 1 - level[v] over its edges u -> v, levels from a BFS tree.

    Raises:
        NoCycle: If the component is a single vertex without a self-loop.
    """
    component = tuple(component)
    if not _has_cycle(m, component):
        raise NoCycle(f"component {component} has no cycle")
    level = _levels(m, component)
    g = 0
    for u in component:
        for v in m.successors(u):
            if v in level:
                g = math.gcd(g, level[u] + 1 - level[v])
    return g


def cycle_length_witness(m: TransferMatrix, component, target_period: int) -> tuple[int, ...]:
    """
    Lengths of closed walks through the component's first vertex whose gcd equals the period.

    Closed-walk lengths up to 3 * |component| are scanned by bitmask reachability.
    """
    component = tuple(component)
    local = {v: k for k, v in enumerate(component)}
    masks = [sum(1 << local[v] for v in m.successors(u) if v in local) for u in component]

    lengths: list[int] = []
    g = 0
    reach = 1
    for d in range(1, 3 * len(component) + 1):
        step = 0
        bits = reach
        while bits:
            low = bits & -bits
            step |= masks[low.bit_length() - 1]
            bits ^= low
        reach = step
        if reach & 1 and math.gcd(g, d) != g:
            lengths.append(d)
            g = math.gcd(g, d)
            if g == target_period:
                break
    return tuple(lengths)


def certify_primitive(m: TransferMatrix) -> PrimitivityCertificate:
    """
    Primitivity certificate: SCC partition, period and cycle-length witnesses.

    For a reducible matrix the period is that of the first attracting component
    with a cycle (or of the first cyclic component if no attracting one has a cycle).
    """
    is_strong, components = strongly_connected(m)
    cyclic = [c for c in components if _has_cycle(m, c)]
    connectivity = [] if is_strong else [f"not strongly connected ({len(components)} components)"]

    if is_strong:
        component = components[0]
    else:
        attracting = [c for c in attracting_components(m) if _has_cycle(m, c)]
        component = (attracting or cyclic or [None])[0]

    if component is None:
        return PrimitivityCertificate(False, tuple(components), None, None, (), False, ("no cycle", *connectivity))

    p = period(m, component)
    witness = cycle_length_witness(m, component, p)
    reasons = ([f"period {p}"] if p > 1 else []) + connectivity
    return PrimitivityCertificate(is_strong, tuple(components), component, p, witness, is_strong and p == 1, tuple(reasons))


def _collatz_wielandt(rows, tol: Fraction, iteration_cap: int) -> RateEnclosure:
    """
    Collatz-Wielandt enclosure on the power iterates x_k = A^k 1 of an irreducible matrix.

    For every positive x, min (Ax)_i / x_i <= rho <= max (Ax)_i / x_i; the running
    intersection of these intervals is returned.
    """
    n = len(rows)
    sparse = [[(j, e) for j, e in enumerate(row) if e] for row in rows]
    x = [1] * n
    best_lower, best_upper = Fraction(0), None

    for iteration in range(1, iteration_cap + 1):
        y = [sum(e * x[j] for j, e in row) for row in sparse]
        i_min = i_max = 0
        for i in range(1, n):
            if y[i] * x[i_min] < y[i_min] * x[i]:
                i_min = i
            if y[i] * x[i_max] > y[i_max] * x[i]:
                i_max = i
        best_lower = max(best_lower, Fraction(y[i_min], x[i_min]))
        upper = Fraction(y[i_max], x[i_max])
        best_upper = upper if best_upper is None else min(best_upper, upper)
        if best_upper - best_lower <= tol:
            return RateEnclosure.from_bounds(best_lower, best_upper, iterations=iteration)

        top = max(y).bit_length()
        if top > RESCALE_BITS:
            shift = top - RESCALE_KEEP_BITS
            x = [(v >> shift) + 1 for v in y]
        else:
            x = y

    logger.warning("power iteration stopped at cap %d with width %s", iteration_cap, float(best_upper - best_lower))
    return RateEnclosure.from_bounds(best_lower, best_upper, converged=False, iterations=iteration_cap)


def _root_bounds(lower: Fraction, upper: Fraction, p: int, precision: Fraction) -> tuple[Fraction, Fraction]:
    """Rational r_lo <= lower^(1/p) and r_hi >= upper^(1/p) by bisection."""

    def bisect(value: Fraction) -> tuple[Fraction, Fraction]:
        lo, hi = Fraction(0), max(Fraction(1), value)
        while hi - lo > precision:
            mid = (lo + hi) / 2
            if mid**p <= value:
                lo = mid
            else:
                hi = mid
        return lo, hi

    return bisect(lower)[0], bisect(upper)[1]


def _component_radius(m: TransferMatrix, component, tol: Fraction, iteration_cap: int) -> RateEnclosure:
    if len(component) == 1:
        return RateEnclosure.exact(m.entries[component[0]][component[0]])
    if _is_simple_cycle(m, component):
        return RateEnclosure.exact(1)

    sub = m.submatrix(component)
    local = tuple(range(sub.dimension))
    p = period(sub, local)
    if p == 1:
        return _collatz_wielandt(sub.entries, tol, iteration_cap)

    # M^p restricted to one cyclic class is primitive with radius rho^p
    level = _levels(sub, local)
    cyclic_class = [i for i in local if level[i] % p == 0]
    power = [list(row) for row in sub.entries]
    for _ in range(p - 1):
        power = _matmul(power, sub.entries)
    restricted = [[power[i][j] for j in cyclic_class] for i in cyclic_class]
    inner = _collatz_wielandt(restricted, tol / 2, iteration_cap)
    lower, upper = _root_bounds(inner.lower, inner.upper, p, tol / 4)
    return RateEnclosure.from_bounds(lower, upper, converged=inner.converged, periodic=True, iterations=inner.iterations)


def spectral_radius(
    m: TransferMatrix,
    tol: Fraction = DEFAULT_TOLERANCE,
    iteration_cap: int = POWER_ITERATION_CAP,
    strict: bool = False,
) -> RateEnclosure:
    """
    Rigorous enclosure of the spectral radius.

    The radius is the maximum over the cyclic SCCs. Aperiodic components are enclosed
    with Collatz-Wielandt bounds; a component of period p > 1 is enclosed through
    M^p on one cyclic class followed by a rational p-th root, and the result is
    flagged `periodic`. A matrix without cycles is nilpotent and yields [0, 0].

    Args:
        m: Transfer matrix.
        tol: Target enclosure width.
        iteration_cap: Maximum power-iteration steps per component.
        strict: Raise instead of returning a flagged enclosure when the cap is hit.

    Raises:
        NoConvergence: With `strict`, when the tolerance is not reached.
    """
    if tol <= 0:
        raise ValueError(f"tolerance must be positive, got {tol}")
    _, components = strongly_connected(m)
    cyclic = [c for c in components if _has_cycle(m, c)]
    if not cyclic:
        return RateEnclosure.exact(0)

    enclosures = [_component_radius(m, c, tol, iteration_cap) for c in cyclic]
    result = enclosure_max(enclosures)
    result = RateEnclosure(
        result.lower,
        result.upper,
        result.value_hint,
        converged=result.converged,
        periodic=result.periodic,
        iterations=sum(e.iterations for e in enclosures),
    )
    logger.debug("spectral radius of %dx%d matrix in [%s, %s]", m.dimension, m.dimension, float(result.lower), float(result.upper))
    if strict and not result.converged:
        raise NoConvergence(f"tolerance {tol} not reached within {iteration_cap} iterations", result)
    return result


def char_poly(m: TransferMatrix, cap: int = CHARPOLY_DIM_CAP) -> CharPoly:
    """
    Exact characteristic polynomial det(xI - M) by division-free elimination over ZZ.

    Raises:
        DimensionCap: If the dimension exceeds `cap`.
    """
    if m.dimension > cap:
        raise DimensionCap(cap, m.dimension)
    matrix = DomainMatrix.from_list([list(row) for row in m.entries], ZZ)
    return CharPoly(tuple(int(c) for c in matrix.charpoly()))


def dominant_root_separation(poly: CharPoly, enclosure: RateEnclosure) -> str:
    """
    Check that the enclosed root is simple and strictly dominates every other root in modulus.

    Sturm counting confirms a single simple root inside the enclosure and no other
    real root of modulus at least its lower end. Non-real roots are isolated in
    rectangles, coarse first; a finer pass runs only while some rectangle straddles
    the circle of that radius.

    Returns:
        "verified" or "inconclusive".
    """
    x = sympy.Symbol("x")
    p = poly.as_poly()
    lo, hi = sympy.Rational(enclosure.lower.numerator, enclosure.lower.denominator), sympy.Rational(
        enclosure.upper.numerator, enclosure.upper.denominator
    )
    if p.count_roots(lo, hi) != 1:
        return "inconclusive"
    repeated = sympy.gcd(p, p.diff(x))
    if repeated.degree() > 0 and repeated.count_roots(lo, hi) > 0:
        return "inconclusive"

    square_free = p.sqf_part()
    if square_free.count_roots(lo, None) != 1 or square_free.count_roots(None, -lo) != 0:
        return "inconclusive"
    if square_free.count_roots() == square_free.degree():
        return "verified"

    for eps in SEPARATION_EPS:
        _, complex_ = square_free.intervals(all=True, eps=sympy.Rational(eps.numerator, eps.denominator))
        undecided = False
        for (corner_low, corner_high), _ in complex_:
            x1, x2 = sorted((sympy.re(corner_low), sympy.re(corner_high)))
            y1, y2 = sorted((sympy.im(corner_low), sympy.im(corner_high)))
            if max(x1**2, x2**2) + max(y1**2, y2**2) < lo**2:
                continue
            nearest_x = 0 if x1 <= 0 <= x2 else min(abs(x1), abs(x2))
            nearest_y = 0 if y1 <= 0 <= y2 else min(abs(y1), abs(y2))
            if nearest_x**2 + nearest_y**2 >= lo**2:
                return "inconclusive"
            undecided = True
        if not undecided:
            return "verified"
        logger.debug("complex root rectangles straddle |z| = %s at eps %s, refining", float(lo), eps)
    return "inconclusive"


def perron_certificate(
    m: TransferMatrix,
    tol: Fraction = DEFAULT_TOLERANCE,
    charpoly_cap: int = CHARPOLY_DIM_CAP,
) -> PerronReport:
    """
    Perron verdict for the spectral radius of `m`.

    RateZero: no cycle. RateOne: every cyclic SCC is a simple cycle, so rho = 1
    exactly. PerronCertified: primitive with rho > 1; the dominant-root separation
    check runs when the dimension is within `charpoly_cap`. NotCertified otherwise,
    with the reasons from the primitivity certificate.
    """
    certificate = certify_primitive(m)
    enclosure = spectral_radius(m, tol)
    _, components = strongly_connected(m)
    cyclic = [c for c in components if _has_cycle(m, c)]

    if not cyclic:
        return PerronReport(Verdict.RATE_ZERO, enclosure, certificate, reasons=("nilpotent",))
    if all(_is_simple_cycle(m, c) for c in cyclic):
        return PerronReport(Verdict.RATE_ONE, enclosure, certificate, reasons=("every cyclic component is a simple cycle",))
    if not certificate.primitive or enclosure.lower <= 1:
        reasons = certificate.reasons or ("radius not separated from 1",)
        return PerronReport(Verdict.NOT_CERTIFIED, enclosure, certificate, reasons=reasons)

    if m.dimension > charpoly_cap:
        separation = f"skipped: dimension {m.dimension} exceeds cap {charpoly_cap}"
        return PerronReport(Verdict.PERRON_CERTIFIED, enclosure, certificate, None, separation)
    poly = char_poly(m, charpoly_cap)
    separation = dominant_root_separation(poly, enclosure)
    if separation != "verified":
        logger.warning("dominant-root separation inconclusive for %dx%d matrix", m.dimension, m.dimension)
    return PerronReport(Verdict.PERRON_CERTIFIED, enclosure, certificate, poly, separation)


def asymptotic_constant(
    m: TransferMatrix,
    tol: Fraction = DEFAULT_TOLERANCE,
    window: tuple[int, int] = ASYMPTOTIC_WINDOW,
) -> AsymptoticConstant:
    """
    Constant C with u^T M^(n-1) 1 ~ C rho^n.

    C = (u.r)(l.1) / ((l.r) rho) for right / left Perron vectors r, l, compared with
    count_n / rho^n over `window`.

    Raises:
        NotPrimitive: If `m` is not primitive or rho <= 1.
    """
    certificate = certify_primitive(m)
    if not certificate.primitive:
        raise NotPrimitive(f"asymptotic constant needs a primitive matrix ({'; '.join(certificate.reasons)})")
    enclosure = spectral_radius(m, tol)
    if enclosure.lower <= 1:
        raise NotPrimitive("asymptotic constant needs a spectral radius above 1")
    if m.start_vector is None:
        raise ValueError("asymptotic constant needs a start vector")

    a = m.to_numpy()
    rho = enclosure.value_hint
    values, vectors = np.linalg.eig(a)
    right = np.abs(vectors[:, np.argmax(values.real)].real)
    values, vectors = np.linalg.eig(a.T)
    left = np.abs(vectors[:, np.argmax(values.real)].real)
    u = np.array(m.start_vector, dtype=float)
    value = float((u @ right) * left.sum() / ((left @ right) * rho))

    start, end = window
    counts = m.word_counts(end)
    ratios = tuple(counts[n] / rho**n for n in range(start, end + 1))
    window_estimate = ratios[-1]
    residual = abs(value - window_estimate) / window_estimate
    return AsymptoticConstant(value, window_estimate, (start, end), residual, rho, ratios)
