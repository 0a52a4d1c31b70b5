"""
Brute-force ground truth for growth counts.

Nothing here uses the automata: elements are tracked as canonical words computed
from commutation classes, and the Steinberg series is expanded from the clique
polynomial. Letters are generator indices in the order of `GroupSpec.generators`;
for a RAAG on n vertices, index r < n is the inverse of vertex n-1-r and index
r >= n is vertex r-n.
"""

import logging
import math
from dataclasses import dataclass
from functools import lru_cache

import networkx as nx

from growth.config import FRONTIER_CAP, STATE_CAP, GroupKind
from growth.errors import CliqueExplosion, FrontierCap, GroupKindError
from growth.graphcore import GroupSpec

logger = logging.getLogger(__name__)

CLASS_CACHE_SIZE = 1 << 16


@dataclass(frozen=True)
class CanonicalElement:
    """Shortlex-least geodesic word of a group element, as generator indices."""

    word: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.word)

    def labels(self, spec: GroupSpec) -> tuple[str, ...]:
        return tuple(spec.generators[i] for i in self.word)


class WordProblem:
    """
    Word rewriting for a RACG or RAAG.

    Two letters commute iff their vertices are distinct and adjacent; a letter
    cancels against its inverse (itself for a RACG).
    """

    def __init__(self, spec: GroupSpec):
        graph = spec.graph
        n = graph.size
        self.spec = spec
        if spec.kind == GroupKind.RACG:
            self.vertex = list(range(n))
            self.inverse = list(range(n))
        else:
            self.vertex = [n - 1 - r if r < n else r - n for r in range(2 * n)]
            self.inverse = [2 * n - 1 - r for r in range(2 * n)]
        self.alphabet = len(self.vertex)
        self.commute = [
            sum(1 << s for s in range(self.alphabet) if graph.adjacent(self.vertex[r], self.vertex[s])) for r in range(self.alphabet)
        ]
        self.commutation_class = lru_cache(maxsize=CLASS_CACHE_SIZE)(self._commutation_class)

    def _commutation_class(self, word: tuple[int, ...]) -> frozenset[tuple[int, ...]]:
        """All words reachable from `word` by swapping adjacent commuting letters."""
        seen = {word}
        stack = [word]
        while stack:
            w = stack.pop()
            for i in range(len(w) - 1):
                a, b = w[i], w[i + 1]
                if self.commute[a] >> b & 1:
                    swapped = w[:i] + (b, a) + w[i + 2 :]
                    if swapped not in seen:
                        seen.add(swapped)
                        stack.append(swapped)
        return frozenset(seen)

    def cancellation(self, word_class: frozenset[tuple[int, ...]]) -> tuple[tuple[int, ...], int] | None:
        """Least word of the class holding an adjacent letter/inverse pair, with the pair's position."""
        for w in sorted(word_class):
            for i in range(len(w) - 1):
                if w[i + 1] == self.inverse[w[i]]:
                    return w, i
        return None

    def canonical(self, word: tuple[int, ...]) -> tuple[int, ...]:
        """Cancel pairs until the commutation class is reduced, then take its least word."""
        word = tuple(word)
        while True:
            word_class = self.commutation_class(word)
            found = self.cancellation(word_class)
            if found is None:
                return min(word_class)
            w, i = found
            word = w[:i] + w[i + 2 :]

    def extend(self, word: tuple[int, ...], letter: int) -> tuple[int, ...] | None:
        """Canonical form of word + letter for a canonical geodesic `word`, or None if the product is shorter."""
        word_class = self.commutation_class(word + (letter,))
        inverse = self.inverse
        if any(w[i + 1] == inverse[w[i]] for w in word_class for i in range(len(w) - 1)):
            return None
        return min(word_class)


def canonical(spec: GroupSpec, word: tuple[int, ...]) -> CanonicalElement:
    """Canonical element of an arbitrary word over the generator indices."""
    return CanonicalElement(WordProblem(spec).canonical(tuple(word)))


def sphere_walk(spec: GroupSpec, n_max: int, cap: int = FRONTIER_CAP) -> tuple[list[int], list[int]]:
    """
    Breadth-first walk over the spheres of the Cayley graph.

    Each sphere maps canonical words to their number of geodesic words. Extending
    every element of sphere l by every generator and keeping the products of length
    l + 1 gives sphere l + 1; a product's geodesic count is the sum over its
    geodesic predecessors, since every prefix of a geodesic is a geodesic.

    Returns:
        (element counts a_0..a_n_max, geodesic counts b_0..b_n_max)

    Raises:
        FrontierCap: If a sphere grows beyond `cap` elements.
    """
    problem = WordProblem(spec)
    sphere: dict[tuple[int, ...], int] = {(): 1}
    elements, geodesics = [1], [1]
    for length in range(1, n_max + 1):
        following: dict[tuple[int, ...], int] = {}
        for word, paths in sphere.items():
            for letter in range(problem.alphabet):
                extended = problem.extend(word, letter)
                if extended is not None:
                    following[extended] = following.get(extended, 0) + paths
            if len(following) > cap:
                raise FrontierCap(cap, len(following), length)
        sphere = dict(sorted(following.items()))
        elements.append(len(sphere))
        geodesics.append(sum(sphere.values()))
        logger.debug("sphere %d: %d elements, %d geodesics", length, elements[-1], geodesics[-1])
    return elements, geodesics


def cayley_counts(spec: GroupSpec, n_max: int, cap: int = FRONTIER_CAP) -> list[int]:
    """Number of group elements of each word length 0..n_max."""
    return sphere_walk(spec, n_max, cap)[0]


def geodesic_counts(spec: GroupSpec, n_max: int, cap: int = FRONTIER_CAP) -> list[int]:
    """Number of geodesic words of each length 0..n_max."""
    return sphere_walk(spec, n_max, cap)[1]


def clique_counts(spec: GroupSpec, cap: int = STATE_CAP) -> list[int]:
    """c_k = number of cliques with k vertices, c_0 = 1 for the empty clique."""
    counts = [1]
    for total, clique in enumerate(nx.enumerate_all_cliques(spec.graph.to_networkx()), start=1):
        if total > cap:
            raise CliqueExplosion(cap, total)
        while len(counts) <= len(clique):
            counts.append(0)
        counts[len(clique)] += 1
    return counts


def steinberg_rational_function(spec: GroupSpec, cap: int = STATE_CAP) -> tuple[list[int], list[int]]:
    """
    Spherical growth series of a RACG as numerator / denominator coefficients (lowest degree first).

    1/f(t) = sum over cliques s (empty clique included) of (-t/(1+t))^|s|, so
    f(t) = (1+t)^m / P(t) with P(t) = sum_k c_k (-t)^k (1+t)^(m-k), m the clique number.

    Raises:
        GroupKindError: For RAAG specs (use the doubled graph).
        CliqueExplosion: If the clique count exceeds `cap`.
    """
    if spec.kind != GroupKind.RACG:
        raise GroupKindError("the Steinberg series is defined here for RACGs")
    counts = clique_counts(spec, cap)
    m = len(counts) - 1
    numerator = [math.comb(m, i) for i in range(m + 1)]
    denominator = [0] * (m + 1)
    for k, c in enumerate(counts):
        for i in range(m - k + 1):
            denominator[k + i] += c * (-1) ** k * math.comb(m - k, i)
    while len(denominator) > 1 and denominator[-1] == 0:
        denominator.pop()
    return numerator, denominator


def expand_series(numerator: list[int], denominator: list[int], n_max: int) -> list[int]:
    """Power series coefficients 0..n_max of numerator / denominator, denominator[0] == 1."""
    if denominator[0] != 1:
        raise ValueError(f"denominator must have constant term 1, got {denominator[0]}")
    coefficients: list[int] = []
    for n in range(n_max + 1):
        value = numerator[n] if n < len(numerator) else 0
        for j in range(1, min(n, len(denominator) - 1) + 1):
            value -= denominator[j] * coefficients[n - j]
        coefficients.append(value)
    return coefficients


def steinberg_series(spec: GroupSpec, n_max: int, cap: int = STATE_CAP) -> list[int]:
    """Spherical growth coefficients a_0..a_n_max of a RACG from the Steinberg rational function."""
    numerator, denominator = steinberg_rational_function(spec, cap)
    return expand_series(numerator, denominator, n_max)


def format_polynomial(coefficients: list[int], variable: str = "t") -> str:
    """Render lowest-degree-first coefficients, e.g. [1, -1, -1] -> '1 - t - t^2'."""
    terms = []
    for k, c in enumerate(coefficients):
        if c == 0:
            continue
        power = "" if k == 0 else variable if k == 1 else f"{variable}^{k}"
        magnitude = abs(c)
        body = str(magnitude) if not power else power if magnitude == 1 else f"{magnitude}{power}"
        if not terms:
            terms.append(body if c > 0 else f"-{body}")
        else:
            terms.append(f"{'+' if c > 0 else '-'} {body}")
    return " ".join(terms) or "0"
