"""
Geodesic and shortlex word acceptors of a right-angled Coxeter group.

States are the start state (the empty set) and the cliques of the defining graph.
Reading generator v in state s:

    geodesic:  fail if v in s, else {v} | (st(v) & s)
    shortlex:  additionally fail if st(v) & s is nonempty and v > min(st(v) & s)

The fail state is not stored: a missing transition means fail. The shortlex
automaton accepts the reverse shortlex language, i.e. a word is accepted iff its
reversal is the shortlex-least geodesic of its element.
"""

import logging
from collections import deque
from collections.abc import Iterator
from dataclasses import dataclass

import graphviz

from growth.config import STATE_CAP, AutomatonKind, GroupKind
from growth.errors import CliqueExplosion, GroupKindError, InvariantViolation
from growth.graphcore import CliqueSet, DefiningGraph, GroupSpec, enumerate_cliques
from growth.spectral import TransferMatrix

logger = logging.getLogger(__name__)

FAIL = -1


@dataclass(frozen=True)
class AutomatonState:
    """Start state (members == 0) or a clique, as a vertex bitmask."""

    members: int

    @property
    def is_start(self) -> bool:
        return self.members == 0

    @property
    def clique(self) -> CliqueSet | None:
        return None if self.is_start else CliqueSet(self.members)

    def label(self, graph: DefiningGraph) -> str:
        if self.is_start:
            return "∅"
        return "{" + ",".join(graph.labels(self.members)) + "}"


@dataclass(frozen=True)
class Automaton:
    """
    Deterministic partial automaton over the vertices of the defining graph.

    `table[s][v]` is the target state index of reading generator v in state s, or
    FAIL. Every non-fail state accepts.
    """

    kind: AutomatonKind
    graph: DefiningGraph
    states: tuple[AutomatonState, ...]
    table: tuple[tuple[int, ...], ...]
    start: int = 0

    @property
    def generators(self) -> tuple[str, ...]:
        return self.graph.vertices

    def step(self, state: int, generator: int) -> int | None:
        target = self.table[state][generator]
        return None if target == FAIL else target

    def transitions(self) -> Iterator[tuple[int, int, int]]:
        """Stored transitions (source, generator, target) in state then generator order."""
        for s, row in enumerate(self.table):
            for v, t in enumerate(row):
                if t != FAIL:
                    yield s, v, t

    @property
    def transition_count(self) -> int:
        return sum(1 for _ in self.transitions())

    def state_index(self, members: int) -> int:
        for i, state in enumerate(self.states):
            if state.members == members:
                return i
        raise KeyError(f"no state with members {members:b}")


def _step(graph: DefiningGraph, kind: AutomatonKind, s: int, v: int) -> int | None:
    bit = 1 << v
    if s & bit:
        return None
    common = graph.adjacency[v] & s
    if kind == AutomatonKind.SHORTLEX and common and v > (common & -common).bit_length() - 1:
        return None
    return bit | common


def _build(spec: GroupSpec, kind: AutomatonKind, cap: int) -> Automaton:
    if spec.kind != GroupKind.RACG:
        raise GroupKindError(f"{kind.value} automaton is built for RACGs; double the RAAG first")
    graph = spec.graph

    index = {0: 0}
    states = [0]
    rows: list[list[int]] = []
    queue = deque([0])
    while queue:
        s = queue.popleft()
        row = []
        for v in range(graph.size):
            t = _step(graph, kind, s, v)
            if t is None:
                row.append(FAIL)
                continue
            if t not in index:
                # states[0] is the start state; the cap bounds cliques only
                if len(states) - 1 >= cap:
                    raise CliqueExplosion(cap, len(states))
                index[t] = len(states)
                states.append(t)
                queue.append(t)
            row.append(index[t])
        rows.append(row)

    # Forward closure must reach exactly the cliques
    cliques = {c.members for c in enumerate_cliques(graph, cap)}
    if cliques != set(states[1:]):
        raise InvariantViolation(f"{kind.value} automaton reached {len(states) - 1} states but the graph has {len(cliques)} cliques")

    logger.debug("%s automaton: %d states", kind.value, len(states))
    return Automaton(kind, graph, tuple(AutomatonState(s) for s in states), tuple(tuple(row) for row in rows))


def build_geodesic(spec: GroupSpec, cap: int = STATE_CAP) -> Automaton:
    """
    Geodesic automaton: accepts every geodesic word of the RACG.

    Raises:
        GroupKindError: For RAAG specs.
        CliqueExplosion: If the graph has more than `cap` cliques.
    """
    return _build(spec, AutomatonKind.GEODESIC, cap)


def build_shortlex(spec: GroupSpec, cap: int = STATE_CAP) -> Automaton:
    """
    Shortlex automaton: the geodesic automaton minus the transitions (s, v) with
    st(v) & s nonempty and v above its least element.

    Raises:
        GroupKindError: For RAAG specs.
        CliqueExplosion: If the graph has more than `cap` cliques.
    """
    return _build(spec, AutomatonKind.SHORTLEX, cap)


def build(spec: GroupSpec, kind: AutomatonKind, cap: int = STATE_CAP) -> Automaton:
    return _build(spec, AutomatonKind(kind), cap)


@dataclass(frozen=True)
class PrunedGraph:
    """
    Transition graph without the start state.

    Node k is automaton state k + 1; `start_vector[k]` counts the generators leading
    from the start state into node k.
    """

    states: tuple[AutomatonState, ...]
    edges: tuple[tuple[int, int, int], ...]  # (source, target, generator)
    start_vector: tuple[int, ...]

    @property
    def dimension(self) -> int:
        return len(self.states)


def prune(a: Automaton) -> PrunedGraph:
    """Drop the start state, turning its outgoing transitions into the start vector."""
    if a.start != 0:
        raise InvariantViolation("start state must be state 0")
    start_vector = [0] * (len(a.states) - 1)
    edges = []
    for s, v, t in a.transitions():
        if t == a.start:
            raise InvariantViolation("transition re-enters the start state")
        if s == a.start:
            start_vector[t - 1] += 1
        else:
            edges.append((s - 1, t - 1, v))
    return PrunedGraph(a.states[1:], tuple(edges), tuple(start_vector))


def transfer_matrix(a: Automaton) -> TransferMatrix:
    """0/1 adjacency matrix of the pruned automaton, with its start vector and state labels."""
    pruned = prune(a)
    labels = tuple(state.label(a.graph) for state in pruned.states)
    matrix = TransferMatrix.from_edges(pruned.dimension, [(s, t) for s, t, _ in pruned.edges], pruned.start_vector, labels)
    if any(e > 1 for row in matrix.entries for e in row):
        raise InvariantViolation("pruned automaton has parallel edges")
    return matrix


def count_words(a: Automaton, n_max: int) -> list[int]:
    """Exact number of accepted words of each length 0..n_max."""
    return transfer_matrix(a).word_counts(n_max)


def accepts(a: Automaton, word: tuple[int, ...]) -> bool:
    """Run the automaton on a word of generator indices."""
    state = a.start
    for v in word:
        state = a.step(state, v)
        if state is None:
            return False
    return True


def enumerate_words(a: Automaton, length: int) -> list[tuple[int, ...]]:
    """Accepted words of one length, lexicographic in the generator order."""
    words = []
    stack = [(a.start, ())]
    while stack:
        state, word = stack.pop()
        if len(word) == length:
            words.append(word)
            continue
        for v in reversed(range(len(a.generators))):
            t = a.step(state, v)
            if t is not None:
                stack.append((t, word + (v,)))
    return words


def export_dot(a: Automaton) -> str:
    """DOT digraph of the automaton: start state double-circled, fail state omitted, one labeled edge per transition."""
    dot = graphviz.Digraph(
        name=f"{a.kind.value}_automaton",
        graph_attr={"rankdir": "LR"},
        node_attr={"shape": "circle", "fontname": "Monospace"},
        edge_attr={"fontname": "Monospace"},
    )
    for i, state in enumerate(a.states):
        dot.node(f"s{i}", label=state.label(a.graph), shape="doublecircle" if i == a.start else "circle")
    for s, v, t in a.transitions():
        dot.edge(f"s{s}", f"s{t}", label=a.generators[v])
    return dot.source


def automaton_to_dict(a: Automaton) -> dict:
    """JSON-ready dump: {kind, generators, states, transitions: [[from, generator, to]], start}."""
    return {
        "kind": a.kind.value,
        "generators": list(a.generators),
        "states": [state.label(a.graph) for state in a.states],
        "transitions": [[s, a.generators[v], t] for s, v, t in a.transitions()],
        "start": a.start,
    }
