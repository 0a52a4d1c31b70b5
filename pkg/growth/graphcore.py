"""
Defining-graph model: parsing, stars, complement components, clique enumeration,
the RAAG doubling construction and small-graph families.

Vertices are addressed by index in the graph's total order; adjacency is stored as
one bitmask per vertex.
"""

import itertools
import json
import logging
from collections.abc import Iterator
from dataclasses import dataclass
from functools import cached_property

import networkx as nx

from growth.config import MAX_VERTICES, STATE_CAP, GroupKind
from growth.errors import CliqueExplosion, GraphParseError, UnknownVertex

logger = logging.getLogger(__name__)


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of `mask`, lowest first."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class DefiningGraph:
    """Simple graph with an ordered vertex set; `adjacency[i]` is the neighbor bitmask of vertex i."""

    vertices: tuple[str, ...]
    adjacency: tuple[int, ...]

    def __post_init__(self):
        n = len(self.vertices)
        if n > MAX_VERTICES:
            raise GraphParseError(f"{n} vertices exceeds the supported maximum of {MAX_VERTICES}")
        if len(set(self.vertices)) != n:
            duplicate = next(v for v in self.vertices if self.vertices.count(v) > 1)
            raise GraphParseError(f"duplicate vertex {duplicate!r}")
        if len(self.adjacency) != n:
            raise GraphParseError(f"adjacency has {len(self.adjacency)} rows for {n} vertices")
        for i, row in enumerate(self.adjacency):
            if row >> i & 1:
                raise GraphParseError(f"self-loop at {self.vertices[i]!r}")
            if row >> n:
                raise GraphParseError(f"adjacency row of {self.vertices[i]!r} references vertices beyond {n}")
            for j in iter_bits(row):
                if not self.adjacency[j] >> i & 1:
                    raise GraphParseError(f"adjacency not symmetric between {self.vertices[i]!r} and {self.vertices[j]!r}")

    @classmethod
    def from_edges(cls, vertices: list[str] | tuple[str, ...], edges: list[tuple[str, str]]) -> "DefiningGraph":
        """
        Build a graph from vertex labels (in order) and label pairs.

        Raises:
            UnknownVertex: If an edge endpoint is not a vertex.
            GraphParseError: On self-loops or duplicate vertices.
        """
        vertices = tuple(vertices)
        index = {v: i for i, v in enumerate(vertices)}
        rows = [0] * len(vertices)
        for u, v in edges:
            if u not in index:
                raise UnknownVertex(u)
            if v not in index:
                raise UnknownVertex(v)
            if u == v:
                raise GraphParseError(f"self-loop at {u!r}")
            rows[index[u]] |= 1 << index[v]
            rows[index[v]] |= 1 << index[u]
        return cls(vertices, tuple(rows))

    @property
    def size(self) -> int:
        return len(self.vertices)

    @property
    def full_mask(self) -> int:
        return (1 << self.size) - 1

    @cached_property
    def _index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownVertex(label) from None

    def adjacent(self, i: int, j: int) -> bool:
        return bool(self.adjacency[i] >> j & 1)

    @property
    def edges(self) -> list[tuple[int, int]]:
        """Edges as index pairs (i < j) in lexicographic order."""
        return [(i, j) for i in range(self.size) for j in iter_bits(self.adjacency[i]) if i < j]

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adjacency) // 2

    def is_clique(self, mask: int) -> bool:
        return all(mask & ~(1 << i) & ~self.adjacency[i] == 0 for i in iter_bits(mask))

    def labels(self, mask: int) -> tuple[str, ...]:
        return tuple(self.vertices[i] for i in iter_bits(mask))

    def complement(self) -> "DefiningGraph":
        full = self.full_mask
        return DefiningGraph(self.vertices, tuple(full & ~row & ~(1 << i) for i, row in enumerate(self.adjacency)))

    def subgraph(self, indices: list[int] | tuple[int, ...]) -> "DefiningGraph":
        """Induced subgraph on `indices`, keeping the relative order."""
        indices = sorted(indices)
        position = {old: new for new, old in enumerate(indices)}
        rows = []
        for old in indices:
            rows.append(sum(1 << position[j] for j in iter_bits(self.adjacency[old]) if j in position))
        return DefiningGraph(tuple(self.vertices[i] for i in indices), tuple(rows))

    def reordered(self, order: list[int] | tuple[int, ...]) -> "DefiningGraph":
        """The same graph with vertex `order[k]` moved to position k."""
        if sorted(order) != list(range(self.size)):
            raise ValueError(f"order must be a permutation of 0..{self.size - 1}, got {list(order)}")
        position = {old: new for new, old in enumerate(order)}
        rows = tuple(sum(1 << position[j] for j in iter_bits(self.adjacency[old])) for old in order)
        return DefiningGraph(tuple(self.vertices[i] for i in order), rows)

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.size))
        graph.add_edges_from(self.edges)
        return graph

    def to_dict(self) -> dict:
        return {"vertices": list(self.vertices), "edges": [[self.vertices[i], self.vertices[j]] for i, j in self.edges]}


@dataclass(frozen=True)
class CliqueSet:
    """Nonempty clique of a defining graph as a vertex bitmask."""

    members: int

    def __len__(self) -> int:
        return self.members.bit_count()

    def __contains__(self, index: int) -> bool:
        return bool(self.members >> index & 1)

    def indices(self) -> tuple[int, ...]:
        return tuple(iter_bits(self.members))

    @property
    def lowest(self) -> int:
        return (self.members & -self.members).bit_length() - 1


@dataclass(frozen=True)
class GroupSpec:
    """A defining graph together with the group kind it presents."""

    graph: DefiningGraph
    kind: GroupKind

    @property
    def generators(self) -> tuple[str, ...]:
        """
        Symmetric generating set in its total order.

        RACG: the vertices. RAAG: formal inverses in reversed vertex order, then the
        vertices, matching the order of the doubled graph.
        """
        if self.kind == GroupKind.RACG:
            return self.graph.vertices
        return tuple(f"{v}^-1" for v in reversed(self.graph.vertices)) + self.graph.vertices

    def doubled(self) -> "GroupSpec":
        """The RACG of the doubled graph; a RACG spec is returned unchanged."""
        if self.kind == GroupKind.RACG:
            return self
        return GroupSpec(double(self.graph), GroupKind.RACG)

    def to_dict(self) -> dict:
        return {**self.graph.to_dict(), "kind": self.kind.value}


def _coerce_kind(value, location: str) -> GroupKind:
    try:
        return GroupKind(str(value).lower())
    except ValueError:
        raise GraphParseError(f"kind must be 'racg' or 'raag', got {value!r}", location) from None


def _parse_json_graph(text: str, source: str) -> tuple[list[str], list[tuple[str, str]], GroupKind | None]:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as e:
        raise GraphParseError(f"invalid JSON: {e.msg}", f"{source}:{e.lineno}:{e.colno}") from None
    if not isinstance(payload, dict):
        raise GraphParseError("top-level JSON value must be an object", source)

    edges = []
    for k, edge in enumerate(payload.get("edges", [])):
        if not isinstance(edge, list | tuple) or len(edge) != 2:
            raise GraphParseError("edge must be a pair [u, v]", f"{source}:edges[{k}]")
        edges.append((str(edge[0]), str(edge[1])))

    if "vertices" in payload:
        vertices = [str(v) for v in payload["vertices"]]
        seen = set()
        for k, v in enumerate(vertices):
            if v in seen:
                raise GraphParseError(f"duplicate vertex {v!r}", f"{source}:vertices[{k}]")
            seen.add(v)
        for k, (u, v) in enumerate(edges):
            for endpoint in (u, v):
                if endpoint not in seen:
                    raise GraphParseError(f"unknown endpoint {endpoint!r}", f"{source}:edges[{k}]")
    else:
        vertices = sorted({v for edge in edges for v in edge})

    for k, (u, v) in enumerate(edges):
        if u == v:
            raise GraphParseError(f"self-loop at {u!r}", f"{source}:edges[{k}]")

    if "order" in payload:
        order = [str(v) for v in payload["order"]]
        if sorted(order) != sorted(vertices) or len(set(order)) != len(order):
            raise GraphParseError("order must be a permutation of the vertices", f"{source}:order")
        vertices = order

    kind = _coerce_kind(payload["kind"], f"{source}:kind") if "kind" in payload else None
    return vertices, edges, kind


def _parse_edge_list(text: str, source: str) -> tuple[list[str], list[tuple[str, str]], GroupKind | None]:
    header = None
    vertices: list[str] = []
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        location = f"{source}:{lineno}"
        if len(fields) != 2:
            raise GraphParseError(f"expected two fields, got {len(fields)}", location)
        if header is None:
            kind = _coerce_kind(fields[0], location)
            if not fields[1].isdigit():
                raise GraphParseError(f"vertex count must be a non-negative integer, got {fields[1]!r}", location)
            vertices = [str(i) for i in range(1, int(fields[1]) + 1)]
            header = kind
            continue
        u, v = fields
        for endpoint in (u, v):
            if endpoint not in vertices:
                raise GraphParseError(f"unknown endpoint {endpoint!r}", location)
        if u == v:
            raise GraphParseError(f"self-loop at {u!r}", location)
        edges.append((u, v))
    if header is None:
        raise GraphParseError("missing header line 'kind n'", source)
    return vertices, edges, header


def parse_graph(text: str, source: str = "<input>", kind: GroupKind | None = None) -> GroupSpec:
    """
    Parse a defining graph in JSON or flat edge-list form.

    JSON: {"vertices": [...], "edges": [[u, v], ...], "kind": "racg"|"raag", "order": [...]?}.
    Edge list: a header line `kind n`, then one `u v` pair per line over the labels 1..n.

    Args:
        text: Graph description.
        source: Name used in error locations (usually the file path).
        kind: Overrides the kind given in the input.

    Returns:
        Validated GroupSpec. The vertex order is `order` if present, else the listed
        vertex order, else label-lexicographic.

    Raises:
        GraphParseError: On malformed input, with location.
    """
    stripped = text.lstrip()
    if stripped.startswith("{"):
        vertices, edges, parsed_kind = _parse_json_graph(text, source)
    else:
        vertices, edges, parsed_kind = _parse_edge_list(text, source)

    kind = kind or parsed_kind
    if kind is None:
        raise GraphParseError("group kind not given (add \"kind\" or pass --kind)", source)
    if not vertices:
        raise GraphParseError("graph has no vertices", source)

    graph = DefiningGraph.from_edges(vertices, edges)
    logger.debug("parsed %s: %d vertices, %d edges, kind %s", source, graph.size, graph.edge_count, kind.value)
    return GroupSpec(graph, kind)


def star(g: DefiningGraph, v: str) -> frozenset[str]:
    """Neighbors of `v` (v itself excluded)."""
    return frozenset(g.labels(g.adjacency[g.index(v)]))


def complement_component_indices(g: DefiningGraph) -> list[tuple[int, ...]]:
    """Connected components of the complement graph as sorted index tuples, ordered by least vertex."""
    components = nx.connected_components(nx.complement(g.to_networkx()))
    return sorted((tuple(sorted(c)) for c in components), key=lambda c: c[0])


def complement_components(g: DefiningGraph) -> list[tuple[str, ...]]:
    """Connected components of the complement graph as label tuples, ordered by least vertex."""
    return [tuple(g.vertices[i] for i in component) for component in complement_component_indices(g)]


def spanning_tree_order(g: DefiningGraph) -> tuple[int, ...]:
    """
    Vertex indices in breadth-first order of a spanning tree of the complement.

    The tree is rooted at vertex 0 and children are taken in index order, so each
    tree level is numbered left to right. In this order the pruned shortlex
    automaton of a group with connected complement is strongly connected.

    Raises:
        ValueError: If the complement is disconnected.
    """
    complement = nx.complement(g.to_networkx())
    order = (0, *(v for _, v in nx.bfs_edges(complement, 0, sort_neighbors=sorted)))
    if len(order) != g.size:
        raise ValueError(f"complement is disconnected: {len(order)} of {g.size} vertices reachable from {g.vertices[0]!r}")
    return order


def enumerate_cliques(g: DefiningGraph, cap: int = STATE_CAP) -> list[CliqueSet]:
    """
    All nonempty cliques of `g`, each once.

    Ordered DFS: a clique is extended only by vertices above its largest member that
    are adjacent to every member, so cliques come out in lexicographic order of their
    sorted index sequences.

    Raises:
        CliqueExplosion: If more than `cap` cliques exist.
    """
    cliques: list[CliqueSet] = []
    # (members, candidate extensions)
    stack = [(1 << i, g.adjacency[i] & ~((2 << i) - 1)) for i in reversed(range(g.size))]
    while stack:
        members, candidates = stack.pop()
        cliques.append(CliqueSet(members))
        if len(cliques) > cap:
            raise CliqueExplosion(cap, len(cliques))
        for j in reversed(list(iter_bits(candidates))):
            stack.append((members | 1 << j, candidates & g.adjacency[j] & ~((2 << j) - 1)))
    return cliques


def double(g: DefiningGraph) -> DefiningGraph:
    """
    The doubled graph: vertices v- and v+ per vertex v, and for every edge (u, v) the
    four edges between {u-, u+} and {v-, v+}.

    Order: minus-vertices first in reversed order of g, then plus-vertices in the
    order of g. Vertex i of g becomes n-1-i (minus) and n+i (plus).
    """
    n = g.size
    vertices = tuple(f"{v}-" for v in reversed(g.vertices)) + tuple(f"{v}+" for v in g.vertices)
    rows = [0] * (2 * n)
    for i, j in g.edges:
        for a in (n - 1 - i, n + i):
            for b in (n - 1 - j, n + j):
                rows[a] |= 1 << b
                rows[b] |= 1 << a
    return DefiningGraph(vertices, tuple(rows))


def labeled_graphs(n: int) -> Iterator[DefiningGraph]:
    """Every labeled graph on the vertices 1..n, in order of the edge-subset bitmask."""
    vertices = tuple(str(i) for i in range(1, n + 1))
    pairs = list(itertools.combinations(range(n), 2))
    for subset in range(1 << len(pairs)):
        rows = [0] * n
        for k in iter_bits(subset):
            i, j = pairs[k]
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        yield DefiningGraph(vertices, tuple(rows))


def atlas_graphs(max_n: int) -> Iterator[DefiningGraph]:
    """Every graph on 1..max_n vertices up to isomorphism (max_n <= 7), in networkx atlas order."""
    if max_n > 7:
        raise ValueError(f"the graph atlas stops at 7 vertices, got {max_n}")
    for atlas_graph in nx.graph_atlas_g():
        n = atlas_graph.number_of_nodes()
        if n == 0:
            continue
        if n > max_n:
            break
        vertices = [str(i + 1) for i in range(n)]
        yield DefiningGraph.from_edges(vertices, [(str(u + 1), str(v + 1)) for u, v in atlas_graph.edges()])
