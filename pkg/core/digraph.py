"""
Labeled acyclic digraphs on ``{1..n}``, their canonical forms, undirected
cycles and cyclic inclusion-exclusion (CIE) elements.

Graphs are ordered by ``(n, sorted edge list)``; canonical labels are the
minimum of that order over all relabelings.
"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, permutations, product

import networkx as nx

from .conf import gessel_settings
from .errors import CapExceeded, CyclicGraphError, FormatError, NotACycleError
from .sparse import SparseVector

logger = logging.getLogger(__name__)


def _check_edges(n, edges):
    for u, v in edges:
        if u == v:
            raise FormatError(f"loop at vertex {u}")
        if not (1 <= u <= n and 1 <= v <= n):
            raise FormatError(f"edge ({u}, {v}) leaves the vertex range 1..{n}")


def is_acyclic(n, edges):
    edges = [(int(u), int(v)) for u, v in edges]
    _check_edges(n, edges)
    graph = nx.DiGraph()
    graph.add_nodes_from(range(1, n + 1))
    graph.add_edges_from(edges)
    return nx.is_directed_acyclic_graph(graph)


# =========================
#   GRAPHS
# =========================

@dataclass(frozen=True)
class Digraph:
    n: int
    edges: frozenset = frozenset()
    # edge-reversal graphs may carry directed cycles
    allow_cycles: bool = field(default=False, compare=False, repr=False)

    def __post_init__(self):
        edges = frozenset((int(u), int(v)) for u, v in self.edges)
        object.__setattr__(self, 'edges', edges)
        if self.allow_cycles:
            _check_edges(self.n, edges)
        elif not is_acyclic(self.n, edges):
            raise CyclicGraphError(f"graph on {self.n} vertices has a directed cycle")

    @classmethod
    def parse(cls, text):
        """Read the text format: ``n`` on the first line, then one ``u v`` edge per line."""
        lines = [
            line.split('#', 1)[0].strip() for line in text.splitlines()
        ]
        lines = [line for line in lines if line]
        if not lines:
            raise FormatError("graph text is empty")
        try:
            n = int(lines[0])
            edges = []
            for line in lines[1:]:
                u, v = line.split()
                edges.append((int(u), int(v)))
        except ValueError as exc:
            raise FormatError(f"cannot read graph text: {exc}") from exc
        if n < 0:
            raise FormatError("vertex count must be nonnegative")
        if len(set(edges)) != len(edges):
            raise FormatError("repeated edge")
        return cls(n, frozenset(edges))

    def to_text(self):
        return '\n'.join([str(self.n)] + [f"{u} {v}" for u, v in self.sorted_edges]) + '\n'

    def __str__(self):
        body = ','.join(f"{u}>{v}" for u, v in self.sorted_edges)
        return f"{self.n}:{{{body}}}"

    @property
    def sorted_edges(self):
        return tuple(sorted(self.edges))

    @property
    def sort_key(self):
        return (self.n, self.sorted_edges)

    @property
    def vertices(self):
        return range(1, self.n + 1)

    @property
    def is_acyclic(self):
        return is_acyclic(self.n, self.edges)

    def with_edges(self, edges):
        return Digraph(self.n, self.edges | frozenset(edges))

    def without(self, edges):
        return Digraph(self.n, self.edges - frozenset(edges))

    def relabel(self, perm):
        """Image under the relabeling ``i -> perm[i - 1]``."""
        return Digraph(self.n, frozenset((perm[u - 1], perm[v - 1]) for u, v in self.edges))

    def disjoint_union(self, other):
        shifted = frozenset((u + self.n, v + self.n) for u, v in other.edges)
        return Digraph(self.n + other.n, self.edges | shifted)

    def to_networkx(self):
        graph = nx.DiGraph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from(self.sorted_edges)
        return graph

    def undirected(self):
        return self.to_networkx().to_undirected()

    def successors(self, v):
        return frozenset(y for x, y in self.edges if x == v)

    def predecessors(self, v):
        return frozenset(x for x, y in self.edges if y == v)

    def component_count(self):
        return nx.number_connected_components(self.undirected())

    # bipartite helpers

    def is_bipartite(self):
        """No vertex is both the head and the tail of an edge."""
        heads = {v for _, v in self.edges}
        tails = {u for u, _ in self.edges}
        return not heads & tails

    def bipartition(self):
        """Canonical ``(V, W)``: ``W`` holds the vertices with an incoming edge, isolated vertices go to ``V``."""
        right = frozenset(v for _, v in self.edges)
        return frozenset(self.vertices) - right, right


class GraphVec(SparseVector):
    """Exact linear combination of labeled digraphs."""

    def _check_key(self, key):
        if not isinstance(key, Digraph):
            raise TypeError(f"{key!r} is not a Digraph")

    @staticmethod
    def _sort_key(key):
        return key.sort_key

    @classmethod
    def of(cls, graph, coeff=1):
        return cls({graph: coeff})

    @property
    def is_homogeneous(self):
        return len({graph.n for graph in self._terms}) <= 1

    def product(self, other):
        """Bilinear extension of the disjoint union of graphs."""
        terms = {}
        for left, a in self._terms.items():
            for right, b in other._terms.items():
                graph = left.disjoint_union(right)
                terms[graph] = terms.get(graph, 0) + a * b
        return GraphVec(terms)

    def __mul__(self, other):
        if isinstance(other, GraphVec):
            return self.product(other)
        return super().__mul__(other)


# =========================
#   ENUMERATION AND LABELS
# =========================

@lru_cache(maxsize=8)
def _acyclic_graphs(n):
    pairs = list(combinations(range(1, n + 1), 2))
    graphs = []
    # each unordered pair is absent, forward or backward
    for choice in product((None, False, True), repeat=len(pairs)):
        edges = [
            (v, u) if flipped else (u, v)
            for (u, v), flipped in zip(pairs, choice)
            if flipped is not None
        ]
        try:
            graphs.append(Digraph(n, frozenset(edges)))
        except CyclicGraphError:
            continue
    graphs.sort(key=lambda g: g.sort_key)
    logger.debug("enumerated %d acyclic digraphs on %d vertices", len(graphs), n)
    return tuple(graphs)


@lru_cache(maxsize=8)
def _bipartite_graphs(n):
    vertices = range(1, n + 1)
    graphs = [Digraph(n)]
    # a nonempty edge set is fixed by its tail set and each tail's nonempty out-neighbourhood
    for size in range(1, n):
        for tails in combinations(vertices, size):
            heads = [v for v in vertices if v not in tails]
            neighbourhoods = [
                subset
                for k in range(1, len(heads) + 1)
                for subset in combinations(heads, k)
            ]
            for choice in product(neighbourhoods, repeat=size):
                edges = frozenset((u, v) for u, out in zip(tails, choice) for v in out)
                graphs.append(Digraph(n, edges))
    graphs.sort(key=lambda g: g.sort_key)
    logger.debug("enumerated %d bipartite digraphs on %d vertices", len(graphs), n)
    return tuple(graphs)


def _check_cap(n, cap, default, what):
    cap = default if cap is None else cap
    if n > cap:
        logger.info("refusing %s on %d vertices (cap %d)", what, n, cap)
        raise CapExceeded(what, n, cap)


def enumerate_acyclic(n, cap=None):
    _check_cap(n, cap, gessel_settings().acyclic_cap, 'acyclic enumeration')
    return iter(_acyclic_graphs(n))


def enumerate_bipartite(n, cap=None):
    """Labeled bipartite digraphs on ``{1..n}`` (no vertex is both a head and a tail)."""
    _check_cap(n, cap, gessel_settings().bipartite_cap, 'bipartite enumeration')
    return iter(_bipartite_graphs(n))


@lru_cache(maxsize=65536)
def _canonical(graph):
    best = None
    for perm in permutations(graph.vertices):
        edges = tuple(sorted((perm[u - 1], perm[v - 1]) for u, v in graph.edges))
        if best is None or edges < best:
            best = edges
    return Digraph(graph.n, frozenset(best or ()))


def canonical_label(graph, cap=None):
    cap = gessel_settings().label_cap if cap is None else cap
    if graph.n > cap:
        raise CapExceeded('canonical labeling', graph.n, cap)
    return _canonical(graph)


# =========================
#   CYCLES AND CIE
# =========================

@dataclass(frozen=True)
class UndirectedCycle:
    """
    Simple cycle of the underlying undirected graph with a traversal direction.

    ``plus_edges`` are the traversed pairs ``(x_i, x_{i+1})`` that are edges;
    ``minus_edges`` are the traversed pairs whose edge points backwards.
    """

    vertices: tuple
    plus_edges: frozenset
    minus_edges: frozenset

    @classmethod
    def through(cls, graph, vertices):
        vertices = tuple(int(x) for x in vertices)
        if len(vertices) < 3 or len(set(vertices)) != len(vertices):
            raise NotACycleError(f"{vertices} is not a simple cycle")
        plus, minus = set(), set()
        for i, x in enumerate(vertices):
            y = vertices[(i + 1) % len(vertices)]
            if (x, y) in graph.edges:
                plus.add((x, y))
            elif (y, x) in graph.edges:
                minus.add((x, y))
            else:
                raise NotACycleError(f"{x} and {y} are not adjacent in {graph}")
        return cls(vertices, frozenset(plus), frozenset(minus))

    def __len__(self):
        return len(self.vertices)


def _rotate_to_min(cycle):
    start = cycle.index(min(cycle))
    return tuple(cycle[start:] + cycle[:start])


def undirected_cycles(graph, max_len=None):
    """
    Simple cycles of the undirected version of ``graph``, each in both
    traversal directions, rotated to start at the smallest vertex.
    """
    max_len = graph.n if max_len is None else max_len
    seen = set()
    found = []
    for cycle in nx.simple_cycles(graph.undirected(), length_bound=max_len):
        if len(cycle) < 3:
            continue
        for oriented in (list(cycle), list(reversed(cycle))):
            vertices = _rotate_to_min(oriented)
            if vertices in seen:
                continue
            seen.add(vertices)
            found.append(UndirectedCycle.through(graph, vertices))
    found.sort(key=lambda c: (len(c), c.vertices))
    return iter(found)


def cie(graph, cycle):
    """Signed sum of ``graph`` minus every subset of the forward edges of ``cycle``."""
    if UndirectedCycle.through(graph, cycle.vertices) != cycle:
        raise NotACycleError(f"{cycle.vertices} does not match the edges of {graph}")
    plus = sorted(cycle.plus_edges)
    terms = {}
    for size in range(len(plus) + 1):
        for removed in combinations(plus, size):
            terms[graph.without(removed)] = (-1) ** size
    return GraphVec(terms)
