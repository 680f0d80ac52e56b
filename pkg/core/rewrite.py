"""
Rewriting graphs modulo cyclic inclusion-exclusion.

Every acyclic graph is congruent to a combination of canonical graphs
``G_I``, and every bipartite graph to a combination of ``B_(I,J)``. The
rewriting only ever adds edges, so it terminates; results are memoized per
labeled graph.
"""

import enum
import logging
from dataclasses import dataclass

from joblib import Parallel, delayed
from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from .bipartite import graph_BIJ
from .conf import gessel_settings
from .digraph import GraphVec, cie, enumerate_acyclic, enumerate_bipartite, undirected_cycles
from .errors import GesselError, NotBipartiteError
from .gamma import gamma_nc, graph_GI
from .setcomp import SemiLengthView, SetComposition

logger = logging.getLogger(__name__)


class CycleMode(str, enum.Enum):
    ALL = 'all'
    # cycles with one or two forward edges already span the kernel
    SMALL = 'small'


@dataclass(frozen=True)
class RewriteStep:
    rule: str
    graph: object
    added: tuple
    replacement: tuple

    def describe(self):
        added = ' '.join(f"({u},{v})" for u, v in self.added)
        parts = ' '.join(f"{'+' if c > 0 else '-'}{abs(c)}*{g}" for c, g in self.replacement)
        return f"{self.rule}: {self.graph} add {added} -> {parts}"


# =========================
#   IDENTIFICATION
# =========================

def identify_GI(graph):
    """
    The set composition ``I`` with ``graph_GI(I) == graph``, or ``None``.

    In ``G_I`` two vertices share a block exactly when they have the same
    predecessors, and later blocks have more predecessors.
    """
    groups = {}
    for v in graph.vertices:
        groups.setdefault(graph.predecessors(v), set()).add(v)
    ordered = sorted(groups.items(), key=lambda item: len(item[0]))
    candidate = SetComposition(tuple(block for _, block in ordered))
    return candidate if graph_GI(candidate) == graph else None


def identify_BIJ(graph, bipartition=None):
    """The view ``(I, J)`` with ``graph_BIJ((I, J)) == graph`` when neighbourhoods are nested, else ``None``."""
    if not graph.is_bipartite():
        raise NotBipartiteError(f"{graph} is not bipartite")
    left, right = bipartition or graph.bipartition()
    groups = {}
    for v in left:
        groups.setdefault(graph.successors(v), set()).add(v)
    ordered = sorted(groups.items(), key=lambda item: -len(item[0]))
    for (outer, _), (inner, _) in zip(ordered, ordered[1:]):
        if not inner < outer:
            return None
    neighbourhoods = [n for n, _ in ordered] + [frozenset()]
    i_blocks = tuple(block for _, block in ordered)
    j_blocks = tuple(neighbourhoods[k] - neighbourhoods[k + 1] for k in range(len(ordered)))
    if frozenset().union(*j_blocks) != frozenset(right):
        return None
    view = SemiLengthView(i_blocks, j_blocks)
    return view if graph_BIJ(view) == graph else None


# =========================
#   REDUCERS
# =========================

def _combine(replacement, reduce_one):
    terms = {}
    for coeff, graph in replacement:
        for image, value in reduce_one(graph).items():
            terms[image] = terms.get(image, 0) + coeff * value
    return {graph: coeff for graph, coeff in terms.items() if coeff}


class _Reducer:
    """
    Memoized rewriting. The memo maps a labeled graph to its reduced terms;
    entries are written once and concurrent writers store equal values.
    """

    memo_limit = 1 << 16

    def __init__(self, trace=None):
        self._memo = {}
        self.trace = trace

    def clear(self):
        self._memo.clear()

    def reduce(self, graph):
        return GraphVec(self._reduce(graph))

    def _reduce(self, graph):
        cached = self._memo.get(graph)
        if cached is None:
            cached = self._rewrite(graph)
            if len(self._memo) >= self.memo_limit:
                self._memo.clear()
            self._memo[graph] = cached
        return cached

    def _emit(self, step):
        logger.debug(step.describe())
        if self.trace is not None:
            self.trace(step)

    def _rewrite(self, graph):
        raise NotImplementedError


class GIReducer(_Reducer):
    def _rewrite(self, graph):
        if identify_GI(graph) is not None:
            return {graph: 1}
        missing = _first_transitivity_defect(graph)
        if missing is not None:
            closed = graph.with_edges([missing])
            self._emit(RewriteStep('transitive-edge', graph, (missing,), ((1, closed),)))
            return self._reduce(closed)
        x, y, z = _first_incomparability_defect(graph)
        fuller = graph.with_edges([(x, y), (y, z)])
        replacement = (
            (-1, fuller),
            (1, fuller.without([(x, y)])),
            (1, fuller.without([(y, z)])),
        )
        self._emit(RewriteStep('incomparable-chain', graph, ((x, y), (y, z)), replacement))
        return _combine(replacement, self._reduce)


class BIJReducer(_Reducer):
    def __init__(self, bipartition, trace=None):
        super().__init__(trace)
        self.bipartition = bipartition

    def _rewrite(self, graph):
        if identify_BIJ(graph, self.bipartition) is not None:
            return {graph: 1}
        v, v2, w, w2 = _first_crossing(graph, *self.bipartition)
        fuller = graph.with_edges([(v, w2), (v2, w)])
        replacement = (
            (-1, fuller),
            (1, fuller.without([(v, w2)])),
            (1, fuller.without([(v2, w)])),
        )
        self._emit(RewriteStep('crossing', graph, ((v, w2), (v2, w)), replacement))
        return _combine(replacement, self._reduce)


def _first_transitivity_defect(graph):
    missing = [
        (x, z)
        for x, y in graph.edges
        for z in graph.successors(y)
        if (x, z) not in graph.edges
    ]
    return min(missing, default=None)


def _first_incomparability_defect(graph):
    """Least ``(x, y, z)`` with ``y`` incomparable to ``x`` and ``z`` while ``x -> z``; the graph is transitive."""
    def incomparable(a, b):
        return a != b and (a, b) not in graph.edges and (b, a) not in graph.edges

    triples = [
        (x, y, z)
        for x, z in graph.edges
        for y in graph.vertices
        if incomparable(x, y) and incomparable(y, z)
    ]
    if not triples:
        raise GesselError(f"{graph} is transitive with an equivalence incomparability but is not canonical")
    return min(triples)


def _first_crossing(graph, left, right):
    crossings = [
        (v, v2, w, w2)
        for v, w in graph.edges
        for v2, w2 in graph.edges
        if v != v2 and (v, w2) not in graph.edges and (v2, w) not in graph.edges
    ]
    return min(crossings)


_shared_reducer = GIReducer()


def reduce_to_GI(graph, trace=None):
    """Combination of canonical graphs ``G_I`` congruent to ``graph`` modulo CIE."""
    reducer = _shared_reducer if trace is None else GIReducer(trace)
    return reducer.reduce(graph)


def reduce_bipartite_to_BIJ(graph, trace=None):
    if not graph.is_bipartite():
        raise NotBipartiteError(f"{graph} is not bipartite")
    return BIJReducer(graph.bipartition(), trace).reduce(graph)


# =========================
#   KERNEL
# =========================

def kernel_check(vec):
    """True iff the noncommutative image of ``vec`` vanishes."""
    return gamma_nc(vec).is_zero()


def _cie_rows(graphs, index, mode):
    rows = []
    for graph in graphs:
        for cycle in undirected_cycles(graph):
            if mode is CycleMode.SMALL and len(cycle.plus_edges) > 2:
                continue
            element = cie(graph, cycle)
            rows.append(tuple(sorted((index[g], int(c)) for g, c in element.items())))
    return rows


def cie_span_rank(n, mode=CycleMode.ALL, bipartite=False, threads=None, cap=None):
    """Rank over QQ of every CIE element on ``{1..n}`` in the labeled-graph basis."""
    mode = CycleMode(mode)
    threads = threads or gessel_settings().threads
    source = enumerate_bipartite(n, cap) if bipartite else enumerate_acyclic(n, cap)
    graphs = list(source)
    index = {graph: i for i, graph in enumerate(graphs)}
    shards = [graphs[i::threads] for i in range(threads)]
    found = Parallel(n_jobs=threads, prefer='threads')(
        delayed(_cie_rows)(shard, index, mode) for shard in shards
    )
    rows = sorted({row for shard_rows in found for row in shard_rows})
    if not rows:
        return 0
    matrix = DomainMatrix(
        {i: {j: QQ(c) for j, c in row} for i, row in enumerate(rows)},
        (len(rows), len(graphs)),
        QQ,
    )
    rank = matrix.rank()
    logger.debug(
        "CIE span on %d vertices (%s, bipartite=%s): %d generators, rank %d",
        n, mode.value, bipartite, len(rows), rank,
    )
    return rank
