"""
Bipartite canonical graphs ``B_(I,J)``, the edge-reversal graphs ``K^D`` and
``H_(I,J)``, and the multiplicity-free N expansion of bipartite graphs.

A set composition ``K`` is read through its semi-length view
``(I_1, J_1, ..., I_r, J_r)``; the view determines every graph here.
"""

import logging
from dataclasses import dataclass
from itertools import combinations

from .digraph import Digraph
from .errors import BipartitionError, NotBipartiteError, PreconditionError
from .setcomp import SemiLengthView, compatible_setcomps
from .wqsym import Basis, WqsymVec

logger = logging.getLogger(__name__)


def graph_BIJ(view):
    """Edges ``I_h x J_k`` for every ``h <= k``."""
    edges = set()
    for h, lower in enumerate(view.i_blocks):
        for upper in view.j_blocks[h:]:
            edges.update((x, y) for x in lower for y in upper)
    return Digraph(view.n, frozenset(edges))


def graph_HIJ(view):
    edges = set()
    for m, i_block in enumerate(view.i_blocks):
        for j_block in view.j_blocks[m:]:
            edges.update((x, y) for x in i_block for y in j_block)
    for m, j_block in enumerate(view.j_blocks):
        for i_block in view.i_blocks[m + 1:]:
            edges.update((y, x) for y in j_block for x in i_block)
    return Digraph(view.n, frozenset(edges))


def reverse_edges(left, right, reversed_edges):
    """Complete bipartite graph ``V x W`` with the edges of ``D`` turned around; may be cyclic."""
    left, right = frozenset(left), frozenset(right)
    reversed_edges = frozenset(reversed_edges)
    if not reversed_edges <= {(v, w) for v in left for w in right}:
        raise BipartitionError("D must be a subset of V x W")
    edges = {(w, v) if (v, w) in reversed_edges else (v, w) for v in left for w in right}
    return Digraph(len(left | right), frozenset(edges), allow_cycles=True)


def decompose_KD(left, right, reversed_edges):
    """
    Peel ``K^D`` into ``H_(I,J)``: ``I_m`` takes the remaining vertices of V
    with no reversed edge into the remaining W, then ``J_m`` takes the
    remaining vertices of W whose edges from the still unplaced part of V are
    all reversed. Returns ``None`` when a peel stalls (``K^D`` has a cycle).
    """
    left, right = frozenset(left), frozenset(right)
    reversed_edges = frozenset(reversed_edges)
    for w in right:
        if all((v, w) in reversed_edges for v in left):
            raise PreconditionError(f"every edge at {w} is reversed")
    i_blocks, j_blocks = [], []
    rest_left, rest_right = set(left), set(right)
    while rest_left:
        i_block = {
            v for v in rest_left
            if not any((v, w) in reversed_edges for w in rest_right)
        }
        if not i_block:
            return None
        rest_left -= i_block
        j_block = {
            w for w in rest_right
            if all((v, w) in reversed_edges for v in rest_left)
        }
        if not j_block and rest_left:
            return None
        rest_right -= j_block
        i_blocks.append(i_block)
        j_blocks.append(j_block)
    return SemiLengthView(tuple(i_blocks), tuple(j_blocks))


def _canonical_sides(graph):
    if not graph.is_bipartite():
        raise NotBipartiteError(f"{graph} has a vertex with both in- and out-edges")
    return graph.bipartition()


@dataclass(frozen=True)
class ReversalTerm:
    """One subset ``D`` of the non-edges and the view it peels to (``None`` if cyclic)."""

    reversed_edges: frozenset
    view: SemiLengthView | None


def nd_decomposition(graph):
    """Every ``D`` among the non-edges of ``V x W``, with its peeled view."""
    left, right = _canonical_sides(graph)
    non_edges = sorted((v, w) for v in left for w in right if (v, w) not in graph.edges)
    out = []
    for size in range(len(non_edges) + 1):
        for chosen in combinations(non_edges, size):
            chosen = frozenset(chosen)
            out.append(ReversalTerm(chosen, decompose_KD(left, right, chosen)))
    return out


def n_expansion(graph):
    """N-basis expansion of the image of a bipartite graph; every coefficient is 1."""
    terms = {}
    for term in nd_decomposition(graph):
        if term.view is not None:
            key = term.view.composition
            terms[key] = terms.get(key, 0) + 1
    return WqsymVec(Basis.N, graph.n, terms)


def n_support_condition(graph, view):
    """Whether ``view`` splits the canonical sides and never lowers the level along an edge."""
    left, right = _canonical_sides(graph)
    if view.left != left or view.right != right:
        return False
    return all(view.levels[x] <= view.levels[y] for x, y in graph.edges)


def n_in_m(view):
    weak, strict = [], []
    for m, (i_block, j_block) in enumerate(zip(view.i_blocks, view.j_blocks)):
        weak.extend((x, y) for x in i_block for y in j_block)
        if m + 1 < view.r:
            strict.extend((x, y) for x in j_block for y in view.i_blocks[m + 1])
    compatible = compatible_setcomps(view.n, weak=weak, strict=strict)
    return WqsymVec(Basis.M, view.n, {composition: 1 for composition in compatible})


def precedes(a, b):
    """
    Containment order on views: compare ``I_1, J_1, I_2, ...`` in turn; at
    the first difference ``a`` comes first when its ``I`` block is strictly
    smaller or its ``J`` block strictly larger.
    """
    sequence_a = [block for pair in zip(a.i_blocks, a.j_blocks) for block in pair]
    sequence_b = [block for pair in zip(b.i_blocks, b.j_blocks) for block in pair]
    for index, (x, y) in enumerate(zip(sequence_a, sequence_b)):
        if x == y:
            continue
        if index % 2 == 0:
            return x < y
        return x > y
    return len(sequence_a) < len(sequence_b)
