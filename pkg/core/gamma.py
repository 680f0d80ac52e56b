"""
The Gessel morphisms: graphs to WQSym (noncommutative) and QSym
(commutative), the images of the canonical graphs ``G_I``, and the
two-alphabet version used for bipartite graphs.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, singledispatch
from itertools import permutations, product

import sympy
from sympy import ZZ

from .digraph import Digraph, GraphVec
from .errors import BasisMismatchError, BipartitionError
from .setcomp import DStarPerm, compatible_setcomps
from .wqsym import Basis, WqsymVec, project_qsym

logger = logging.getLogger(__name__)


# =========================
#   GAMMA
# =========================

@lru_cache(maxsize=16384)
def _gamma_nc_graph(graph):
    compatible = compatible_setcomps(graph.n, weak=graph.edges)
    return WqsymVec(Basis.M, graph.n, {composition: 1 for composition in compatible})


@singledispatch
def gamma_nc(graph):
    """
    Noncommutative image in the M basis: coefficient 1 on every set
    composition whose block index does not decrease along any edge.
    """
    raise TypeError(f"cannot apply gamma_nc to {type(graph).__name__}")


@gamma_nc.register
def _(graph: Digraph):
    return _gamma_nc_graph(graph)


@gamma_nc.register
def _(vec: GraphVec):
    if not vec.is_homogeneous:
        raise BasisMismatchError("gamma_nc needs graphs with a common vertex count")
    degree = vec.keys()[0].n if vec else 0
    terms = {}
    for graph, coeff in vec.items():
        for composition, value in _gamma_nc_graph(graph).items():
            terms[composition] = terms.get(composition, 0) + coeff * value
    return WqsymVec(Basis.M, degree, terms)


def gamma_unlabeled(graph):
    """Commutative image; accepts a ``Digraph`` or a homogeneous ``GraphVec``."""
    return project_qsym(gamma_nc(graph))


def nondecreasing_labelings(graph, m):
    """Every ``f: {1..n} -> {1..m}`` (as a tuple) with ``f(u) <= f(v)`` on each edge."""
    for f in product(range(1, m + 1), repeat=graph.n):
        if all(f[u - 1] <= f[v - 1] for u, v in graph.edges):
            yield f


# =========================
#   CANONICAL GRAPHS G_I
# =========================

def graph_GI(composition):
    edges = set()
    blocks = composition.blocks
    for j, lower in enumerate(blocks):
        for upper in blocks[j + 1:]:
            edges.update((x, y) for x in lower for y in upper)
    return Digraph(composition.n, frozenset(edges))


def mp_set(composition):
    """
    Descent-starred permutations obtained by writing each block in any order
    and starring the descents inside blocks only.
    """
    out = []
    for words in product(*(permutations(sorted(b)) for b in composition.blocks)):
        word, stars = [], set()
        for block_word in words:
            start = len(word) + 1
            word.extend(block_word)
            stars.update(
                start + i for i in range(len(block_word) - 1)
                if block_word[i] > block_word[i + 1]
            )
        out.append(DStarPerm(tuple(word), frozenset(stars)))
    return sorted(out, key=str)


def gamma_GI_in_F(composition):
    return WqsymVec(Basis.F, composition.n, {perm: 1 for perm in mp_set(composition)})


# =========================
#   TWO ALPHABETS
# =========================

@dataclass(frozen=True)
class BiPolynomial:
    """Polynomial in ``p_1..p_m, q_1..q_m`` keyed by exponent vectors."""

    m: int
    terms: dict

    def symbols(self):
        return sympy.symbols(f'p1:{self.m + 1}'), sympy.symbols(f'q1:{self.m + 1}')

    def items(self):
        return sorted(self.terms.items())

    def as_poly(self):
        p, q = self.symbols()
        return sympy.Poly.from_dict(
            {pe + qe: coeff for (pe, qe), coeff in self.terms.items()}, *p, *q, domain=ZZ
        )

    def specialize(self):
        """Image under ``p_i, q_i -> x_i``."""
        xs = sympy.symbols(f'x1:{self.m + 1}')
        merged = {}
        for (pe, qe), coeff in self.terms.items():
            key = tuple(a + b for a, b in zip(pe, qe))
            merged[key] = merged.get(key, 0) + coeff
        return sympy.Poly.from_dict(merged, *xs, domain=ZZ)

    def evaluate(self, p, q):
        total = Fraction(0)
        for (pe, qe), coeff in self.terms.items():
            value = Fraction(coeff)
            for base, exponent in zip(list(p) + list(q), pe + qe):
                value *= Fraction(base) ** exponent
            total += value
        return total


def _resolve_bipartition(graph, bipartition):
    if bipartition is None:
        left, right = graph.bipartition()
    else:
        left, right = (frozenset(side) for side in bipartition)
    if left & right or left | right != frozenset(graph.vertices):
        raise BipartitionError("V and W must partition the vertex set")
    for u, v in graph.edges:
        if u not in left or v not in right:
            raise BipartitionError(f"edge ({u}, {v}) does not go from V to W")
    return left, right


def delta_two_alphabet(graph, m, bipartition=None):
    left, right = _resolve_bipartition(graph, bipartition)
    terms = {}
    for f in nondecreasing_labelings(graph, m):
        pe, qe = [0] * m, [0] * m
        for v in left:
            pe[f[v - 1] - 1] += 1
        for w in right:
            qe[f[w - 1] - 1] += 1
        key = (tuple(pe), tuple(qe))
        terms[key] = terms.get(key, 0) + 1
    return BiPolynomial(m, terms)


def evaluate_delta(graph, p, q, bipartition=None):
    """
    Value of the two-alphabet image at ``(p, q)``, summing over labelings of
    ``V`` only: each ``w`` contributes ``q_j + ... + q_m`` from the largest
    label ``j`` among its in-neighbours.
    """
    left, right = _resolve_bipartition(graph, bipartition)
    m = len(p)
    tails = [Fraction(sum(q[j:])) for j in range(m)]
    left = sorted(left)
    parents = {w: graph.predecessors(w) for w in right}
    total = Fraction(0)
    for labels in product(range(m), repeat=len(left)):
        f = dict(zip(left, labels))
        value = Fraction(1)
        for v in left:
            value *= p[f[v]]
        for w in right:
            value *= tails[max((f[v] for v in parents[w]), default=0)]
        total += value
    return total
