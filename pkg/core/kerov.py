"""
Decorated bipartite graphs and expanders, the signed counts ``I_nu``, and
the graph combinations for normalized characters ``Ch_mu`` and free
cumulants ``R_k``.

``B(sigma, tau)`` is the cycle-incidence graph of a factorization: its left
side holds the cycles of ``tau``, its right side the cycles of ``sigma``, and
a cycle of ``tau`` points to each cycle of ``sigma`` it meets. Left vertices
carry the ``p`` alphabet and right vertices the ``q`` alphabet.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations

import networkx as nx
from joblib import Parallel, delayed
from sympy.combinatorics import Permutation
from sympy.utilities.iterables import multiset_permutations, partitions

from .conf import gessel_settings
from .digraph import Digraph, GraphVec, canonical_label
from .errors import CapExceeded, FormatError, NotBipartiteError, PreconditionError

logger = logging.getLogger(__name__)


# =========================
#   PARTITIONS
# =========================

@dataclass(frozen=True)
class Partition:
    parts: tuple

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p < 1 for p in parts):
            raise FormatError(f"partition parts must be positive: {parts}")
        if list(parts) != sorted(parts, reverse=True):
            raise FormatError(f"partition parts must not increase: {parts}")
        object.__setattr__(self, 'parts', parts)

    @classmethod
    def parse(cls, text):
        text = text.strip().strip('()')
        # several parts need commas; "11" is the single part 11
        try:
            parts = [int(p) for p in text.split(',')] if text else []
        except ValueError as exc:
            raise FormatError(f"cannot read partition {text!r}") from exc
        return cls(tuple(parts))

    @classmethod
    def antisorted(cls, values):
        return cls(tuple(sorted(values, reverse=True)))

    def __str__(self):
        return '(' + ','.join(map(str, self.parts)) + ')'

    def __len__(self):
        return len(self.parts)

    @property
    def size(self):
        return sum(self.parts)


def partitions_of(n):
    """Partitions of ``n`` in decreasing lexicographic order."""
    found = []
    for multiplicities in partitions(n):
        parts = []
        for part, count in sorted(dict(multiplicities).items(), reverse=True):
            parts.extend([part] * count)
        found.append(Partition(tuple(parts)))
    return sorted(found, key=lambda p: p.parts, reverse=True)


# =========================
#   EXPANDERS
# =========================

@dataclass(frozen=True)
class DecoratedGraph:
    """A bipartite graph with a positive weight on each left vertex; weights sum to ``|W|``."""

    graph: Digraph
    h: dict

    def __post_init__(self):
        if not self.graph.is_bipartite():
            raise NotBipartiteError(f"{self.graph} is not bipartite")
        left, right = self.graph.bipartition()
        if set(self.h) != set(left):
            raise PreconditionError("h must weight exactly the left vertices")
        if any(value < 1 for value in self.h.values()):
            raise PreconditionError("weights must be positive")
        if sum(self.h.values()) != len(right):
            raise PreconditionError(f"weights sum to {sum(self.h.values())}, not |W| = {len(right)}")

    @property
    def left(self):
        return self.graph.bipartition()[0]

    @property
    def right(self):
        return self.graph.bipartition()[1]

    @property
    def type(self):
        return Partition.antisorted(self.h.values())


def _expander(graph, components, left, h):
    for component in components:
        comp_left = sorted(v for v in component if v in left)
        comp_right = len(component) - len(comp_left)
        if sum(h[v] for v in comp_left) != comp_right:
            return False
        for size in range(1, len(comp_left)):
            for subset in combinations(comp_left, size):
                reached = frozenset().union(*(graph.successors(v) for v in subset))
                if len(reached) <= sum(h[v] for v in subset):
                    return False
    return True


def is_expander(decorated):
    """Every component satisfies ``|N(U)| > h(U)`` for each nonempty proper subset ``U`` of its left side."""
    graph = decorated.graph
    components = list(nx.connected_components(graph.undirected()))
    return _expander(graph, components, decorated.left, decorated.h)


def tree_expander_characterization(decorated):
    """On forests: each component has a single left vertex whose weight is its degree."""
    undirected = decorated.graph.undirected()
    if not nx.is_forest(undirected):
        raise PreconditionError(f"{decorated.graph} is not a forest")
    left = decorated.left
    for component in nx.connected_components(undirected):
        comp_left = [v for v in component if v in left]
        if len(comp_left) != 1:
            return False
        (v,) = comp_left
        if decorated.h[v] != undirected.degree(v):
            return False
    return True


@lru_cache(maxsize=65536)
def _signed_expander_count(graph, nu):
    if not graph.is_bipartite():
        raise NotBipartiteError(f"{graph} is not bipartite")
    left, right = graph.bipartition()
    if nu.size != len(right) or len(nu) != len(left):
        return 0
    components = list(nx.connected_components(graph.undirected()))
    ordered = sorted(left)
    count = sum(
        1 for values in multiset_permutations(list(nu.parts))
        if _expander(graph, components, left, dict(zip(ordered, values)))
    )
    return (-1) ** len(components) * count


def I_nu(vec, nu):
    """Signed count of expander decorations of type ``nu``, extended linearly."""
    nu = nu if isinstance(nu, Partition) else Partition(tuple(nu))
    total = Fraction(0)
    for graph, coeff in vec.items():
        total += coeff * _signed_expander_count(graph, nu)
    return int(total) if total.denominator == 1 else total


# =========================
#   FACTORIZATION GRAPHS
# =========================

def _cycles(perm):
    return sorted((frozenset(c) for c in perm.full_cyclic_form), key=min)


def graph_of_pair(sigma, tau):
    """Cycle-incidence graph: cycles of ``tau`` (left, by minimum) point to the cycles of ``sigma`` they meet."""
    left_cycles = _cycles(tau)
    right_cycles = _cycles(sigma)
    offset = len(left_cycles)
    edges = {
        (i, offset + j)
        for i, a in enumerate(left_cycles, 1)
        for j, b in enumerate(right_cycles, 1)
        if a & b
    }
    return Digraph(offset + len(right_cycles), frozenset(edges))


def _block_permutation(mu):
    image, start = [], 0
    for part in mu.parts:
        image.extend(range(start + 1, start + part))
        image.append(start)
        start += part
    return Permutation(image)


def _check_kerov_cap(k, cap):
    cap = gessel_settings().kerov_cap if cap is None else cap
    if k > cap:
        logger.info("refusing factorization enumeration in S_%d (cap %d)", k, cap)
        raise CapExceeded('factorization enumeration', k, cap)


def _accumulation_label(graph, label_cap):
    if graph.n <= label_cap:
        return canonical_label(graph)
    return graph


def _factorization_terms(sigmas, target, sign_of, keep):
    terms = []
    for image in sigmas:
        sigma = Permutation(list(image))
        tau = target * ~sigma
        if keep(sigma, tau):
            terms.append((sign_of(sigma, tau), graph_of_pair(sigma, tau)))
    return terms


def _sum_over_factorizations(k, target, sign_of, keep, threads, label_cap):
    threads = threads or gessel_settings().threads
    sigmas = list(permutations(range(k)))
    shards = [sigmas[i::threads] for i in range(threads)]
    found = Parallel(n_jobs=threads, prefer='threads')(
        delayed(_factorization_terms)(shard, target, sign_of, keep) for shard in shards
    )
    terms = {}
    for shard_terms in found:
        for sign, graph in shard_terms:
            graph = _accumulation_label(graph, label_cap)
            terms[graph] = terms.get(graph, 0) + sign
    return GraphVec(terms)


@lru_cache(maxsize=64)
def _g_ch(mu, threads, label_cap):
    target = _block_permutation(mu)
    r = len(mu)
    vec = _sum_over_factorizations(
        mu.size,
        target,
        sign_of=lambda sigma, tau: (-1) ** (tau.cycles + r),
        keep=lambda sigma, tau: True,
        threads=threads,
        label_cap=label_cap,
    )
    logger.debug("character graph for %s has %d terms", mu, len(vec))
    return vec


def G_Ch(mu, threads=None, cap=None):
    """Signed sum of ``B(sigma, tau)`` over the factorizations of a permutation of type ``mu``."""
    mu = mu if isinstance(mu, Partition) else Partition(tuple(mu))
    _check_kerov_cap(mu.size, cap)
    return _g_ch(mu, threads, gessel_settings().label_cap)


@lru_cache(maxsize=64)
def _g_r(k, threads, label_cap):
    # the factorizations of the long cycle with k + 1 cycles in total are forests
    target = Permutation(list(range(1, k)) + [0]) if k > 1 else Permutation([0])

    def keep(sigma, tau):
        return sigma.cycles + tau.cycles == k + 1

    vec = _sum_over_factorizations(
        k,
        target,
        sign_of=lambda sigma, tau: (-1) ** (tau.cycles + 1),
        keep=keep,
        threads=threads,
        label_cap=label_cap,
    )
    for graph in vec.keys():
        if not nx.is_forest(graph.undirected()):
            raise AssertionError(f"free cumulant graph {graph} is not a forest")
    return vec


def G_R(k_plus_1, threads=None, cap=None):
    if k_plus_1 < 2:
        raise PreconditionError("free cumulant graphs start at R_2")
    k = k_plus_1 - 1
    _check_kerov_cap(k, cap)
    return _g_r(k, threads, gessel_settings().label_cap)


def free_cumulant_product(indices, threads=None, cap=None):
    """Disjoint-union product of ``G_R(i)`` over ``indices``."""
    product = GraphVec({Digraph(0): 1})
    for index in indices:
        product = product * G_R(index, threads, cap)
    return product


# =========================
#   KEROV COEFFICIENTS
# =========================

def kerov_coeff(mu, nu, threads=None, cap=None):
    """Coefficient of ``R_{nu_1 + 1} R_{nu_2 + 1} ...`` in the Kerov polynomial ``K_mu``."""
    mu = mu if isinstance(mu, Partition) else Partition(tuple(mu))
    nu = nu if isinstance(nu, Partition) else Partition(tuple(nu))
    _check_kerov_cap(mu.size, cap)
    if nu.size > mu.size or not nu.parts:
        return 0
    return (-1) ** len(nu) * I_nu(G_Ch(mu, threads, cap), nu)


def admissible_nus(mu):
    mu = mu if isinstance(mu, Partition) else Partition(tuple(mu))
    return [nu for size in range(1, mu.size + 1) for nu in partitions_of(size)]


def kerov_polynomial(mu, threads=None, cap=None):
    """Nonzero coefficients of ``K_mu`` keyed by ``nu``."""
    out = {}
    for nu in admissible_nus(mu):
        coeff = kerov_coeff(mu, nu, threads, cap)
        if coeff:
            out[nu] = coeff
    return out
