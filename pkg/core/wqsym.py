"""
Word quasi-symmetric functions in the M, L, F and N bases, their commutative
images in QSym, and exact rank/solve utilities.

M and N are indexed by set compositions (N through the semi-length view of the
composition); L and F are indexed by descent-starred permutations.
"""

import enum
import logging
from fractions import Fraction
from itertools import combinations, product

import sympy
from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from .errors import BasisMismatchError, NotInSpanError
from .setcomp import (
    DStarPerm,
    IntegerComposition,
    SetComposition,
    adjacent_coarsenings,
    delta_of_word,
    enumerate_setcomps,
    from_dstar,
    phi_c,
    split_semilength,
    to_dstar,
)
from .sparse import SparseVector

logger = logging.getLogger(__name__)


class Basis(str, enum.Enum):
    M = 'M'
    L = 'L'
    F = 'F'
    N = 'N'

    @property
    def key_type(self):
        return DStarPerm if self in (Basis.L, Basis.F) else SetComposition


class WqsymVec(SparseVector):
    def __init__(self, basis, degree, terms=None):
        self.basis = Basis(basis)
        self.degree = int(degree)
        super().__init__(terms)

    def _shape(self):
        return (self.basis, self.degree)

    def _check_key(self, key):
        if not isinstance(key, self.basis.key_type):
            raise BasisMismatchError(f"{key!r} is not a key of the {self.basis.value} basis")
        if key.n != self.degree:
            raise BasisMismatchError(f"{key} has degree {key.n}, expected {self.degree}")

    @classmethod
    def monomial(cls, basis, key, coeff=1):
        return cls(basis, key.n, {key: coeff})


class QsymVec(SparseVector):
    def __init__(self, degree, terms=None):
        self.degree = int(degree)
        super().__init__(terms)

    def _shape(self):
        return (self.degree,)

    def _check_key(self, key):
        if not isinstance(key, IntegerComposition) or key.degree != self.degree:
            raise BasisMismatchError(f"{key!r} is not a composition of {self.degree}")


# =========================
#   BASIS CHANGES
# =========================

def l_in_m(perm):
    """L expands as the sum of M over the adjacent coarsenings of its set composition."""
    composition = from_dstar(perm)
    return WqsymVec(Basis.M, perm.n, {J: 1 for J in adjacent_coarsenings(composition)})


def _signed_star_subsets(perm, basis):
    terms = {}
    stars = sorted(perm.stars)
    for size in range(len(stars) + 1):
        for subset in combinations(stars, size):
            terms[DStarPerm(perm.word, frozenset(subset))] = (-1) ** size
    return WqsymVec(basis, perm.n, terms)


def f_in_l(perm):
    return _signed_star_subsets(perm, Basis.L)


def m_in_l(composition):
    terms = {}
    for coarser in adjacent_coarsenings(composition):
        terms[to_dstar(coarser)] = (-1) ** (len(composition) - len(coarser))
    return WqsymVec(Basis.L, composition.n, terms)


def l_in_f(perm):
    """The F to L expansion is an involution up to the basis tag."""
    return _signed_star_subsets(perm, Basis.F)


def _expand(v, target, expansion):
    terms = {}
    for key, coeff in v.items():
        for image, image_coeff in expansion(key).items():
            terms[image] = terms.get(image, 0) + coeff * image_coeff
    return WqsymVec(target, v.degree, terms)


def to_m(v):
    if v.basis is Basis.M:
        return v
    if v.basis is Basis.L:
        return _expand(v, Basis.M, l_in_m)
    if v.basis is Basis.F:
        return to_m(_expand(v, Basis.L, f_in_l))
    from .bipartite import n_in_m

    return _expand(v, Basis.M, lambda key: n_in_m(split_semilength(key)))


def to_basis(v, basis):
    """Re-express ``v`` in ``basis``; N goes through an exact solve against the N family."""
    basis = Basis(basis)
    if v.basis is basis:
        return v
    in_m = to_m(v)
    if basis is Basis.M:
        return in_m
    in_l = _expand(in_m, Basis.L, m_in_l)
    if basis is Basis.L:
        return in_l
    if basis is Basis.F:
        return _expand(in_l, Basis.F, l_in_f)
    family_keys = list(enumerate_setcomps(v.degree))
    family = [WqsymVec.monomial(Basis.N, key) for key in family_keys]
    coefficients = solve_in_family(in_m, family)
    return WqsymVec(Basis.N, v.degree, zip(family_keys, coefficients))


def project_qsym(v):
    in_m = to_m(v)
    return QsymVec(in_m.degree, [(phi_c(key), coeff) for key, coeff in in_m.items()])


# =========================
#   TRUNCATED EVALUATION
# =========================

def _satisfies(basis, key, word):
    if basis is Basis.M:
        if not word:
            return key.n == 0
        return delta_of_word(word) == key
    if basis in (Basis.L, Basis.F):
        for x in range(1, key.n):
            a = word[key.word[x - 1] - 1]
            b = word[key.word[x] - 1]
            if x in key.stars:
                ok = a == b if basis is Basis.L else a < b
            else:
                ok = a <= b
            if not ok:
                return False
        return True
    view = split_semilength(key)
    for m, (i_block, j_block) in enumerate(zip(view.i_blocks, view.j_blocks)):
        if any(word[x - 1] > word[y - 1] for x in i_block for y in j_block):
            return False
        if m + 1 < view.r:
            upper = view.i_blocks[m + 1]
            if any(word[x - 1] >= word[y - 1] for x in j_block for y in upper):
                return False
    return True


def word_expansion(v, m):
    """
    Coefficients of ``v`` on the words of ``{1..m}^n``, obtained from the
    defining inequalities of each basis element.
    """
    out = {}
    for word in product(range(1, m + 1), repeat=v.degree):
        total = sum(
            (coeff for key, coeff in v.items() if _satisfies(v.basis, key, word)),
            Fraction(0),
        )
        if total:
            out[word] = total
    return out


def qsym_polynomial(q, m):
    """Truncation of a QSym element to ``x_1..x_m`` as a ``sympy.Poly``."""
    xs = sympy.symbols(f'x1:{m + 1}')
    expr = sympy.Integer(0)
    for composition, coeff in q.items():
        parts = composition.parts
        for chosen in combinations(range(m), len(parts)):
            term = sympy.Rational(coeff.numerator, coeff.denominator)
            for index, exponent in zip(chosen, parts):
                term *= xs[index] ** exponent
            expr += term
    return sympy.Poly(expr, *xs, domain=QQ)


# =========================
#   EXACT LINEAR ALGEBRA
# =========================

def _qq(value):
    return QQ(value.numerator, value.denominator)


def _fraction(element):
    return Fraction(int(element.numerator), int(element.denominator))


def _shared_degree(vectors):
    degrees = {v.degree for v in vectors}
    if len(degrees) > 1:
        raise BasisMismatchError(f"vectors of mixed degrees {sorted(degrees)}")


def coefficient_matrix(vectors, keys=None):
    """Sparse matrix over QQ with one column per vector, rows indexed by M-basis keys."""
    in_m = [to_m(v) for v in vectors]
    if keys is None:
        keys = sorted({key for v in in_m for key in v.keys()}, key=str)
    row_of = {key: i for i, key in enumerate(keys)}
    rows = {}
    for j, v in enumerate(in_m):
        for key, coeff in v.items():
            rows.setdefault(row_of[key], {})[j] = _qq(coeff)
    return DomainMatrix(rows, (len(keys), len(in_m)), QQ), keys


def rank_over_rationals(vectors):
    vectors = list(vectors)
    _shared_degree(vectors)
    if not vectors:
        return 0
    matrix, keys = coefficient_matrix(vectors)
    if not keys:
        return 0
    rank = matrix.rank()
    logger.debug("rank of %d vectors over %d keys: %d", len(vectors), len(keys), rank)
    return rank


def solve_in_family(target, family):
    """Coefficients ``c`` with ``sum(c_i * family[i]) == target``; raises ``NotInSpanError``."""
    family = list(family)
    _shared_degree(family + [target])
    matrix, keys = coefficient_matrix(family + [target])
    if not keys:
        return [Fraction(0)] * len(family)
    reduced, pivots = matrix.rref()
    if len(family) in pivots:
        raise NotInSpanError("target is not in the span of the family")
    solution = [Fraction(0)] * len(family)
    entries = reduced.to_list()
    for row, column in enumerate(pivots):
        solution[column] = _fraction(entries[row][len(family)])
    return solution


def basis_determinant(family):
    """Determinant of a square family written in the M basis of its degree."""
    family = list(family)
    _shared_degree(family)
    degree = family[0].degree if family else 0
    keys = list(enumerate_setcomps(degree))
    if len(keys) != len(family):
        raise BasisMismatchError(f"{len(family)} vectors cannot form a basis of dimension {len(keys)}")
    matrix, _ = coefficient_matrix(family, keys)
    return _fraction(matrix.to_dense().det())
