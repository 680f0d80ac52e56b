"""
Change-of-basis checks for the four triangular families of a degree:
L in M, F in L, the images of ``G_I`` in F and the images of ``B_(I,J)`` in N.
"""

import logging
from dataclasses import dataclass

from .bipartite import graph_BIJ, n_expansion, precedes
from .gamma import gamma_GI_in_F, gamma_nc, graph_GI
from .setcomp import enumerate_setcomps, split_semilength, to_dstar
from .wqsym import Basis, WqsymVec, basis_determinant, f_in_l, l_in_m, to_basis

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FamilyReport:
    family: str
    degree: int
    size: int
    unitriangular: bool
    determinant: int


def _is_strict_coarsening(coarse, fine):
    if len(coarse) >= len(fine):
        return False
    return all(any(block <= big for big in coarse.blocks) for block in fine.blocks)


def _triangular(index, expansion, diagonal, below, leading=lambda item: 1):
    """
    ``expansion(i)`` has coefficient ``leading(i)`` on ``diagonal(i)`` and
    otherwise only keys ``k`` with ``below(i, k)``.
    """
    for item in index:
        vec = expansion(item)
        if vec.coefficient(diagonal(item)) != leading(item):
            return False
        for key in vec.keys():
            if key != diagonal(item) and not below(item, key):
                return False
    return True


def l_to_m_report(n):
    compositions = list(enumerate_setcomps(n))
    unitriangular = _triangular(
        compositions,
        lambda I: l_in_m(to_dstar(I)),
        lambda I: I,
        lambda I, J: _is_strict_coarsening(J, I),
    )
    family = [WqsymVec.monomial(Basis.L, to_dstar(I)) for I in compositions]
    return FamilyReport('L in M', n, len(family), unitriangular, int(basis_determinant(family)))


def f_to_l_report(n):
    perms = [to_dstar(I) for I in enumerate_setcomps(n)]
    unitriangular = _triangular(
        perms,
        f_in_l,
        lambda p: p,
        lambda p, q: q.word == p.word and q.stars < p.stars,
        # F_(w,D) carries (-1)^|D| on its own L term
        leading=lambda p: (-1) ** len(p.stars),
    )
    family = [WqsymVec.monomial(Basis.F, p) for p in perms]
    return FamilyReport('F in L', n, len(family), unitriangular, int(basis_determinant(family)))


def gi_to_f_report(n):
    compositions = list(enumerate_setcomps(n))

    def expansion(I):
        image = to_basis(gamma_nc(graph_GI(I)), Basis.F)
        if image != gamma_GI_in_F(I):
            logger.warning("image of G_%s disagrees with its MP expansion", I)
        return image

    unitriangular = _triangular(
        compositions,
        expansion,
        to_dstar,
        lambda I, p: len(p.stars) < len(to_dstar(I).stars),
    )
    family = [gamma_nc(graph_GI(I)) for I in compositions]
    return FamilyReport('G_I in F', n, len(family), unitriangular, int(basis_determinant(family)))


def bij_to_n_report(n):
    compositions = list(enumerate_setcomps(n))

    def expansion(K):
        image = to_basis(gamma_nc(graph_BIJ(split_semilength(K))), Basis.N)
        if image != n_expansion(graph_BIJ(split_semilength(K))):
            logger.warning("image of B_%s disagrees with its N expansion", split_semilength(K))
        return image

    unitriangular = _triangular(
        compositions,
        expansion,
        lambda K: K,
        lambda K, L: precedes(split_semilength(K), split_semilength(L)),
    )
    family = [gamma_nc(graph_BIJ(split_semilength(K))) for K in compositions]
    return FamilyReport('B_(I,J) in N', n, len(family), unitriangular, int(basis_determinant(family)))


def family_reports(n):
    return [
        report(n)
        for report in (l_to_m_report, f_to_l_report, gi_to_f_report, bij_to_n_report)
    ]
