from fractions import Fraction

import sympy
from django.test import SimpleTestCase
from hypothesis import given, settings
from hypothesis import strategies as st

from core.bases import f_to_l_report
from core.bipartite import n_in_m
from core.errors import BasisMismatchError, NotInSpanError
from core.setcomp import DStarPerm, IntegerComposition, SetComposition, enumerate_setcomps, split_semilength, to_dstar
from core.wqsym import (
    Basis,
    QsymVec,
    WqsymVec,
    basis_determinant,
    f_in_l,
    l_in_m,
    project_qsym,
    qsym_polynomial,
    rank_over_rationals,
    solve_in_family,
    to_basis,
    to_m,
    word_expansion,
)

DEGREE_THREE = list(enumerate_setcomps(3))

m_vectors = st.dictionaries(
    st.sampled_from(DEGREE_THREE), st.integers(min_value=-3, max_value=3), max_size=5,
).map(lambda terms: WqsymVec(Basis.M, 3, terms))


def m(text):
    return WqsymVec.monomial(Basis.M, SetComposition.parse(text))


class VectorTests(SimpleTestCase):
    def test_zero_coefficients_are_dropped(self):
        vec = m('1|2') + m('12') - m('1|2')
        self.assertEqual(len(vec), 1)
        self.assertEqual(vec[SetComposition.parse('12')], 1)
        self.assertTrue((vec - vec).is_zero())

    def test_scalar_multiples(self):
        vec = Fraction(1, 2) * m('12')
        self.assertEqual((vec * 4)[SetComposition.parse('12')], 2)

    def test_mixing_bases_is_rejected(self):
        with self.assertRaises(BasisMismatchError):
            m('12') + WqsymVec.monomial(Basis.L, DStarPerm.parse('2*1'))
        with self.assertRaises(BasisMismatchError):
            m('12') + m('123')
        with self.assertRaises(BasisMismatchError):
            WqsymVec(Basis.M, 2, {DStarPerm.parse('21'): 1})


class BasisChangeTests(SimpleTestCase):
    def test_l_expands_over_adjacent_coarsenings(self):
        image = l_in_m(DStarPerm.parse('5*16*4*32'))
        self.assertEqual(
            [str(key) for key in image.keys()],
            ['123456', '13456|2', '15|2346', '15|346|2'],
        )
        self.assertTrue(all(c == 1 for _, c in image.items()))

    def test_f_in_l_signs(self):
        image = f_in_l(DStarPerm.parse('2*1'))
        self.assertEqual(image[DStarPerm.parse('21')], 1)
        self.assertEqual(image[DStarPerm.parse('2*1')], -1)

    def test_f_in_l_is_triangular_with_signed_diagonal(self):
        for n in range(1, 4):
            report = f_to_l_report(n)
            with self.subTest(n=n):
                self.assertTrue(report.unitriangular)
                self.assertEqual(abs(report.determinant), 1)
        for text, sign in (('321', 1), ('3*21', -1), ('3*2*1', 1)):
            perm = DStarPerm.parse(text)
            self.assertEqual(f_in_l(perm)[perm], sign)

    def test_word_expansion_is_basis_independent(self):
        for composition in DEGREE_THREE:
            vec = WqsymVec.monomial(Basis.M, composition)
            words = word_expansion(vec, 3)
            for basis in (Basis.L, Basis.F, Basis.N):
                with self.subTest(composition=str(composition), basis=basis.value):
                    self.assertEqual(word_expansion(to_basis(vec, basis), 3), words)

    def test_n_monomial_in_m(self):
        for composition in DEGREE_THREE:
            with self.subTest(composition=str(composition)):
                self.assertEqual(
                    to_m(WqsymVec.monomial(Basis.N, composition)),
                    n_in_m(split_semilength(composition)),
                )

    @given(m_vectors, st.sampled_from([Basis.L, Basis.F, Basis.N]))
    @settings(deadline=None, max_examples=30)
    def test_changes_of_basis_are_invertible(self, vec, basis):
        self.assertEqual(to_basis(to_basis(vec, basis), Basis.M), vec)


class QsymTests(SimpleTestCase):
    def test_projection_keeps_block_sizes(self):
        image = project_qsym(m('15|346|2') + m('2|346|15'))
        self.assertEqual(image[IntegerComposition.parse('231')], 1)
        self.assertEqual(image[IntegerComposition.parse('132')], 1)

    def test_truncated_polynomial(self):
        x1, x2 = sympy.symbols('x1 x2')
        poly = qsym_polynomial(QsymVec(3, {IntegerComposition.parse('12'): 1}), 2)
        self.assertEqual(poly.as_expr(), x1 * x2 ** 2)


class ExactLinearAlgebraTests(SimpleTestCase):
    def test_rank_ignores_repeats(self):
        family = [WqsymVec.monomial(Basis.M, c) for c in DEGREE_THREE]
        self.assertEqual(rank_over_rationals(family + family[:4]), 13)
        self.assertEqual(rank_over_rationals([]), 0)

    def test_solve_recovers_coefficients(self):
        keys = [to_dstar(c) for c in enumerate_setcomps(2)]
        family = [WqsymVec.monomial(Basis.L, key) for key in keys]
        target = 2 * family[0] - family[2]
        self.assertEqual(solve_in_family(target, family), [2, 0, -1])

    def test_solve_outside_the_span(self):
        with self.assertRaises(NotInSpanError):
            solve_in_family(m('2|1'), [m('1|2')])

    def test_triangular_families_have_unit_determinant(self):
        for basis in (Basis.M, Basis.L, Basis.F):
            keys = [c if basis is Basis.M else to_dstar(c) for c in DEGREE_THREE]
            with self.subTest(basis=basis.value):
                self.assertEqual(abs(basis_determinant([WqsymVec.monomial(basis, k) for k in keys])), 1)

    def test_determinant_needs_a_square_family(self):
        with self.assertRaises(BasisMismatchError):
            basis_determinant([m('1|2')])
