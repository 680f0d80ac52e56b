from itertools import combinations

from django.test import SimpleTestCase, tag

from core.bases import bij_to_n_report, f_to_l_report, family_reports, gi_to_f_report, l_to_m_report
from core.bipartite import (
    decompose_KD,
    graph_BIJ,
    graph_HIJ,
    n_expansion,
    n_in_m,
    n_support_condition,
    nd_decomposition,
    precedes,
    reverse_edges,
)
from core.digraph import Digraph, enumerate_bipartite
from core.errors import BipartitionError, NotBipartiteError, PreconditionError
from core.gamma import gamma_nc
from core.setcomp import SemiLengthView, SetComposition, enumerate_setcomps, split_semilength
from core.wqsym import Basis, to_basis, to_m

EXAMPLE_VIEW = SemiLengthView.parse('(26|5|3,4|17|)')

EXAMPLE_EXPANSION = sorted([
    '(26|5|3,4|17|)', '(26|5|3,4|1|7)', '(26|5|3,4|7|1)', '(26|35,4|17)',
    '(236|5,4|17)', '(256|3,147|)', '(256|3,14|7)', '(256|3,17|4)',
    '(256|3,47|1)', '(256|3,1|47)', '(256|3,4|17)', '(256|3,7|14)',
    '(2356,147)',
])


class CanonicalBipartiteGraphTests(SimpleTestCase):
    def test_example_edges(self):
        graph = graph_BIJ(EXAMPLE_VIEW)
        self.assertEqual(graph.edges, frozenset({
            (2, 4), (6, 4), (2, 1), (2, 7), (6, 1), (6, 7), (5, 1), (5, 7),
        }))
        self.assertEqual(graph.bipartition(), (frozenset({2, 3, 5, 6}), frozenset({1, 4, 7})))

    def test_h_graph_has_both_directions(self):
        graph = graph_HIJ(SemiLengthView.parse('(14|26,3|5)'))
        self.assertIn((1, 3), graph.edges)
        self.assertIn((3, 2), graph.edges)
        self.assertIn((2, 5), graph.edges)
        self.assertNotIn((2, 3), graph.edges)

    def test_reversal_may_be_cyclic(self):
        graph = reverse_edges({1, 2}, {3, 4}, {(1, 3), (2, 4)})
        self.assertFalse(graph.is_acyclic)
        with self.assertRaises(BipartitionError):
            reverse_edges({1}, {2}, {(2, 1)})


class DecompositionTests(SimpleTestCase):
    def test_peeling_example(self):
        view = decompose_KD({1, 2, 4, 6}, {3, 5}, {(2, 3), (6, 3)})
        self.assertEqual(view, SemiLengthView.parse('(14|26,3|5)'))
        self.assertEqual(
            reverse_edges({1, 2, 4, 6}, {3, 5}, {(2, 3), (6, 3)}),
            graph_HIJ(view),
        )

    def test_cyclic_reversal_has_no_view(self):
        self.assertIsNone(decompose_KD({1, 2}, {3, 4}, {(1, 3), (2, 4)}))

    def test_fully_reversed_vertex_is_rejected(self):
        with self.assertRaises(PreconditionError):
            decompose_KD({1, 2}, {3}, {(1, 3), (2, 3)})

    def test_example_has_three_cyclic_reversals(self):
        terms = nd_decomposition(graph_BIJ(EXAMPLE_VIEW))
        self.assertEqual(len(terms), 16)
        self.assertEqual(sum(1 for term in terms if term.view is None), 3)

    def test_non_bipartite_graph(self):
        with self.assertRaises(NotBipartiteError):
            nd_decomposition(Digraph(3, frozenset({(1, 2), (2, 3)})))

    def test_peeling_fails_exactly_on_cyclic_reversals(self):
        for n in range(1, 5):
            for split in range(1, n + 1):
                left, right = set(range(1, split + 1)), set(range(split + 1, n + 1))
                pairs = sorted((v, w) for v in left for w in right)
                expected = {
                    view for view in map(split_semilength, enumerate_setcomps(n))
                    if view.left == left and view.right == right
                }
                found = []
                for size in range(len(pairs) + 1):
                    for chosen in combinations(pairs, size):
                        if any(all((v, w) in chosen for v in left) for w in right):
                            continue
                        view = decompose_KD(left, right, chosen)
                        reversal = reverse_edges(left, right, chosen)
                        with self.subTest(n=n, split=split, reversed=chosen):
                            self.assertEqual(view is None, not reversal.is_acyclic)
                            if view is not None:
                                self.assertEqual(graph_HIJ(view), reversal)
                                found.append(view)
                # acyclic reversals and views with these sides correspond one to one
                self.assertEqual(len(found), len(set(found)))
                self.assertEqual(set(found), expected)


class NExpansionTests(SimpleTestCase):
    def test_example_expansion(self):
        expansion = n_expansion(graph_BIJ(EXAMPLE_VIEW))
        self.assertEqual(sorted(str(split_semilength(k)) for k in expansion.keys()), EXAMPLE_EXPANSION)
        self.assertTrue(all(c == 1 for _, c in expansion.items()))
        self.assertEqual(expansion[EXAMPLE_VIEW.composition], 1)

    def test_expansion_matches_the_solved_coordinates(self):
        for n in range(1, 4):
            for graph in enumerate_bipartite(n):
                with self.subTest(graph=str(graph)):
                    expansion = n_expansion(graph)
                    self.assertEqual(to_basis(gamma_nc(graph), Basis.N), expansion)
                    self.assertEqual(to_m(expansion), gamma_nc(graph))

    @tag('slow')
    def test_expansion_on_four_vertices(self):
        for graph in enumerate_bipartite(4):
            with self.subTest(graph=str(graph)):
                self.assertEqual(to_m(n_expansion(graph)), gamma_nc(graph))

    def test_support_condition(self):
        graph = graph_BIJ(EXAMPLE_VIEW)
        for key in n_expansion(graph).keys():
            with self.subTest(key=str(key)):
                self.assertTrue(n_support_condition(graph, split_semilength(key)))
        self.assertFalse(n_support_condition(graph, SemiLengthView.parse('(2356|1,4|7)')))

    def assertSupportMatches(self, n):
        views = [split_semilength(k) for k in enumerate_setcomps(n)]
        for graph in enumerate_bipartite(n):
            expansion = n_expansion(graph)
            with self.subTest(graph=str(graph)):
                self.assertTrue(all(c == 1 for _, c in expansion.items()))
                self.assertEqual(
                    {split_semilength(k) for k in expansion.keys()},
                    {view for view in views if n_support_condition(graph, view)},
                )

    def test_support_condition_on_small_graphs(self):
        for n in range(1, 5):
            self.assertSupportMatches(n)

    @tag('slow')
    def test_multiplicity_free_on_five_vertices(self):
        self.assertSupportMatches(5)
        for graph in enumerate_bipartite(5):
            with self.subTest(graph=str(graph)):
                self.assertEqual(to_m(n_expansion(graph)), gamma_nc(graph))

    def test_n_in_m_of_a_single_pair(self):
        image = n_in_m(SemiLengthView.parse('(1,2)'))
        self.assertEqual([str(k) for k in image.keys()], ['12', '1|2'])


class TriangularityTests(SimpleTestCase):
    def test_containment_order(self):
        self.assertTrue(precedes(SemiLengthView.parse('(1|3,2|)'), SemiLengthView.parse('(12,3)')))
        self.assertTrue(precedes(SemiLengthView.parse('(1,23)'), SemiLengthView.parse('(1|3,2|)')))
        self.assertFalse(precedes(SemiLengthView.parse('(12,3)'), SemiLengthView.parse('(1|3,2|)')))

    def test_expansion_is_unitriangular(self):
        for composition in enumerate_setcomps(3):
            view = split_semilength(composition)
            expansion = n_expansion(graph_BIJ(view))
            with self.subTest(view=str(view)):
                self.assertEqual(expansion[composition], 1)
                for key in expansion.keys():
                    if key != composition:
                        self.assertTrue(precedes(view, split_semilength(key)))

    def test_family_reports(self):
        for n in range(1, 4):
            for report in family_reports(n):
                with self.subTest(family=report.family, n=n):
                    self.assertTrue(report.unitriangular)
                    self.assertEqual(abs(report.determinant), 1)

    @tag('slow')
    def test_family_reports_degree_four(self):
        for report in (l_to_m_report(4), f_to_l_report(4), gi_to_f_report(4), bij_to_n_report(4)):
            with self.subTest(family=report.family):
                self.assertEqual(report.size, 75)
                self.assertTrue(report.unitriangular)
                self.assertEqual(abs(report.determinant), 1)

    def test_composition_of_example(self):
        self.assertEqual(EXAMPLE_VIEW.composition, SetComposition.parse('26|4|5|17|3'))
