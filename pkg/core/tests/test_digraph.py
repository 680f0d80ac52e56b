from django.test import SimpleTestCase, override_settings, tag
from hypothesis import given, settings
from hypothesis import strategies as st

from core.digraph import (
    Digraph,
    GraphVec,
    UndirectedCycle,
    canonical_label,
    cie,
    enumerate_acyclic,
    enumerate_bipartite,
    undirected_cycles,
)
from core.errors import CapExceeded, CyclicGraphError, FormatError, NotACycleError
from core.gamma import gamma_unlabeled
from core.schemas import graphvec_from_payload, graphvec_payload, parse_graph

from .strategies import acyclic_graphs

ACYCLIC_COUNTS = [1, 1, 3, 25, 543]
BIPARTITE_COUNTS = [1, 1, 3, 13, 87, 841]
ACYCLIC_FOUR = list(enumerate_acyclic(4))

EXAMPLE = Digraph(7, frozenset({
    (4, 2), (6, 2), (6, 1), (2, 3), (3, 5), (1, 5), (1, 7), (7, 5),
}))


class DigraphTests(SimpleTestCase):
    def test_parse_text_format(self):
        graph = Digraph.parse("3\n# one edge\n3 1\n")
        self.assertEqual(graph, Digraph(3, frozenset({(3, 1)})))
        self.assertEqual(graph.to_text(), "3\n3 1\n")
        self.assertEqual(str(graph), '3:{3>1}')

    def test_parse_json(self):
        graph = parse_graph('{"n": 3, "edges": [[1, 2], [2, 3]]}')
        self.assertEqual(graph.sorted_edges, ((1, 2), (2, 3)))

    def test_bad_input(self):
        for text in ('', 'x', '2\n1 2\n1 2', '2\n1 3', '{"n": 2, "edges": [[1, 2]], "extra": 1}'):
            with self.subTest(text=text):
                with self.assertRaises(FormatError):
                    parse_graph(text)

    def test_directed_cycles_are_rejected(self):
        with self.assertRaises(CyclicGraphError):
            Digraph(2, frozenset({(1, 2), (2, 1)}))
        with self.assertRaises(FormatError):
            Digraph(1, frozenset({(1, 1)}))

    def test_bipartition(self):
        graph = Digraph(4, frozenset({(1, 2), (3, 2)}))
        self.assertTrue(graph.is_bipartite())
        self.assertEqual(graph.bipartition(), (frozenset({1, 3, 4}), frozenset({2})))
        self.assertFalse(Digraph(3, frozenset({(1, 2), (2, 3)})).is_bipartite())

    def test_relabel_and_union(self):
        graph = Digraph(2, frozenset({(1, 2)}))
        self.assertEqual(graph.relabel((2, 1)).edges, frozenset({(2, 1)}))
        union = graph.disjoint_union(graph)
        self.assertEqual(union.edges, frozenset({(1, 2), (3, 4)}))
        self.assertEqual(union.component_count(), 2)


class EnumerationTests(SimpleTestCase):
    def test_acyclic_counts(self):
        for n, expected in enumerate(ACYCLIC_COUNTS):
            with self.subTest(n=n):
                self.assertEqual(sum(1 for _ in enumerate_acyclic(n)), expected)

    @tag('slow')
    def test_acyclic_count_five(self):
        self.assertEqual(sum(1 for _ in enumerate_acyclic(5)), 29281)

    def test_bipartite_graphs_are_a_subset(self):
        bipartite = list(enumerate_bipartite(3))
        self.assertTrue(all(g.is_bipartite() for g in bipartite))
        self.assertIn(Digraph(3, frozenset({(1, 2), (3, 2)})), bipartite)
        self.assertNotIn(Digraph(3, frozenset({(1, 2), (2, 3)})), bipartite)

    def test_bipartite_counts(self):
        for n, expected in enumerate(BIPARTITE_COUNTS):
            with self.subTest(n=n):
                self.assertEqual(sum(1 for _ in enumerate_bipartite(n)), expected)

    def test_bipartite_enumeration_matches_the_acyclic_filter(self):
        for n in range(5):
            with self.subTest(n=n):
                self.assertEqual(
                    list(enumerate_bipartite(n)),
                    [g for g in enumerate_acyclic(n) if g.is_bipartite()],
                )

    @tag('slow')
    def test_bipartite_count_six(self):
        graphs = list(enumerate_bipartite(6))
        self.assertEqual(len(graphs), 11835)
        self.assertEqual(len(set(graphs)), len(graphs))

    @override_settings(GESSEL_ACYCLIC_CAP=2, GESSEL_BIPARTITE_CAP=3)
    def test_bipartite_cap_is_separate(self):
        self.assertEqual(sum(1 for _ in enumerate_bipartite(3)), 13)
        with self.assertRaises(CapExceeded) as caught:
            enumerate_bipartite(4)
        self.assertEqual(caught.exception.what, 'bipartite enumeration')

    @override_settings(GESSEL_ACYCLIC_CAP=2)
    def test_enumeration_cap(self):
        with self.assertRaises(CapExceeded) as caught:
            enumerate_acyclic(3)
        self.assertEqual((caught.exception.requested, caught.exception.limit), (3, 2))

    def test_canonical_label_merges_isomorphic_graphs(self):
        labels = {canonical_label(g) for g in enumerate_acyclic(3)}
        # unlabeled acyclic digraphs on three vertices
        self.assertEqual(len(labels), 6)
        path = Digraph(3, frozenset({(1, 2), (2, 3)}))
        self.assertEqual(canonical_label(path), canonical_label(path.relabel((3, 1, 2))))

    @given(st.sampled_from(ACYCLIC_FOUR), st.permutations((1, 2, 3, 4)))
    @settings(deadline=None)
    def test_labels_and_images_ignore_relabeling(self, graph, perm):
        relabeled = graph.relabel(perm)
        self.assertEqual(canonical_label(relabeled), canonical_label(graph))
        self.assertEqual(gamma_unlabeled(relabeled), gamma_unlabeled(graph))

    @tag('slow')
    @given(st.data())
    @settings(deadline=None, max_examples=100)
    def test_labels_and_images_ignore_relabeling_up_to_six_vertices(self, data):
        graph = data.draw(acyclic_graphs(max_n=6))
        perm = data.draw(st.permutations(tuple(graph.vertices)))
        relabeled = graph.relabel(perm)
        self.assertEqual(canonical_label(relabeled), canonical_label(graph))
        self.assertEqual(gamma_unlabeled(relabeled), gamma_unlabeled(graph))

    def test_canonical_label_cap(self):
        with self.assertRaises(CapExceeded):
            canonical_label(EXAMPLE, cap=6)


class GraphVecTests(SimpleTestCase):
    def test_product_is_disjoint_union(self):
        edge = GraphVec.of(Digraph(2, frozenset({(1, 2)})))
        point = GraphVec.of(Digraph(1), 3)
        product = edge * point
        self.assertEqual(product.items(), [(Digraph(3, frozenset({(1, 2)})), 3)])

    def test_payload_round_trip(self):
        vec = GraphVec({EXAMPLE: 2, EXAMPLE.without([(4, 2)]): -1})
        self.assertEqual(graphvec_from_payload(graphvec_payload(vec)), vec)


class CycleTests(SimpleTestCase):
    def test_example_cycle_orientation(self):
        cycle = UndirectedCycle.through(EXAMPLE, (6, 2, 3, 5, 1))
        self.assertEqual(cycle.plus_edges, frozenset({(6, 2), (2, 3), (3, 5)}))
        self.assertEqual(cycle.minus_edges, frozenset({(5, 1), (1, 6)}))

    def test_cycles_come_in_both_directions(self):
        cycles = {c.vertices: c for c in undirected_cycles(EXAMPLE)}
        self.assertIn((1, 6, 2, 3, 5), cycles)
        self.assertIn((1, 5, 3, 2, 6), cycles)
        self.assertEqual(cycles[(1, 6, 2, 3, 5)].plus_edges, frozenset({(6, 2), (2, 3), (3, 5)}))
        self.assertEqual(cycles[(1, 5, 3, 2, 6)].plus_edges, frozenset({(1, 5), (6, 1)}))

    def test_length_bound(self):
        self.assertTrue(all(len(c) <= 3 for c in undirected_cycles(EXAMPLE, max_len=3)))
        self.assertEqual(list(undirected_cycles(Digraph(3, frozenset({(1, 2), (2, 3)})))), [])

    def test_cie_element(self):
        cycle = UndirectedCycle.through(EXAMPLE, (6, 2, 3, 5, 1))
        element = cie(EXAMPLE, cycle)
        self.assertEqual(len(element), 8)
        self.assertEqual(element[EXAMPLE], 1)
        self.assertEqual(element[EXAMPLE.without([(6, 2), (2, 3), (3, 5)])], -1)
        self.assertEqual(sum(c for _, c in element.items()), 0)

    def test_not_a_cycle(self):
        with self.assertRaises(NotACycleError):
            UndirectedCycle.through(EXAMPLE, (1, 2, 3))
        with self.assertRaises(NotACycleError):
            UndirectedCycle.through(EXAMPLE, (1, 5))
