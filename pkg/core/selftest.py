"""
Worked examples with known answers, run by ``manage.py selftest``.

Each check compares a rendered string with the expected one so a failure
report shows both sides verbatim.
"""

import logging
from dataclasses import dataclass

from .bipartite import graph_BIJ, n_expansion, nd_decomposition
from .digraph import Digraph, UndirectedCycle, cie
from .errors import GesselError
from .gamma import gamma_nc, mp_set
from .kerov import DecoratedGraph, Partition, is_expander, kerov_polynomial
from .rewrite import cie_span_rank, kernel_check
from .setcomp import SemiLengthView, SetComposition, delta_of_word, phi_c, split_semilength, to_dstar
from .wqsym import Basis, to_basis

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Check:
    name: str
    expected: str
    actual: str

    @property
    def passed(self):
        return self.expected == self.actual


EXAMPLE_COMPOSITION = SetComposition.parse('15|346|2')

EXAMPLE_GRAPH = Digraph(7, frozenset({
    (4, 2), (6, 2), (6, 1), (2, 3), (3, 5), (1, 5), (1, 7), (7, 5),
}))
EXAMPLE_CYCLE = (6, 2, 3, 5, 1)

EXAMPLE_VIEW = SemiLengthView.parse('(26|5|3,4|17|)')

EXPANDER_EDGES = frozenset({
    (5, 2), (5, 1), (3, 2), (3, 9), (3, 1), (8, 1), (8, 4), (8, 7), (8, 6),
})
EXPANDER_WEIGHTS = {5: 1, 3: 2, 8: 3}


def _join_signed(pairs):
    pieces = []
    for coeff, body in pairs:
        magnitude = abs(coeff)
        body = body if magnitude == 1 else f"{magnitude}*{body}"
        if not pieces:
            pieces.append(body if coeff > 0 else f"-{body}")
        else:
            pieces.append(f"{'+' if coeff > 0 else '-'} {body}")
    return ' '.join(pieces) or '0'


def signed_sum(vec, prefix):
    """``F_231 + F_3*21 - F_321`` style rendering of a sparse vector."""
    return _join_signed((coeff, f"{prefix}_{key}") for key, coeff in vec.items())


def kerov_monomial(nu):
    counts = {}
    for part in nu.parts:
        counts[part + 1] = counts.get(part + 1, 0) + 1
    return ' '.join(
        f"R_{index}" if power == 1 else f"R_{index}^{power}"
        for index, power in sorted(counts.items(), reverse=True)
    )


def render_kerov(coefficients):
    """Largest ``nu`` first: ``R_5 + 5*R_3``."""
    ordered = sorted(coefficients.items(), key=lambda item: (item[0].size, item[0].parts), reverse=True)
    return _join_signed((coeff, kerov_monomial(nu)) for nu, coeff in ordered)


def _packed_word():
    return Check('packed word', '15|346|2', str(delta_of_word((2, 7, 5, 5, 2, 5))))


def _composition_of():
    return Check('commutative image of 15|346|2', '231', str(phi_c(EXAMPLE_COMPOSITION)))


def _dstar():
    return Check('starred permutation of 15|346|2', '5*16*4*32', str(to_dstar(EXAMPLE_COMPOSITION)))


def _mp():
    expected = sorted([
        '153462', '5*13462', '154*362', '5*14*362', '156*4*32', '5*16*4*32',
        '1536*42', '5*136*42', '1546*32', '5*146*32', '156*342', '5*16*342',
    ])
    return Check('MP(15|346|2)', ' '.join(expected), ' '.join(map(str, mp_set(EXAMPLE_COMPOSITION))))


def _single_edge_in_f():
    image = to_basis(gamma_nc(Digraph(3, frozenset({(3, 1)}))), Basis.F)
    return Check('3 -> 1 in the F basis', 'F_231 + F_3*21 + F_312 + F_32*1 - F_321', signed_sum(image, 'F'))


def _cycle_element():
    cycle = UndirectedCycle.through(EXAMPLE_GRAPH, EXAMPLE_CYCLE)
    element = cie(EXAMPLE_GRAPH, cycle)
    verdict = 'in kernel' if kernel_check(element) else 'not in kernel'
    return Check('cycle element on seven vertices', '8 terms, in kernel', f"{len(element)} terms, {verdict}")


def _bipartite_expansion():
    expected = sorted([
        '(26|5|3,4|17|)', '(26|5|3,4|1|7)', '(26|5|3,4|7|1)', '(26|35,4|17)',
        '(236|5,4|17)', '(256|3,147|)', '(256|3,14|7)', '(256|3,17|4)',
        '(256|3,47|1)', '(256|3,1|47)', '(256|3,4|17)', '(256|3,7|14)',
        '(2356,147)',
    ])
    graph = graph_BIJ(EXAMPLE_VIEW)
    views = sorted(str(split_semilength(key)) for key in n_expansion(graph).keys())
    return Check('N expansion of a bipartite graph', ' '.join(expected), ' '.join(views))


def _cyclic_reversals():
    terms = nd_decomposition(graph_BIJ(EXAMPLE_VIEW))
    cyclic = sum(1 for term in terms if term.view is None)
    return Check('cyclic reversals', '3 of 16', f"{cyclic} of {len(terms)}")


def _expanders():
    verdicts = []
    for extra in (frozenset(), frozenset({(3, 4)})):
        decorated = DecoratedGraph(Digraph(9, EXPANDER_EDGES | extra), EXPANDER_WEIGHTS)
        verdicts.append('expander' if is_expander(decorated) else 'not expander')
    return Check('expander decorations', 'not expander, expander', ', '.join(verdicts))


def _kerov(mu, expected):
    def check():
        partition = Partition(mu)
        return Check(f"K_{partition}", expected, render_kerov(kerov_polynomial(partition)))
    return check


def _kernel_rank():
    return Check('CIE rank on 3 vertices', '12', str(cie_span_rank(3)))


CHECKS = (
    _packed_word,
    _composition_of,
    _dstar,
    _mp,
    _single_edge_in_f,
    _cycle_element,
    _bipartite_expansion,
    _cyclic_reversals,
    _expanders,
    _kerov((2,), 'R_3'),
    _kerov((3,), 'R_4 + R_2'),
    _kerov((4,), 'R_5 + 5*R_3'),
    _kerov((1, 1), 'R_2^2 - R_2'),
    _kernel_rank,
)


def run_checks():
    results = []
    for check in CHECKS:
        try:
            result = check()
        except GesselError as exc:
            logger.exception("self-test check raised")
            result = Check(check.__name__.lstrip('_'), 'a value', f"error: {exc}")
        results.append(result)
        if not result.passed:
            logger.warning("self-test %s: expected %r, got %r", result.name, result.expected, result.actual)
    return results
