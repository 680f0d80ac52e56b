from core.digraph import UndirectedCycle, cie, undirected_cycles
from core.errors import FormatError
from core.rewrite import kernel_check
from core.schemas import CycleListPayload, CyclePayload, graphvec_payload
from core.sparse import format_coefficient

from ._base import GesselCommand


def _edges(pairs):
    return ' '.join(f"{u}>{v}" for u, v in sorted(pairs))


class Command(GesselCommand):
    help = "List the undirected cycles of a graph, or expand the CIE element of one cycle."

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--graph', required=True, help="Graph file (text or JSON); '-' reads stdin.")
        parser.add_argument('--cycle', help="Cycle as a vertex sequence, e.g. '6 2 3 5 1'.")
        parser.add_argument('--max-len', type=int, default=None, dest='max_len')

    def handle(self, *args, **options):
        graph = self.read_graph(options['graph'])
        if options['cycle']:
            try:
                vertices = [int(x) for x in options['cycle'].replace(',', ' ').split()]
            except ValueError as exc:
                raise FormatError(f"cannot read cycle {options['cycle']!r}") from exc
            element = cie(graph, UndirectedCycle.through(graph, vertices))
            if options['as_json']:
                return self.emit_json(graphvec_payload(element))
            verdict = 'in the kernel' if kernel_check(element) else 'NOT in the kernel'
            self.emit_table(
                f"CIE element ({len(element)} terms, {verdict})",
                ['coefficient', 'edges'],
                [(format_coefficient(c), _edges(g.edges)) for g, c in element.items()],
            )
            return
        cycles = list(undirected_cycles(graph, options['max_len']))
        if options['as_json']:
            return self.emit_json(CycleListPayload(cycles=[
                CyclePayload(
                    vertices=list(c.vertices),
                    plus_edges=sorted(c.plus_edges),
                    minus_edges=sorted(c.minus_edges),
                )
                for c in cycles
            ]))
        self.emit_table(
            f"Undirected cycles of {graph}",
            ['vertices', 'C+', 'C-', 'terms'],
            [
                (' '.join(map(str, c.vertices)), _edges(c.plus_edges), _edges(c.minus_edges), 2 ** len(c.plus_edges))
                for c in cycles
            ],
        )
