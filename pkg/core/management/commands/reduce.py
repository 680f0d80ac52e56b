from functools import partial

from core.rewrite import identify_BIJ, identify_GI, reduce_bipartite_to_BIJ, reduce_to_GI
from core.schemas import graphvec_payload
from core.sparse import format_coefficient

from ._base import GesselCommand


class Command(GesselCommand):
    help = "Rewrite a graph modulo CIE into canonical graphs G_I, or B_(I,J) with --bipartite."

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--graph', required=True, help="Graph file (text or JSON); '-' reads stdin.")
        parser.add_argument('--bipartite', action='store_true', help='Reduce to bipartite canonical graphs.')
        parser.add_argument('--trace', action='store_true', help='Print each rewrite step to stderr.')

    def handle(self, *args, **options):
        graph = self.read_graph(options['graph'])
        trace = (lambda step: self.stderr.write(step.describe())) if options['trace'] else None
        if options['bipartite']:
            reduced = reduce_bipartite_to_BIJ(graph, trace=trace)
            label = partial(identify_BIJ, bipartition=graph.bipartition())
        else:
            reduced = reduce_to_GI(graph, trace=trace)
            label = identify_GI
        if options['as_json']:
            return self.emit_json(graphvec_payload(reduced))
        self.emit_table(
            f"{graph} modulo CIE",
            ['coefficient', 'canonical', 'graph'],
            [(format_coefficient(c), label(g), g) for g, c in reduced.items()],
        )
