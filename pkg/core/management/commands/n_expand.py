from core.bipartite import n_expansion
from core.schemas import wqsym_payload
from core.setcomp import split_semilength

from ._base import GesselCommand


class Command(GesselCommand):
    help = "Set compositions K in the N expansion of a bipartite graph, one per line."

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--graph', required=True, help="Graph file (text or JSON); '-' reads stdin.")
        parser.add_argument('--views', action='store_true', help='Print each K as its (I,J) view.')

    def handle(self, *args, **options):
        expansion = n_expansion(self.read_graph(options['graph']))
        if options['as_json']:
            return self.emit_json(wqsym_payload(expansion))
        render = split_semilength if options['views'] else str
        for key in expansion.keys():
            self.stdout.write(str(render(key)))
