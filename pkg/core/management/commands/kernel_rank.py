from core.conf import gessel_settings
from core.digraph import enumerate_acyclic, enumerate_bipartite
from core.rewrite import CycleMode, cie_span_rank
from core.schemas import RankPayload
from core.setcomp import enumerate_setcomps

from ._base import GesselCommand


class Command(GesselCommand):
    help = "Rank of the span of all CIE elements on n labeled vertices."

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--n', type=int, required=True)
        parser.add_argument('--mode', choices=[m.value for m in CycleMode], default=None)
        parser.add_argument('--bipartite', action='store_true', help='Only bipartite graphs and their cycles.')

    def handle(self, *args, **options):
        n = options['n']
        mode = CycleMode(options['mode'] or gessel_settings().cycle_mode)
        rank = cie_span_rank(n, mode, bipartite=options['bipartite'], threads=options['threads'])
        if not options['as_json']:
            self.stdout.write(str(rank))
            return
        source = enumerate_bipartite(n) if options['bipartite'] else enumerate_acyclic(n)
        self.emit_json(RankPayload(
            n=n,
            mode=mode.value,
            bipartite=options['bipartite'],
            graphs=sum(1 for _ in source),
            ordered_bell=sum(1 for _ in enumerate_setcomps(n)),
            rank=rank,
        ))
