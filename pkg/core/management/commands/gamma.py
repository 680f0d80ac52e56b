from core.errors import PreconditionError
from core.gamma import delta_two_alphabet, gamma_nc, gamma_unlabeled
from core.schemas import bipolynomial_payload, qsym_payload, wqsym_payload
from core.sparse import format_coefficient
from core.wqsym import Basis, to_basis

from ._base import GesselCommand


class Command(GesselCommand):
    help = "Image of a graph under the Gessel morphism, in WQSym or (with --unlabeled) in QSym."

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--graph', required=True, help="Graph file (text or JSON); '-' reads stdin.")
        target = parser.add_mutually_exclusive_group()
        target.add_argument('--basis', choices=[b.value for b in Basis], default=Basis.M.value)
        target.add_argument('--unlabeled', action='store_true', help='Commutative image in QSym.')
        target.add_argument(
            '--two-alphabet', type=int, metavar='M', dest='two_alphabet',
            help='Bipartite image in p_1..p_M, q_1..q_M.',
        )

    def handle(self, *args, **options):
        graph = self.read_graph(options['graph'])
        if options['two_alphabet'] is not None:
            return self.handle_two_alphabet(graph, options['two_alphabet'], options['as_json'])
        if options['unlabeled']:
            image = gamma_unlabeled(graph)
            if options['as_json']:
                return self.emit_json(qsym_payload(image))
            title = f"Gamma({graph}) in QSym"
            key_name = 'composition'
        else:
            image = to_basis(gamma_nc(graph), options['basis'])
            if options['as_json']:
                return self.emit_json(wqsym_payload(image))
            title = f"Gamma({graph}) in the {image.basis.value} basis"
            key_name = image.basis.value
        self.emit_table(
            title,
            [key_name, 'coefficient'],
            [(key, format_coefficient(coeff)) for key, coeff in image.items()],
        )

    def handle_two_alphabet(self, graph, m, as_json):
        if m < 1:
            raise PreconditionError("the alphabets need at least one letter")
        poly = delta_two_alphabet(graph, m)
        if as_json:
            return self.emit_json(bipolynomial_payload(poly))
        self.emit_table(
            f"Delta({graph}) in {m} + {m} variables",
            ['p exponents', 'q exponents', 'coefficient'],
            [(pe, qe, format_coefficient(coeff)) for (pe, qe), coeff in poly.items()],
        )
