from core.kerov import Partition, kerov_coeff, kerov_polynomial
from core.schemas import KerovPayload
from core.selftest import kerov_monomial, render_kerov

from ._base import GesselCommand


class Command(GesselCommand):
    help = "Kerov polynomial coefficients of Ch_mu through signed expander counts."

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--mu', required=True, type=Partition.parse, help="Partition, e.g. '3,1'.")
        target = parser.add_mutually_exclusive_group(required=True)
        target.add_argument('--nu', type=Partition.parse, help='Single coefficient of R_{nu_1+1} R_{nu_2+1} ...')
        target.add_argument('--table', action='store_true', help='Every nonzero coefficient.')

    def handle(self, *args, **options):
        mu, threads = options['mu'], options['threads']
        if options['nu'] is not None:
            coefficients = {options['nu']: kerov_coeff(mu, options['nu'], threads)}
        else:
            coefficients = kerov_polynomial(mu, threads)
        if options['as_json']:
            return self.emit_json(KerovPayload(
                mu=list(mu.parts),
                coefficients=[(list(nu.parts), str(c)) for nu, c in coefficients.items()],
            ))
        if options['nu'] is not None:
            self.stdout.write(str(coefficients[options['nu']]))
            return
        self.emit_table(
            f"K_{mu} = {render_kerov(coefficients)}",
            ['nu', 'monomial', 'coefficient'],
            [(nu, kerov_monomial(nu), c) for nu, c in coefficients.items()],
        )
