import itertools

from bounds.models.query import BoundQuery
from bounds.services import DeltaService
from cli.management.base import WeaverCommand
from cli.serializers import BoundsGridSerializer
from cli.services import OutputService
from core.utils.exceptions import DomainError

COLUMNS = ('eps', 'm', 'r', 'k', 'delta_numeric', 'delta_closed', 'delta_upper_a3', 'mss', 'partition_bound')


class Command(WeaverCommand):
    help = "Tabla de delta(eps, m, r), formas cerradas, cota de MSS y cota de reparto"
    subcommand = 'bounds'
    formats = ('csv', 'json')

    def add_command_arguments(self, parser):
        parser.add_argument('--eps', nargs='*', type=float, help="Valores de eps")
        parser.add_argument('--m', nargs='*', type=str, help="Cantidades de vectores (enteros o inf)")
        parser.add_argument('--r', nargs='*', type=str, help="Cotas de rango (enteros o inf)")
        parser.add_argument('--k', nargs='*', type=int, help="Cantidades de partes")

    @staticmethod
    def row(eps, m, r, k):
        query = BoundQuery(eps=eps, m=m, r=r)
        try:
            closed = DeltaService.delta_closed_form(query)
        except DomainError:
            closed = None
        return {
            'eps': eps,
            'm': m,
            'r': r,
            'k': k,
            'delta_numeric': DeltaService.delta_bound(query).value,
            'delta_closed': closed,
            'delta_upper_a3': DeltaService.delta_upper_r(eps, r),
            'mss': DeltaService.mss_bound(eps, k),
            'partition_bound': DeltaService.partition_bound(eps, m, r, k),
        }

    def grid(self, config, options):
        data = self.read_input(config, required=False)
        if data is None:
            data = {'eps': options.get('eps') or []}
            for name in ('m', 'r', 'k'):
                if options.get(name):
                    data[name] = options[name]
        return self.parse(BoundsGridSerializer, data, save=False)

    def run(self, config, options):
        grid = self.grid(config, options)
        rows = [
            self.row(eps, m, r, k)
            for eps, m, r, k in itertools.product(grid['eps'], grid['m'], grid['r'], grid['k'])
        ]
        if config.format == 'csv':
            OutputService.write(OutputService.csv_text(COLUMNS, rows), config.output, self.stdout)
        else:
            self.emit(config, {'columns': list(COLUMNS), 'rows': rows})
