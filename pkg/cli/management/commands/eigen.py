from cli.management.base import WeaverCommand
from cli.serializers import EigenRequestSerializer
from hyperbolic.services import FormService, SpectralService


class Command(WeaverCommand):
    help = "Autovalores, traza, rango y norma de puntos respecto de una forma hiperbólica"
    subcommand = 'eigen'

    def run(self, config, options):
        request = self.parse(EigenRequestSerializer, self.read_input(config), save=False)
        form = FormService.builtin_form(request['form'])
        points = []
        for x in request['points']:
            eigs = SpectralService.eigenvalues(form, x)
            points.append({
                'x': x,
                'eigenvalues': eigs,
                'trace': sum(eigs),
                'rank': SpectralService.rank(form, x, eigs),
                'norm': max(eigs[0], -eigs[-1]),
                'in_cone': SpectralService.in_cone(form, x, tol=config.tol),
            })
        self.emit(config, {'form': form.descriptor(), 'points': points})
