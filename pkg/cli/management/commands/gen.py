from cli.management.base import WeaverCommand
from partition.serializers import InstanceSerializer, InstanceSpecSerializer
from partition.services import InstanceService

SPEC_OPTIONS = ('family', 'n', 'm', 'eps', 'k', 'rank', 'split')


class Command(WeaverCommand):
    help = "Genera una instancia aleatoria (resolución de la identidad) en JSON"
    subcommand = 'gen'

    def add_command_arguments(self, parser):
        parser.add_argument('--family', choices=('product', 'symdet'))
        parser.add_argument('--n', type=int)
        parser.add_argument('--m', type=int)
        parser.add_argument('--eps', type=float)
        parser.add_argument('--k', type=int)
        parser.add_argument('--rank', type=int)
        parser.add_argument('--split', choices=('random', 'equal'))

    def run(self, config, options):
        data = self.read_input(config, required=False) or {}
        for name in SPEC_OPTIONS:
            if options.get(name) is not None:
                data[name] = options[name]
        if options.get('seed') is not None or data.get('seed') is None:
            data['seed'] = config.seed
        spec = self.parse(InstanceSpecSerializer, data)
        inst = InstanceService.random_instance(spec)
        self.emit(config, InstanceSerializer(inst).data)
