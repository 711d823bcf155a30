from cli.management.base import WeaverCommand
from core.utils.constants import LEMMA_SETS, SWEEP_FAMILIES
from oracles.serializers import SweepRequestSerializer, SweepSummarySerializer
from oracles.services import SweepService


class Command(WeaverCommand):
    help = "Barrido de los oráculos de desigualdades sobre contextos aleatorios"
    subcommand = 'verify'

    def add_command_arguments(self, parser):
        parser.add_argument('--lemma', action='append', choices=LEMMA_SETS, help="Lema a verificar (repetible)")
        parser.add_argument('--family', action='append', choices=list(SWEEP_FAMILIES), help="Familia de formas (repetible)")
        parser.add_argument('--contexts', type=int, help="Contextos por familia")

    def run(self, config, options):
        data = self.read_input(config, required=False) or {}
        for option, key in (('lemma', 'lemmas'), ('family', 'families'), ('contexts', 'contexts')):
            if options.get(option):
                data[key] = options[option]
        request = self.parse(SweepRequestSerializer, data, save=False)
        summary = SweepService.run_sweep(
            lemmas=request['lemmas'] or None,
            families=request['families'] or None,
            contexts=request['contexts'],
            seed=config.seed,
            tol=config.tol,
            jobs=config.jobs,
        )
        report = dict(SweepSummarySerializer(summary).data)
        report.update(seed=config.seed, contexts=request['contexts'])
        self.emit(config, report)
        if summary.failed:
            self.fail_check(f"{summary.failed} oracle checks failed")
