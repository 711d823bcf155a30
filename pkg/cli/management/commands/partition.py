from dataclasses import asdict

from cli.management.base import WeaverCommand
from core.utils.exceptions import InvalidInstanceError
from partition.serializers import InstanceSerializer, PartitionReportSerializer
from partition.services import GreedyService, InstanceService


class Command(WeaverCommand):
    help = "Reparto voraz de una instancia JSON con verificación de la cota"
    subcommand = 'partition'

    def add_command_arguments(self, parser):
        parser.add_argument('--brute-force', action='store_true', help="Agrega el óptimo exacto (instancias chicas)")
        parser.add_argument('--shuffle', action='store_true', help="Procesa los vectores en orden aleatorio según --seed")
        parser.add_argument('--timing', action='store_true', help="Incluye el tiempo de ejecución")

    def run(self, config, options):
        inst = self.parse(InstanceSerializer, self.read_input(config))
        validation = InstanceService.validate_instance(inst, tol=config.tol)
        if not validation.passed:
            raise InvalidInstanceError(
                "Instance fails its hypotheses",
                failures=[asdict(check) for check in validation.failures],
            )

        report = GreedyService.greedy_partition(
            inst, jobs=config.jobs, shuffle=options['shuffle'], seed=config.seed, timing=options['timing'],
        )
        data = {
            'validation': validation.as_dict(),
            'partition': PartitionReportSerializer(report).data,
            'verification': GreedyService.verify_partition(inst, report.parts).as_dict(),
        }
        if options['brute_force']:
            data['brute_force'] = GreedyService.brute_force_partition(inst).as_dict()
        self.emit(config, data)

        if not report.within_bound:
            self.fail_check(f"Part norm {report.max_norm:.12g} exceeds the bound {report.bound:.12g}")
        if not report.trajectory_nonincreasing:
            self.fail_check("Greedy lambda_max trajectory increased")
