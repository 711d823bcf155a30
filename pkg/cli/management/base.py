"""
Base de los comandos: opciones compartidas, lectura de entradas y
traducción de errores a códigos de salida.
"""
import json
import logging

from django.core.management.base import BaseCommand, CommandError
from rest_framework import serializers

from cli.models import RunConfig
from cli.services import OutputService
from core.utils.constants import EXIT_CODES
from core.utils.exceptions import DomainError, WeaverError

logger = logging.getLogger(__name__)


def flatten_errors(detail, path=''):
    """Aplana el detalle de DRF en líneas "campo.sub: mensaje"."""
    if isinstance(detail, dict):
        lines = []
        for key, value in detail.items():
            lines += flatten_errors(value, f"{path}.{key}" if path else str(key))
        return lines
    if isinstance(detail, list):
        if all(isinstance(item, str) for item in detail):
            return [f"{path or 'input'}: {item}" for item in detail]
        lines = []
        for index, value in enumerate(detail):
            lines += flatten_errors(value, f"{path}[{index}]")
        return lines
    return [f"{path or 'input'}: {detail}"]


class WeaverCommand(BaseCommand):
    subcommand = None
    formats = ('json',)

    def add_arguments(self, parser):
        parser.add_argument('--input', type=str, help="Archivo JSON de entrada")
        parser.add_argument('--output', type=str, help="Archivo de salida; por defecto stdout")
        parser.add_argument('--seed', type=int, help="Semilla (por defecto WEAVER['SEED'])")
        parser.add_argument('--tol', type=float, help="Tolerancia de los checks")
        parser.add_argument('--jobs', type=int, help="Hilos para las evaluaciones en paralelo")
        parser.add_argument('--format', choices=('json', 'csv'), help="Formato de salida")
        self.add_command_arguments(parser)

    def add_command_arguments(self, parser):
        pass

    def handle(self, *args, **options):
        try:
            config = RunConfig.from_options(self.subcommand, options, self.formats[0])
            if config.format not in self.formats:
                raise DomainError(
                    "Output format not available for this command",
                    command=self.subcommand, format=config.format,
                )
            self.run(config, options)
        except serializers.ValidationError as exc:
            raise CommandError(
                "Invalid input:\n" + "\n".join(flatten_errors(exc.detail)),
                returncode=EXIT_CODES['INPUT_ERROR'],
            )
        except WeaverError as exc:
            logger.debug("Command %s failed with %s", self.subcommand, exc.code)
            raise CommandError(json.dumps(OutputService.clean(exc.as_dict()), sort_keys=True), returncode=exc.exit_code)

    def run(self, config, options):
        raise NotImplementedError

    # ---------- utilidades ----------
    def read_input(self, config, required=True):
        if not config.input:
            if required:
                raise DomainError("This command needs --input", command=self.subcommand)
            return None
        return OutputService.load_json(config.input)

    @staticmethod
    def parse(serializer_class, data, save=True):
        serializer = serializer_class(data=data)
        serializer.is_valid(raise_exception=True)
        return serializer.save() if save else serializer.validated_data

    def emit(self, config, data):
        OutputService.write(OutputService.dumps(data), config.output, self.stdout)

    def fail_check(self, message):
        raise CommandError(message, returncode=EXIT_CODES['CHECK_FAILURE'])
