from dataclasses import dataclass

from core.utils.conf import weaver_setting
from core.utils.exceptions import DomainError

FORMATS = ('json', 'csv')


@dataclass(frozen=True)
class RunConfig:
    """Opciones compartidas de una invocación; `tol` None deja las tolerancias de settings."""
    subcommand: str
    input: str = None
    output: str = None
    seed: int = 0
    tol: float = None
    jobs: int = 1
    format: str = 'json'

    def __post_init__(self):
        if self.tol is not None and not self.tol > 0:
            raise DomainError("Tolerance must be positive", tol=self.tol)
        if self.jobs < 1:
            raise DomainError("jobs must be at least 1", jobs=self.jobs)
        if self.format not in FORMATS:
            raise DomainError("Unknown output format", format=self.format, known=list(FORMATS))

    @classmethod
    def from_options(cls, subcommand, options, default_format='json'):
        return cls(
            subcommand=subcommand,
            input=options.get('input'),
            output=options.get('output'),
            seed=weaver_setting('SEED') if options.get('seed') is None else options['seed'],
            tol=options.get('tol'),
            jobs=weaver_setting('JOBS') if options.get('jobs') is None else options['jobs'],
            format=options.get('format') or default_format,
        )
