import math
from dataclasses import asdict, dataclass

from core.utils.exceptions import DomainError

INF = math.inf


def check_count(name, value):
    if value == INF:
        return value
    if value != int(value) or value < 1:
        raise DomainError(f"{name} must be a positive integer or infinity", **{name: value})
    return int(value)


@dataclass(frozen=True)
class BoundQuery:
    eps: float
    m: float = INF
    r: float = INF

    def __post_init__(self):
        if not self.eps > 0:
            raise DomainError("eps must be positive", eps=self.eps)
        object.__setattr__(self, 'm', check_count('m', self.m))
        object.__setattr__(self, 'r', check_count('r', self.r))


@dataclass(frozen=True)
class URPoint:
    delta: float
    mu: float
    r: float


@dataclass(frozen=True)
class DeltaResult:
    """Ínfimo numérico con su testigo (delta, mu) dentro de U_r."""
    value: float
    delta: float
    mu: float
    branch: str
    width: float
    boundary_hit: bool
    monotone: bool

    def as_dict(self):
        return asdict(self)
