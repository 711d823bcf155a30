from dataclasses import asdict, dataclass

import numpy as np

from bounds.models.query import INF, check_count
from core.utils.exceptions import DimensionMismatchError, DomainError
from hyperbolic.models.form import HyperbolicForm


@dataclass(frozen=True, eq=False)
class Instance:
    """Vectores u_1..u_m del cono con suma e, a repartir en k partes."""
    form: HyperbolicForm
    vectors: tuple
    k: int
    eps: float
    r: float = INF

    @classmethod
    def build(cls, form, vectors, k, eps, r=INF):
        if not k >= 1 or k != int(k):
            raise DomainError("Part count must be a positive integer", k=k)
        if not eps > 0:
            raise DomainError("eps must be positive", eps=eps)
        if not vectors:
            raise DomainError("Instance needs at least one vector")
        frozen = []
        for index, u in enumerate(vectors):
            u = np.array(u, dtype=float).reshape(-1)
            if u.size != form.nvars:
                raise DimensionMismatchError(
                    "Vector length differs from the form's variable count",
                    index=index + 1, expected=form.nvars, received=int(u.size),
                )
            u.setflags(write=False)
            frozen.append(u)
        return cls(form=form, vectors=tuple(frozen), k=int(k), eps=float(eps), r=check_count('r', r))

    @property
    def m(self):
        return len(self.vectors)

    @property
    def total(self):
        return np.sum(self.vectors, axis=0)

    def descriptor(self):
        return {
            'form': self.form.descriptor(),
            'vectors': [[float(v) for v in u] for u in self.vectors],
            'k': self.k,
            'eps': self.eps,
            'r': self.r,
        }


@dataclass(frozen=True)
class InstanceSpec:
    """Parámetros de generación de instancias aleatorias."""
    family: str
    n: int
    m: int
    eps: float
    k: int = 2
    rank: int = 1
    split: str = 'random'
    seed: int = None

    def __post_init__(self):
        if self.family not in ('product', 'symdet'):
            raise DomainError("Random instances exist for product and symdet forms", family=self.family)
        if self.split not in ('random', 'equal'):
            raise DomainError("Unknown split", split=self.split)
        if self.n < 1 or self.m < 1 or self.k < 1:
            raise DomainError("n, m and k must be positive", n=self.n, m=self.m, k=self.k)
        if not self.eps > 0:
            raise DomainError("eps must be positive", eps=self.eps)
        if self.family == 'symdet' and self.rank not in (1, 2):
            raise DomainError("symdet instances support rank 1 or 2", rank=self.rank)
        if self.family == 'product' and not 1 <= self.rank <= self.n:
            raise DomainError("product rank must lie in 1..n", rank=self.rank, n=self.n)


@dataclass(frozen=True)
class HypothesisCheck:
    name: str
    passed: bool
    slack: float = None
    index: int = None


@dataclass(frozen=True)
class ValidationReport:
    checks: tuple

    @property
    def passed(self):
        return all(check.passed for check in self.checks)

    @property
    def failures(self):
        return [check for check in self.checks if not check.passed]

    def as_dict(self):
        return {'passed': self.passed, 'checks': [asdict(check) for check in self.checks]}
