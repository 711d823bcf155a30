from dataclasses import asdict, dataclass

NORM_SLACK = 1e-6
# raíces dobles salen con error del orden de sqrt(eps de máquina)
TRAJECTORY_SLACK = 1e-7


@dataclass(frozen=True)
class PartitionReport:
    """
    Resultado del reparto voraz.

    `parts` usa índices desde 1; `trajectory` tiene m + 1 valores de
    lambda_max del polinomio condicional, desde la media inicial.
    """
    parts: tuple
    norms: tuple
    bound: float
    trajectory: tuple
    order: tuple
    outside_theorem: bool = False
    wall_time: float = None

    @property
    def max_norm(self):
        return max(self.norms) if self.norms else 0.0

    @property
    def within_bound(self):
        return all(norm <= self.bound + NORM_SLACK for norm in self.norms)

    @property
    def trajectory_nonincreasing(self):
        return all(b <= a + TRAJECTORY_SLACK * max(1.0, abs(a)) for a, b in zip(self.trajectory, self.trajectory[1:]))


@dataclass(frozen=True)
class PartCheck:
    part: int
    members: tuple
    total: tuple
    eigenvalues: tuple
    norm: float
    within_bound: bool


@dataclass(frozen=True)
class VerificationReport:
    # la norma coincide con lambda_max porque cada suma parcial está en el cono cerrado
    parts: tuple
    bound: float

    @property
    def passed(self):
        return all(part.within_bound for part in self.parts)

    @property
    def max_norm(self):
        return max(part.norm for part in self.parts)

    def as_dict(self):
        return {
            'passed': self.passed,
            'bound': self.bound,
            'max_norm': self.max_norm,
            'parts': [asdict(part) for part in self.parts],
        }


@dataclass(frozen=True)
class BruteForceResult:
    parts: tuple
    norm: float
    assignments: int

    def as_dict(self):
        return {'parts': [list(part) for part in self.parts], 'norm': self.norm, 'assignments': self.assignments}
