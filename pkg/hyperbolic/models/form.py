from dataclasses import dataclass, field

import numpy as np

from polyalg.models.multipoly import MultiPoly


@dataclass(frozen=True, eq=False)
class HyperbolicForm:
    """Polinomio homogéneo h junto con su dirección de hiperbolicidad e."""
    poly: MultiPoly
    e: np.ndarray
    he: float
    degree: int
    kind: str = 'custom'
    params: dict = field(default_factory=dict)

    @property
    def nvars(self):
        return self.poly.nvars

    def descriptor(self):
        """Descriptor JSON equivalente (el de `custom` incluye los términos)."""
        if self.kind == 'custom':
            return {
                'kind': 'custom',
                'terms': [[list(exps), coeff] for exps, coeff in sorted(self.poly.terms.items())],
                'e': [float(v) for v in self.e],
            }
        return {'kind': self.kind, **self.params}


@dataclass(frozen=True, eq=False)
class ConeVector:
    """Punto del cono cerrado con su espectro ya calculado."""
    coords: np.ndarray
    eigs: tuple
    trace: float
    rank: int

    @property
    def lambda_max(self):
        return self.eigs[0] if self.eigs else 0.0

    @property
    def lambda_min(self):
        return self.eigs[-1] if self.eigs else 0.0

    @property
    def norm(self):
        return max(self.lambda_max, -self.lambda_min)
