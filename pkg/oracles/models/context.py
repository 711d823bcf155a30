from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True, eq=False)
class PhiEtaContext:
    """
    Forma h, punto interior x y direcciones u, v del cono cerrado.

    `du_values[k]` guarda D_u^k h(x) y `dv_du_values[k]` guarda
    D_v D_u^k h(x), para k = 0..grado(h) + 1.
    """
    form: object
    x: np.ndarray
    u: np.ndarray
    v: np.ndarray
    rank: int
    du_values: tuple
    dv_du_values: tuple

    @property
    def h_x(self):
        return self.du_values[0]

    @property
    def dv_h(self):
        return self.dv_du_values[0]
