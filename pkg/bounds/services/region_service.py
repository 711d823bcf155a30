"""
Región U_r de pares (delta, mu).

La restricción principal es delta - 1 >= dura_rhs(delta, mu, r). Con
x = delta / (r mu) y L = log1p(1/x) el cociente de potencias se escribe
como expm1(-(r-1)L) / ((1+x) expm1(-rL)), estable para x grande y chico.
"""
import logging
import math

import numpy as np
from scipy import optimize

from bounds.models.query import INF
from core.utils.conf import weaver_setting
from core.utils.exceptions import DomainError

logger = logging.getLogger(__name__)

SCAN_POINTS = 48
DENSE_SCAN_POINTS = 4096
MU_CEILING = 1e300
NUDGE_ATTEMPTS = 80


class RegionService:

    @staticmethod
    def dura_rhs(delta, mu, r):
        """Lado derecho de la restricción; acepta arreglos en mu."""
        mu = np.asarray(mu, dtype=float)
        if r == INF:
            return delta / mu
        if r == 1:
            return np.zeros_like(mu)
        x = delta / (r * mu)
        log_ratio = np.log1p(1.0 / x)
        ratio = np.expm1(-(r - 1) * log_ratio) / ((1.0 + x) * np.expm1(-r * log_ratio))
        return (delta / mu) * ratio

    @staticmethod
    def _check_positive(delta, mu):
        if not (delta > 0 and mu > 0):
            raise DomainError("delta and mu must be positive", delta=delta, mu=mu)

    @classmethod
    def in_U_r(cls, delta, mu, r):
        cls._check_positive(delta, mu)
        if r == INF:
            return delta > 1 and mu >= delta / (delta - 1)
        if not delta - 1 >= float(cls.dura_rhs(delta, mu, r)):
            return False
        return mu > 1 or (1 <= delta <= 2 and mu > 1 - delta / r)

    @staticmethod
    def branch_lower(delta, r, branch):
        """Cota inferior abierta de mu en cada rama; None si la rama no aplica."""
        if branch == 'A':
            return 1.0
        if branch == 'B':
            if not 1 <= delta <= 2:
                return None
            return max(0.0, 1.0 - delta / r)
        raise DomainError("Unknown branch", branch=branch)

    @classmethod
    def minimal_mu(cls, delta, r, branch):
        """
        Menor mu factible para delta en la rama dada.

        Devuelve (mu, open_lower, monotone) o None si la rama es vacía.
        `open_lower` indica que el ínfimo es la cota abierta de la rama.
        """
        if r == INF:
            if delta <= 1:
                return None
            return delta / (delta - 1), False, True
        lower = cls.branch_lower(delta, r, branch)
        if lower is None:
            return None

        def slack(mu):
            return delta - 1 - cls.dura_rhs(delta, mu, r)

        start = lower * (1 + 1e-12) + 1e-12
        if float(slack(start)) >= 0:
            return lower, True, True
        high = max(2 * start, 1.0)
        while float(slack(high)) < 0:
            high *= 2
            if high > MU_CEILING:
                return None

        grid = np.geomspace(start, high, SCAN_POINTS)
        feasible = slack(grid) >= 0
        first = int(np.argmax(feasible))
        monotone = bool(np.all(feasible[first:]))
        if not monotone:
            logger.warning("Constraint not monotone in mu at delta=%s; using dense scan", delta)
            grid = np.geomspace(start, high, DENSE_SCAN_POINTS)
            feasible = slack(grid) >= 0
            first = int(np.argmax(feasible))
        if first == 0:
            return float(grid[0]), False, monotone
        tol = weaver_setting('BISECTION_TOL') * max(1.0, float(grid[first]))
        root = optimize.brentq(lambda mu: float(slack(mu)), grid[first - 1], grid[first], xtol=tol)
        return root, False, monotone

    @classmethod
    def feasible_witness(cls, delta, mu, r):
        """Empuja mu hacia arriba hasta que (delta, mu) esté exactamente en U_r."""
        step = 1e-12 * max(1.0, abs(mu))
        candidate = mu if mu > 0 else step
        for _ in range(NUDGE_ATTEMPTS):
            if cls.in_U_r(delta, candidate, r):
                return candidate
            candidate = max(mu, 0.0) + step
            step *= 2
        return None

    @staticmethod
    def stayabove_margin(delta, mu, r):
        """(1 + delta/(mu r))^(r-1) * (1 + delta/(mu r) - 1/mu); límite exponencial si r es infinito."""
        if r == INF:
            return math.exp(delta / mu) * (1 - 1 / mu)
        x = delta / (mu * r)
        return (1 + x) ** (r - 1) * (1 + x - 1 / mu)
