"""
Evaluación numérica de delta(eps, m, r) y sus formas cerradas.

Para cada delta de una malla logarítmica se busca el menor mu factible en
cada rama de U_r, se evalúa el objetivo y se refina alrededor del mejor
punto de la malla. El valor devuelto siempre viene de un testigo que
cumple in_U_r, por lo que es una cota superior del ínfimo.
"""
import functools
import logging
import math

import numpy as np
from scipy import optimize

from bounds.models.query import INF, BoundQuery, DeltaResult
from bounds.services.region_service import RegionService
from core.utils.conf import weaver_setting
from core.utils.exceptions import DomainError, EmptyFeasibleSetError

logger = logging.getLogger(__name__)

GRID_FLOOR = 1e-9


class DeltaService:

    # ---------- objetivo ----------
    @staticmethod
    def objective(query, delta, mu):
        if query.m == INF:
            return query.eps * mu + delta
        a = 1 - 1 / query.m
        return (query.eps * mu + a * delta) / (a + mu / query.m)

    @staticmethod
    def delta_grid(points, delta_max):
        return 1.0 + np.geomspace(GRID_FLOOR, delta_max - 1.0, points)

    @classmethod
    def _evaluate(cls, query, delta, branch, width):
        """Mejor (valor, mu, monotone) para un delta fijo, o None si la rama es vacía."""
        found = RegionService.minimal_mu(delta, query.r, branch)
        if found is None:
            return None
        mu_min, _, monotone = found
        mu = RegionService.feasible_witness(delta, mu_min, query.r)
        if mu is None:
            return None
        if query.m != INF:
            a = 1 - 1 / query.m
            if a > 0 and query.eps < delta / query.m:
                # objetivo decreciente en mu: el ínfimo es el límite m*eps
                target = query.m * a * (delta - query.m * query.eps) / width
                if target > mu:
                    mu = RegionService.feasible_witness(delta, target, query.r) or mu
        return cls.objective(query, delta, mu), mu, monotone

    @classmethod
    def _refine(cls, query, deltas, index, branch, width):
        low = deltas[max(index - 1, 0)]
        high = deltas[min(index + 1, len(deltas) - 1)]
        if high <= low:
            return None

        def score(delta):
            found = cls._evaluate(query, delta, branch, width)
            return found[0] if found else math.inf

        result = optimize.minimize_scalar(score, bounds=(low, high), method='bounded', options={'xatol': width})
        found = cls._evaluate(query, float(result.x), branch, width)
        if found is None:
            return None
        return float(result.x), found

    @classmethod
    def _search_branch(cls, query, deltas, branch, width):
        evaluated = [cls._evaluate(query, float(d), branch, width) for d in deltas]
        scores = np.array([item[0] if item else np.inf for item in evaluated])
        if not np.any(np.isfinite(scores)):
            return None
        index = int(np.argmin(scores))
        value, mu, _ = evaluated[index]
        delta = float(deltas[index])
        monotone = all(item[2] for item in evaluated if item)
        boundary_hit = branch != 'B' and index == len(deltas) - 1

        refined = cls._refine(query, deltas, index, branch, width)
        if refined is not None and refined[1][0] < value:
            delta, (value, mu, _) = refined
        return DeltaResult(
            value=float(value), delta=delta, mu=float(mu), branch=branch,
            width=width, boundary_hit=boundary_hit, monotone=monotone,
        )

    @classmethod
    def delta_bound(cls, query):
        return _cached_delta_bound(
            query.eps, query.m, query.r,
            weaver_setting('DELTA_GRID_POINTS'),
            weaver_setting('DELTA_MAX'),
            weaver_setting('DELTA_REFINE_WIDTH'),
        )

    @classmethod
    def _compute(cls, query, points, delta_max, width):
        grid = cls.delta_grid(points, delta_max)
        if query.r == INF:
            branches = {'inf': grid}
        else:
            inner = np.unique(np.append(grid[grid <= 2.0], 2.0))
            branches = {'A': grid, 'B': inner}

        best = None
        for branch, deltas in branches.items():
            candidate = cls._search_branch(query, deltas, branch, width)
            if candidate is not None and (best is None or candidate.value < best.value):
                best = candidate
        if best is None:
            raise EmptyFeasibleSetError(
                "No feasible (delta, mu) inside the search box",
                eps=query.eps, m=query.m, r=query.r, delta_max=delta_max,
            )
        if best.boundary_hit:
            logger.warning("delta search hit the box boundary delta=%s", delta_max)
        logger.debug("delta(%s, %s, %s) = %.12g at branch %s", query.eps, query.m, query.r, best.value, best.branch)
        return best

    # ---------- formas cerradas ----------
    @staticmethod
    def closed_form_finite_m(eps, m):
        """(1 - 1/m + sqrt(eps - (1/m)(1 - 1/m)))^2; None si eps < 1/m."""
        a = 1 - 1 / m
        radicand = eps - a / m
        if radicand < 0:
            raise DomainError("Closed form radicand is negative", eps=eps, m=m)
        if eps < 1 / m:
            return None
        return (a + math.sqrt(radicand)) ** 2

    @staticmethod
    def closed_form_unbounded(eps):
        return (1 + math.sqrt(eps)) ** 2

    @staticmethod
    def closed_form_rank_two(eps):
        if eps > 0.5:
            return 2.0
        return 1 + 2 * math.sqrt(eps) * math.sqrt(1 - eps)

    @classmethod
    def delta_closed_form(cls, query):
        if query.r == INF and query.m == INF:
            return cls.closed_form_unbounded(query.eps)
        if query.r == INF:
            return cls.closed_form_finite_m(query.eps, query.m)
        if query.m == INF and query.r == 2:
            return cls.closed_form_rank_two(query.eps)
        return None

    @classmethod
    def delta_upper_r(cls, eps, r):
        if not eps > 0:
            raise DomainError("eps must be positive", eps=eps)
        if r == INF:
            return cls.closed_form_unbounded(eps)
        if eps <= r / (r + 1):
            return 1 + 2 * math.sqrt(eps) * math.sqrt(1 - eps / r) + (r - 1) / r * eps
        return 2 + eps * (1 - 2 / r)

    @staticmethod
    def mss_bound(eps, r):
        if not (eps > 0 and 0 < r < INF):
            raise DomainError("mss_bound needs eps > 0 and finite r >= 1", eps=eps, r=r)
        return (1 + math.sqrt(r * eps)) ** 2 / r

    @classmethod
    def partition_result(cls, eps, m, r, k):
        if not k >= 1:
            raise DomainError("Part count must be positive", k=k)
        return cls.delta_bound(BoundQuery(eps=k * eps, m=m, r=k * r))

    @classmethod
    def partition_bound(cls, eps, m, r, k):
        """(1/k) delta(k eps, m, k r)."""
        return cls.partition_result(eps, m, r, k).value / k


@functools.lru_cache(maxsize=512)
def _cached_delta_bound(eps, m, r, points, delta_max, width):
    return DeltaService._compute(BoundQuery(eps=eps, m=m, r=r), points, delta_max, width)
