"""
Reparto voraz por familias compatibles en el espacio producto.

Con g(y) = h(y^1)...h(y^k), asignar u_j a la parte p equivale a fijar
w_j = k * u_j en el bloque p. Mientras un índice está pendiente su w_j
es la media (u_j, ..., u_j). En cada paso se elige la parte que minimiza
la mayor raíz del polinomio característico mixto condicional; esa raíz
nunca sube de un paso al siguiente.
"""
import itertools
import logging
import time
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from bounds.services.delta_service import DeltaService
from core.utils.conf import weaver_setting
from core.utils.exceptions import CapExceededError, NotAPartitionError
from hyperbolic.services.form_service import FormService
from hyperbolic.services.spectral_service import SpectralService
from mixedchar.services.mixed_service import MixedService
from partition.models.report import (
    NORM_SLACK,
    BruteForceResult,
    PartCheck,
    PartitionReport,
    VerificationReport,
)
from polyalg.services.polynomial_service import PolynomialService
from polyalg.services.roots_service import RootService

logger = logging.getLogger(__name__)

TIE_TOL = 1e-9


class GreedyService:

    @staticmethod
    def _lambda_max(poly, form):
        return RootService.largest_root(MixedService.along_direction(poly, form))

    @staticmethod
    def _suffixes(poly, means):
        """suffixes[j] = (1 - D_{mean_j}) ... (1 - D_{mean_{m-1}}) g, con suffixes[m] = g."""
        suffixes = [poly]
        for w in reversed(means):
            suffixes.append(PolynomialService.shift_operator(suffixes[-1], w))
        suffixes.reverse()
        return suffixes

    @staticmethod
    def _pick(values):
        """Menor lambda_max; empates dentro de TIE_TOL van a la parte de menor índice."""
        best = min(values)
        limit = best + TIE_TOL * max(1.0, abs(best))
        return next(p for p, value in enumerate(values) if value <= limit)

    @classmethod
    def greedy_partition(cls, inst, jobs=None, shuffle=False, seed=None, timing=False):
        started = time.perf_counter()
        jobs = weaver_setting('JOBS') if jobs is None else jobs
        k, m = inst.k, inst.m
        g = FormService.product_form(inst.form, k)

        order = list(range(m))
        if shuffle:
            rng = np.random.default_rng(weaver_setting('SEED') if seed is None else seed)
            order = [int(i) for i in rng.permutation(m)]

        means = [np.tile(inst.vectors[i], k) for i in order]
        candidates = [
            [k * FormService.embed_block(inst.vectors[i], p, k) for p in range(1, k + 1)]
            for i in order
        ]
        suffixes = cls._suffixes(g.poly, means)
        trajectory = [cls._lambda_max(suffixes[0], g)]
        assignment = {}
        decided = []

        with ThreadPoolExecutor(max_workers=max(1, jobs)) as executor:
            for step, index in enumerate(order):
                base = MixedService.apply_operators(suffixes[step + 1], decided)

                def evaluate(w, base=base):
                    return cls._lambda_max(PolynomialService.shift_operator(base, w), g)

                values = list(executor.map(evaluate, candidates[step]))
                part = cls._pick(values)
                assignment[index] = part + 1
                decided.append(candidates[step][part])
                trajectory.append(values[part])
                logger.debug(
                    "Vector %s -> part %s (lambda_max %.12g, candidates %s)",
                    index + 1, part + 1, values[part], values,
                )

        parts = tuple(
            tuple(i + 1 for i in range(m) if assignment[i] == p) for p in range(1, k + 1)
        )
        verification = cls.verify_partition(inst, parts)
        return PartitionReport(
            parts=parts,
            norms=tuple(check.norm for check in verification.parts),
            bound=verification.bound,
            trajectory=tuple(trajectory),
            order=tuple(i + 1 for i in order),
            outside_theorem=k < 2,
            wall_time=time.perf_counter() - started if timing else None,
        )

    @staticmethod
    def _check_partition(parts, m, k):
        if len(parts) != k:
            raise NotAPartitionError("Wrong number of parts", expected=k, received=len(parts))
        seen = [index for part in parts for index in part]
        if sorted(seen) != list(range(1, m + 1)):
            raise NotAPartitionError(
                "Parts must cover 1..m exactly once",
                m=m, repeated=sorted({i for i in seen if seen.count(i) > 1}),
                missing=sorted(set(range(1, m + 1)) - set(seen)),
            )

    @classmethod
    def verify_partition(cls, inst, parts):
        """Normas de cada suma parcial frente a (1/k) delta(k eps, m, k r)."""
        parts = tuple(tuple(int(i) for i in part) for part in parts)
        cls._check_partition(parts, inst.m, inst.k)
        bound = DeltaService.partition_bound(inst.eps, inst.m, inst.r, inst.k)
        checks = []
        for number, members in enumerate(parts, start=1):
            total = np.zeros(inst.form.nvars)
            for i in members:
                total = total + inst.vectors[i - 1]
            eigs = SpectralService.eigenvalues(inst.form, total)
            norm = max(eigs[0], -eigs[-1])
            checks.append(PartCheck(
                part=number,
                members=members,
                total=tuple(float(v) for v in total),
                eigenvalues=tuple(eigs),
                norm=norm,
                within_bound=norm <= bound + NORM_SLACK,
            ))
        return VerificationReport(parts=tuple(checks), bound=bound)

    @classmethod
    def brute_force_partition(cls, inst, cap=None):
        """Mínimo exacto de la mayor norma sobre las k^m asignaciones (oráculo de pruebas)."""
        cap = weaver_setting('BRUTE_FORCE_CAP') if cap is None else cap
        k, m = inst.k, inst.m
        # el primer índice va fijo a la parte 1: las partes son intercambiables
        assignments = k ** (m - 1)
        if k ** m > cap:
            raise CapExceededError("Too many assignments for brute force", k=k, m=m, cap=cap)

        cache = {}

        def norm_of(mask):
            if mask not in cache:
                total = np.zeros(inst.form.nvars)
                for i in range(m):
                    if mask >> i & 1:
                        total = total + inst.vectors[i]
                cache[mask] = SpectralService.spectral_norm(inst.form, total) if mask else 0.0
            return cache[mask]

        best, best_masks = np.inf, None
        for tail in itertools.product(range(k), repeat=m - 1):
            masks = [0] * k
            for i, p in enumerate((0,) + tail):
                masks[p] |= 1 << i
            worst = 0.0
            for mask in masks:
                worst = max(worst, norm_of(mask))
                if worst >= best:
                    break
            if worst < best:
                best, best_masks = worst, masks
        parts = tuple(
            tuple(i + 1 for i in range(m) if mask >> i & 1) for mask in best_masks
        )
        logger.debug("Brute force over %s assignments, %s distinct sums", assignments, len(cache))
        return BruteForceResult(parts=parts, norm=float(best), assignments=assignments)
