"""
Validación de hipótesis y generación de instancias aleatorias.
"""
import logging

import numpy as np
from scipy import linalg

from bounds.models.query import INF
from core.utils.conf import weaver_setting
from core.utils.exceptions import InfeasibleSpecError, RankDegeneracyError
from hyperbolic.services.form_service import FormService
from hyperbolic.services.spectral_service import SpectralService
from partition.models.instance import HypothesisCheck, Instance, ValidationReport

logger = logging.getLogger(__name__)

MAX_DRAWS = 200
TRACE_SLACK = 1e-9
RESOLUTION_TOL = 1e-9


class InstanceService:

    @classmethod
    def validate_instance(cls, inst, tol=None):
        """Una entrada por hipótesis con la holgura del peor vector (índices desde 1)."""
        tol = weaver_setting('CONE_TOL') if tol is None else tol
        cone_slack, cone_index = np.inf, None
        trace_slack, trace_index = np.inf, None
        worst_rank, rank_index = 0, None
        degenerate = None
        for index, u in enumerate(inst.vectors, start=1):
            eigs = SpectralService.eigenvalues(inst.form, u)
            scale = max(1.0, abs(eigs[0]), abs(eigs[-1]))
            slack = eigs[-1] + tol * scale
            if slack < cone_slack:
                cone_slack, cone_index = slack, index
            slack = inst.eps + TRACE_SLACK - sum(eigs)
            if slack < trace_slack:
                trace_slack, trace_index = slack, index
            try:
                rank = SpectralService.rank(inst.form, u, eigs)
            except RankDegeneracyError as exc:
                # sin rango confiable la hipótesis no se puede dar por cumplida
                rank = exc.payload['by_spectrum']
                if degenerate is None:
                    degenerate = index
            if rank > worst_rank:
                worst_rank, rank_index = rank, index

        rank_slack = None if inst.r == INF else float(inst.r - worst_rank)
        rank_passed = degenerate is None and (rank_slack is None or rank_slack >= 0)
        if degenerate is not None:
            logger.info("Rank routes disagree on vector %d", degenerate)
            rank_index = degenerate
        difference = float(np.max(np.abs(inst.total - inst.form.e)))
        resolution_slack = RESOLUTION_TOL * max(1.0, float(np.max(np.abs(inst.form.e)))) - difference
        checks = (
            HypothesisCheck('cone', cone_slack >= 0, float(cone_slack), cone_index),
            HypothesisCheck('trace', trace_slack >= 0, float(trace_slack), trace_index),
            HypothesisCheck('rank', rank_passed, rank_slack, rank_index),
            HypothesisCheck('resolution', resolution_slack >= 0, float(resolution_slack)),
        )
        report = ValidationReport(checks)
        if not report.passed:
            logger.info("Instance fails %s", ', '.join(check.name for check in report.failures))
        return report

    # ---------- generación ----------
    @staticmethod
    def _whiten(w):
        """Columnas con sum_i w_i w_i^T = I."""
        values, basis = linalg.eigh(w @ w.T)
        if values[0] <= 1e-12 * values[-1]:
            return None
        return basis @ np.diag(values ** -0.5) @ basis.T @ w

    @classmethod
    def _symdet_vectors(cls, spec, rng):
        columns = spec.m * spec.rank
        if columns < spec.n:
            raise InfeasibleSpecError("Too few columns to span the identity", n=spec.n, columns=columns)
        for attempt in range(MAX_DRAWS):
            w = cls._whiten(rng.standard_normal((spec.n, columns)))
            if w is None:
                continue
            # vector j: columnas j*rank .. j*rank + rank - 1
            blocks = w.reshape(spec.n, spec.m, spec.rank)
            traces = np.sum(blocks ** 2, axis=(0, 2))
            if traces.max() <= spec.eps:
                if attempt:
                    logger.warning("Rejected %s draws above the trace cap", attempt)
                return [FormService.symdet_encode(blocks[:, j, :] @ blocks[:, j, :].T) for j in range(spec.m)]
        raise InfeasibleSpecError("No draw met the trace cap", eps=spec.eps, attempts=MAX_DRAWS)

    @staticmethod
    def _product_vectors(spec, rng):
        support = np.zeros((spec.m, spec.n), dtype=bool)
        for j in range(spec.m):
            support[j, [(j + t) % spec.n for t in range(spec.rank)]] = True
        if not np.all(support.any(axis=0)):
            raise InfeasibleSpecError("Some coordinate is not covered", n=spec.n, m=spec.m, rank=spec.rank)
        attempts = 1 if spec.split == 'equal' else MAX_DRAWS
        for attempt in range(attempts):
            values = np.zeros((spec.m, spec.n))
            for c in range(spec.n):
                holders = np.flatnonzero(support[:, c])
                if spec.split == 'equal':
                    values[holders, c] = 1.0 / holders.size
                else:
                    values[holders, c] = rng.dirichlet(np.ones(holders.size))
            if values.sum(axis=1).max() <= spec.eps:
                if attempt:
                    logger.warning("Rejected %s draws above the trace cap", attempt)
                return list(values)
        raise InfeasibleSpecError("No split met the trace cap", eps=spec.eps, split=spec.split)

    @classmethod
    def random_instance(cls, spec):
        if spec.m * spec.eps < spec.n:
            raise InfeasibleSpecError(
                "Trace caps cannot add up to tr(e)",
                m=spec.m, eps=spec.eps, trace=spec.n,
            )
        seed = weaver_setting('SEED') if spec.seed is None else spec.seed
        rng = np.random.default_rng(seed)
        form = FormService.builtin_form({'kind': spec.family, 'n': spec.n})
        if spec.family == 'symdet':
            vectors = cls._symdet_vectors(spec, rng)
        else:
            vectors = cls._product_vectors(spec, rng)
        return Instance.build(form, vectors, k=spec.k, eps=spec.eps, r=spec.rank)
