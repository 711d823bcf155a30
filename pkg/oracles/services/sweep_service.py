"""
Barridos de oráculos sobre contextos aleatorios con semilla.
"""
import logging
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from core.utils.conf import weaver_setting
from core.utils.constants import LEMMA_SETS, SWEEP_FAMILIES
from core.utils.exceptions import DomainError, NotHyperbolicError, RankDegeneracyError
from hyperbolic.services.form_service import FormService
from hyperbolic.services.spectral_service import SpectralService
from oracles.models.result import SweepSummary
from oracles.services.inequality_service import InequalityService
from polyalg.services.polynomial_service import PolynomialService

logger = logging.getLogger(__name__)

DEFAULT_CONTEXTS = 200
MAX_DRAWS = 100
INTERIOR_MARGIN = 0.1
PERTURBATION = 0.4
WEIGHT_RANGE = (0.2, 1.5)


class SweepService:

    # ---------- contextos ----------
    @staticmethod
    def _rank_one(form, rng):
        """Generador de rango uno del cono cerrado."""
        n = form.params['n']
        if form.kind == 'lorentz':
            w = rng.standard_normal(n - 1)
            return np.concatenate([[1.0], w / np.linalg.norm(w)])
        if form.kind == 'symdet':
            w = rng.standard_normal(n)
            return FormService.symdet_encode(np.outer(w, w))
        raise DomainError("No rank-one generator for this kind", kind=form.kind)

    @classmethod
    def _direction(cls, form, rng):
        """Combinación positiva de 1..grado generadores de rango uno."""
        count = int(rng.integers(1, form.degree + 1))
        weights = rng.uniform(*WEIGHT_RANGE, size=count)
        if form.kind in ('product', 'elemsym'):
            w = np.zeros(form.nvars)
            w[rng.choice(form.nvars, size=count, replace=False)] = weights
            return w
        return sum(c * cls._rank_one(form, rng) for c in weights)

    @staticmethod
    def _interior_point(form, rng):
        for _ in range(MAX_DRAWS):
            x = form.e + PERTURBATION * rng.standard_normal(form.nvars)
            if SpectralService.lambda_min(form, x) >= INTERIOR_MARGIN:
                return x
        raise DomainError("Could not draw an interior point", kind=form.kind)

    @classmethod
    def random_context(cls, form, rng):
        """PhiEtaContext con x interior y u, v combinaciones de generadores."""
        for attempt in range(MAX_DRAWS):
            try:
                x = cls._interior_point(form, rng)
                u, v = cls._direction(form, rng), cls._direction(form, rng)
                return InequalityService.build_context(form, x, u, v)
            except (RankDegeneracyError, NotHyperbolicError) as exc:
                logger.debug("Redrawing context after %s (attempt %s)", exc.code, attempt + 1)
        raise DomainError("Could not draw a well-conditioned context", kind=form.kind, attempts=MAX_DRAWS)

    # ---------- checks por contexto ----------
    @staticmethod
    def _ratio(ctx):
        """rho = h(x) / D_u h(x)."""
        return ctx.du_values[0] / ctx.du_values[1]

    @classmethod
    def _run_context(cls, ctx, lemmas, rng, tol):
        service = InequalityService
        degree, rank = ctx.form.degree, ctx.rank
        results = []
        if 'correlation' in lemmas:
            results += [service.check_correlation(ctx, k, tol) for k in range(1, degree + 1)]
        if 'trec' in lemmas:
            results += [service.check_trec(ctx, k, tol) for k in range(1, rank + 2)]
        if 'post' in lemmas:
            results.append(service.check_post(ctx, tol))
        if 'stepped' in lemmas:
            results += [service.check_stepped(ctx, k, tol) for k in range(2, rank + 1)]
        if 'fk1' in lemmas:
            for r in sorted({rank, degree}):
                results += [service.check_fk1(ctx, k, r, tol) for k in range(1, r + 1)]
        if 'newton' in lemmas:
            results.append(service.check_newton(ctx, tol))

        # los sorteos de (delta, mu) se hacen siempre para no depender de `lemmas`
        rho = cls._ratio(ctx)
        draws = {
            'stayabove': (rng.uniform(0.5, 2.5), rho * rng.uniform(0.3, 1.0)),
            'stayabove_margin': (rng.uniform(1.0, 2.0), rho * rng.uniform(0.3, 1.0)),
            'eng2': (rng.uniform(1.05, 4.0), rho * rng.uniform(0.6, 1.0)),
        }
        if 'stayabove' in lemmas:
            delta, mu = draws['stayabove']
            results.append(service.check_stayabove(ctx.form, ctx.x, ctx.u, delta, mu, rank, tol))
        if 'stayabove_margin' in lemmas:
            delta, mu = draws['stayabove_margin']
            results.append(service.check_stayabove_margin(ctx.form, ctx.x, ctx.u, delta, mu, rank, tol))
        if 'eng2' in lemmas:
            delta, mu = draws['eng2']
            results.append(service.check_eng2(ctx.form, ctx.x, ctx.u, ctx.v, delta, mu, rank, tol))
        return results

    @staticmethod
    def _resolve(lemmas, families):
        lemmas = tuple(LEMMA_SETS if lemmas is None else lemmas)
        families = tuple(SWEEP_FAMILIES if families is None else families)
        unknown = [name for name in lemmas if name not in LEMMA_SETS]
        if unknown:
            raise DomainError("Unknown lemma", lemmas=unknown, known=list(LEMMA_SETS))
        unknown = [name for name in families if name not in SWEEP_FAMILIES]
        if unknown:
            raise DomainError("Unknown form family", families=unknown, known=list(SWEEP_FAMILIES))
        return lemmas, families

    @classmethod
    def run_sweep(cls, lemmas=None, families=None, contexts=None, seed=None, tol=None, jobs=None):
        """
        Corre los lemas pedidos sobre `contexts` contextos por familia.

        El contexto i de la familia f usa default_rng([seed, f, i]), así el
        resultado no depende de `jobs`.
        """
        lemmas, families = cls._resolve(lemmas, families)
        contexts = DEFAULT_CONTEXTS if contexts is None else contexts
        seed = weaver_setting('SEED') if seed is None else seed
        jobs = weaver_setting('JOBS') if jobs is None else jobs
        if contexts < 1:
            raise DomainError("contexts must be positive", contexts=contexts)
        forms = {name: FormService.builtin_form(SWEEP_FAMILIES[name]) for name in families}
        family_index = {name: list(SWEEP_FAMILIES).index(name) for name in families}

        def task(item):
            name, i = item
            rng = np.random.default_rng([seed, family_index[name], i])
            ctx = cls.random_context(forms[name], rng)
            results = cls._run_context(ctx, lemmas, rng, tol)
            for result in results:
                if result.failed:
                    result.detail.update(family=name, context=i, **cls.context_point(ctx))
            return results

        items = [(name, i) for name in families for i in range(contexts)]
        summary = SweepSummary()
        with ThreadPoolExecutor(max_workers=max(1, jobs)) as executor:
            for results in executor.map(task, items):
                for result in results:
                    summary.add(result)
        logger.info(
            "Sweep of %s contexts x %s families: %s checked, %s failed, worst slack %s",
            contexts, len(families), summary.checked, summary.failed, summary.worst_slack,
        )
        return summary

    @staticmethod
    def context_point(ctx):
        """Coordenadas del contexto para reportes."""
        return {
            'x': [float(v) for v in ctx.x],
            'u': [float(v) for v in ctx.u],
            'v': [float(v) for v in ctx.v],
            'rank': ctx.rank,
            'h': float(PolynomialService.poly_eval(ctx.form.poly, ctx.x)),
        }
