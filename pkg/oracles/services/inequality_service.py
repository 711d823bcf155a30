"""
Oráculos numéricos de las desigualdades de correlación.

Con eta_k = D_u^k h / h (x) y Phi_k = -D_v(D_u^k h / h)(x), cada check
devuelve una holgura con signo: positiva cuando la desigualdad se cumple.
Pasa si la holgura es >= -SLACK_TOL * escala.
"""
import logging
import math

import numpy as np

from bounds.services.region_service import RegionService
from core.utils.conf import weaver_setting
from core.utils.exceptions import DomainError, NotInConeError
from hyperbolic.services.spectral_service import SpectralService
from oracles.models.context import PhiEtaContext
from oracles.models.result import CheckResult, CheckStatus
from polyalg.services.polynomial_service import PolynomialService

logger = logging.getLogger(__name__)

FINITE_DIFFERENCE_STEP = 1e-5


def _verdict(lemma, slack, scale, tol=None, k=None, **detail):
    tol = weaver_setting('SLACK_TOL') if tol is None else tol
    status = CheckStatus.PASS if slack >= -tol * max(1.0, scale) else CheckStatus.FAIL
    if status == CheckStatus.FAIL:
        logger.info("%s fails with slack %.3g (k=%s)", lemma, slack, k)
    return CheckResult(lemma, status, float(slack), k, detail)


class InequalityService:

    # ---------- contexto ----------
    @staticmethod
    def build_context(form, x, u, v, tol=None):
        tol = weaver_setting('CONE_TOL') if tol is None else tol
        x = PolynomialService.as_point(x, form.nvars)
        u = PolynomialService.as_point(u, form.nvars, 'u')
        v = PolynomialService.as_point(v, form.nvars, 'v')
        if not SpectralService.in_cone(form, x, closed=False, tol=tol):
            raise DomainError("x must lie strictly inside the cone", lambda_min=SpectralService.lambda_min(form, x))
        for name, w in (('u', u), ('v', v)):
            if np.any(w) and not SpectralService.in_cone(form, w, closed=True, tol=tol):
                raise NotInConeError(f"{name} is outside the closed cone", lambda_min=SpectralService.lambda_min(form, w))

        du_values, dv_du_values = [], []
        current = form.poly
        for _ in range(form.degree + 2):
            du_values.append(PolynomialService.poly_eval(current, x))
            dv_du_values.append(PolynomialService.poly_eval(PolynomialService.directional_derivative(current, v), x))
            current = PolynomialService.directional_derivative(current, u)
        for array in (x, u, v):
            array.setflags(write=False)
        return PhiEtaContext(
            form=form, x=x, u=u, v=v,
            rank=SpectralService.rank(form, u),
            du_values=tuple(du_values), dv_du_values=tuple(dv_du_values),
        )

    @staticmethod
    def eta(ctx, k):
        if k >= len(ctx.du_values):
            return 0.0
        return ctx.du_values[k] / ctx.h_x

    @staticmethod
    def phi(ctx, k):
        """(D_u^k h D_v h - D_v D_u^k h h) / h^2."""
        if k >= len(ctx.du_values):
            return 0.0
        return (ctx.du_values[k] * ctx.dv_h - ctx.dv_du_values[k] * ctx.h_x) / ctx.h_x ** 2

    @staticmethod
    def phi_finite_difference(ctx, k, step=FINITE_DIFFERENCE_STEP):
        """-D_v(D_u^k h / h) por diferencia central."""
        derivative = PolynomialService.iterated_derivative(ctx.form.poly, ctx.u, k)

        def ratio(point):
            return PolynomialService.poly_eval(derivative, point) / PolynomialService.poly_eval(ctx.form.poly, point)

        return -(ratio(ctx.x + step * ctx.v) - ratio(ctx.x - step * ctx.v)) / (2 * step)

    @classmethod
    def _phi_scale(cls, ctx):
        return abs(cls.eta(ctx, 1) * ctx.dv_h / ctx.h_x)

    @classmethod
    def _phi_one_vanishes(cls, ctx, tol=None):
        tol = weaver_setting('SLACK_TOL') if tol is None else tol
        return abs(cls.phi(ctx, 1)) <= tol * max(1.0, cls._phi_scale(ctx))

    # ---------- correlación ----------
    @classmethod
    def check_correlation(cls, ctx, k, tol=None):
        """D_u^k h D_v h - D_u^k D_v h h >= 0, normalizada por h(x)^2."""
        slack = cls.phi(ctx, k)
        return _verdict('correlation', slack, abs(cls.eta(ctx, k) * ctx.dv_h / ctx.h_x), tol, k)

    @classmethod
    def check_trec(cls, ctx, k, tol=None):
        if not 1 <= k <= ctx.rank + 1:
            return CheckResult('trec', CheckStatus.SKIPPED, k=k, detail={'rank': ctx.rank})
        eta = [cls.eta(ctx, j) for j in (k - 1, k, k + 1)]
        phi = [cls.phi(ctx, j) for j in (k - 1, k, k + 1)]
        bound = (
            2 * eta[1] / eta[0] * phi[1]
            + (-2 * eta[1] ** 2 / eta[0] ** 2 + eta[2] / eta[0]) * phi[0]
        )
        return _verdict('trec', bound - phi[2], max(abs(bound), abs(phi[2])), tol, k)

    @classmethod
    def check_post(cls, ctx, tol=None):
        """Phi_1 = 0 fuerza Phi_k = 0; Phi_1 > 0 fuerza Phi_k > 0, para 1 <= k <= rango."""
        values = [cls.phi(ctx, k) for k in range(1, ctx.rank + 1)]
        if not values:
            return CheckResult('post', CheckStatus.SKIPPED, detail={'rank': 0})
        scale = max(1.0, cls._phi_scale(ctx))
        if cls._phi_one_vanishes(ctx, tol):
            return _verdict('post', -max(abs(value) for value in values), scale, tol, branch='zero')
        return _verdict('post', min(values), scale, tol, branch='positive')

    @classmethod
    def check_stepped(cls, ctx, k, tol=None):
        r = ctx.rank
        if not 2 <= k <= r:
            return CheckResult('stepped', CheckStatus.SKIPPED, k=k, detail={'rank': r})
        if cls._phi_one_vanishes(ctx, tol):
            return CheckResult('stepped', CheckStatus.VACUOUS, k=k)
        previous = cls.phi(ctx, k - 1)
        ratio = cls.phi(ctx, k) / previous
        bound = k / (k - 1) * (r - k + 2) / r * cls.eta(ctx, 1)
        return _verdict('stepped', bound - ratio, max(abs(bound), abs(ratio)), tol, k)

    @classmethod
    def check_fk1(cls, ctx, k, r=None, tol=None):
        r = ctx.rank if r is None else r
        if not (1 <= k <= r and ctx.rank <= r):
            return CheckResult('fk1', CheckStatus.SKIPPED, k=k, detail={'rank': ctx.rank, 'r': r})
        if cls._phi_one_vanishes(ctx, tol):
            return CheckResult('fk1', CheckStatus.VACUOUS, k=k)
        ratio = cls.phi(ctx, k) / cls.phi(ctx, 1)
        bound = math.factorial(k) * math.comb(r, k - 1) * (cls.eta(ctx, 1) / r) ** (k - 1)
        return _verdict('fk1', bound - ratio, max(abs(bound), abs(ratio)), tol, k, r=r)

    @classmethod
    def newton_coefficients(cls, ctx):
        """a_k = (eta_k / k!) / C(r, k) de P(s) = h(x + s u) / h(x)."""
        r = ctx.rank
        return [cls.eta(ctx, k) / math.factorial(k) / math.comb(r, k) for k in range(r + 1)]

    @classmethod
    def check_newton(cls, ctx, tol=None):
        """a_k^2 - a_{k-1} a_{k+1} para 1 <= k <= r-1 y a_0 (a_1/a_0)^j - a_j para j <= r."""
        a = cls.newton_coefficients(ctx)
        slacks = [a[k] ** 2 - a[k - 1] * a[k + 1] for k in range(1, len(a) - 1)]
        slacks += [a[0] * (a[1] / a[0]) ** j - a[j] for j in range(len(a))] if len(a) > 1 else []
        if not slacks:
            return CheckResult('newton', CheckStatus.VACUOUS, detail={'rank': ctx.rank})
        scale = max(value ** 2 for value in a)
        return _verdict('newton', min(slacks), scale, tol, slacks=[float(s) for s in slacks])

    # ---------- lemas sobre (delta, mu) ----------
    @staticmethod
    def _shift_hypotheses(form, x, u, mu, r):
        """Rango de u y cociente h(x) / D_u h(x); None si no se cumplen."""
        if not SpectralService.in_cone(form, x, closed=False):
            return None
        rank = SpectralService.rank(form, u)
        if not 0 < rank <= r:
            return None
        h_x = PolynomialService.poly_eval(form.poly, x)
        du_h = PolynomialService.poly_eval(PolynomialService.directional_derivative(form.poly, u), x)
        if du_h <= 0 or h_x / du_h < mu:
            return None
        return rank, h_x, du_h

    @staticmethod
    def _minus_derivative(form, u):
        """h - D_u h."""
        return PolynomialService.shift_operator(form.poly, u, -1.0)

    @staticmethod
    def _branch_ok(delta, mu, r):
        return mu > 1 or (1 <= delta <= 2 and mu > 1 - delta / r)

    @classmethod
    def check_stayabove(cls, form, x, u, delta, mu, r=None, tol=None):
        """(h - D_u h)(x + delta u) > 0."""
        x = PolynomialService.as_point(x, form.nvars)
        u = PolynomialService.as_point(u, form.nvars, 'u')
        r = SpectralService.rank(form, u) if r is None else r
        found = cls._shift_hypotheses(form, x, u, mu, r)
        if found is None or not cls._branch_ok(delta, mu, r):
            return CheckResult('stayabove', CheckStatus.SKIPPED, detail={'delta': delta, 'mu': mu, 'r': r})
        point = x + delta * u
        value = PolynomialService.poly_eval(cls._minus_derivative(form, u), point)
        scale = abs(PolynomialService.poly_eval(form.poly, point))
        return _verdict('stayabove', value, scale, tol, delta=delta, mu=mu)

    @classmethod
    def check_stayabove_margin(cls, form, x, u, delta, mu, r=None, tol=None):
        """
        (h - D_u h)(x + delta u) >= h(x) * margin(delta, rho, r) con 1 <= delta <= 2.

        El margen se evalúa en rho = h(x) / D_u h(x), no en la cota mu: el
        término lineal del desarrollo tiene coeficiente no negativo.
        """
        x = PolynomialService.as_point(x, form.nvars)
        u = PolynomialService.as_point(u, form.nvars, 'u')
        r = SpectralService.rank(form, u) if r is None else r
        found = cls._shift_hypotheses(form, x, u, mu, r)
        if found is None or not (1 <= delta <= 2 and mu > 1 - delta / r):
            return CheckResult('stayabove_margin', CheckStatus.SKIPPED, detail={'delta': delta, 'mu': mu, 'r': r})
        _, h_x, du_h = found
        value = PolynomialService.poly_eval(cls._minus_derivative(form, u), x + delta * u)
        floor = h_x * RegionService.stayabove_margin(delta, h_x / du_h, r)
        return _verdict('stayabove_margin', value - floor, max(abs(value), abs(floor)), tol, delta=delta, mu=mu)

    @classmethod
    def check_eng2(cls, form, x, u, v, delta, mu, r=None, tol=None):
        """(h - D_u h) / D_v(h - D_u h) en x + delta u no baja de h / D_v h en x."""
        x = PolynomialService.as_point(x, form.nvars)
        u = PolynomialService.as_point(u, form.nvars, 'u')
        v = PolynomialService.as_point(v, form.nvars, 'v')
        r = SpectralService.rank(form, u) if r is None else r
        skipped = CheckResult('eng2', CheckStatus.SKIPPED, detail={'delta': delta, 'mu': mu, 'r': r})
        if not RegionService.in_U_r(delta, mu, r):
            return skipped
        found = cls._shift_hypotheses(form, x, u, mu, r)
        if found is None or SpectralService.rank(form, v) == 0:
            return skipped
        _, h_x, _ = found
        shifted = cls._minus_derivative(form, u)
        point = x + delta * u
        after = PolynomialService.poly_eval(shifted, point) / PolynomialService.poly_eval(
            PolynomialService.directional_derivative(shifted, v), point,
        )
        before = h_x / PolynomialService.poly_eval(PolynomialService.directional_derivative(form.poly, v), x)
        return _verdict('eng2', after - before, max(abs(after), abs(before)), tol, delta=delta, mu=mu)
