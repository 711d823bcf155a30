"""
Consultas espectrales contra una forma hiperbólica.

Los autovalores de x son las raíces de t -> h(te - x). Traza y rango se
calculan por dos caminos (espectro y derivadas direccionales) que deben
coincidir.
"""
import logging
import math

import numpy as np

from core.utils.conf import weaver_setting
from core.utils.exceptions import NotHyperbolicError, NotInConeError, RankDegeneracyError
from hyperbolic.models.form import ConeVector
from polyalg.services.polynomial_service import PolynomialService
from polyalg.services.roots_service import RootService

logger = logging.getLogger(__name__)

PRODUCT_IDENTITY_TOL = 1e-8
TRACE_AGREEMENT_TOL = 1e-9
DEGREE_COEFF_TOL = 1e-9


class SpectralService:

    @staticmethod
    def characteristic(form, x):
        """t -> h(te - x)."""
        x = PolynomialService.as_point(x, form.nvars)
        return PolynomialService.restrict_to_line(form.poly, -x, form.e)

    @classmethod
    def eigenvalues(cls, form, x):
        """Los d autovalores de x, con multiplicidad, en orden descendente."""
        x = PolynomialService.as_point(x, form.nvars)
        q = cls.characteristic(form, x)
        roots = RootService.real_roots(q)
        if len(roots) != form.degree:
            raise NotHyperbolicError(
                "Line restriction is not real-rooted",
                x=[float(v) for v in x], found=len(roots), degree=form.degree,
            )
        # identidad del producto en un t alejado de las raíces
        t = 1.0 + sum(abs(r) for r in roots)
        expected = math.prod(t - r for r in roots)
        value = q(t) / form.he
        if abs(value - expected) > PRODUCT_IDENTITY_TOL * abs(expected):
            raise NotHyperbolicError(
                "Eigenvalues fail the product identity",
                x=[float(v) for v in x], t=t, value=float(value), expected=expected,
            )
        return roots

    @classmethod
    def lambda_max(cls, form, x):
        return cls.eigenvalues(form, x)[0]

    @classmethod
    def lambda_min(cls, form, x):
        return cls.eigenvalues(form, x)[-1]

    @classmethod
    def trace_by_derivative(cls, form, x):
        """D_x h(e) / h(e)."""
        derivative = PolynomialService.directional_derivative(form.poly, x)
        return PolynomialService.poly_eval(derivative, form.e) / form.he

    @classmethod
    def trace(cls, form, x):
        return math.fsum(cls.eigenvalues(form, x))

    @classmethod
    def spectral_norm(cls, form, x):
        eigs = cls.eigenvalues(form, x)
        return max(eigs[0], -eigs[-1])

    @staticmethod
    def _rank_threshold(x):
        return weaver_setting('RANK_TOL') * max(1.0, float(np.linalg.norm(x)))

    @classmethod
    def rank_by_derivative(cls, form, x):
        """Grado de t -> h(e + t x): máximo k con D_x^k h no idénticamente nula."""
        x = PolynomialService.as_point(x, form.nvars)
        coeffs = np.abs(PolynomialService.restrict_to_line(form.poly, form.e, x).as_array())
        if coeffs.size == 0:
            return 0
        significant = np.flatnonzero(coeffs > DEGREE_COEFF_TOL * coeffs.max())
        return int(significant[-1])

    @classmethod
    def rank(cls, form, x, eigs=None):
        x = PolynomialService.as_point(x, form.nvars)
        if not np.any(x):
            return 0
        eigs = cls.eigenvalues(form, x) if eigs is None else eigs
        threshold = cls._rank_threshold(x)
        by_spectrum = sum(1 for value in eigs if abs(value) > threshold)
        by_derivative = cls.rank_by_derivative(form, x)
        if by_spectrum != by_derivative:
            raise RankDegeneracyError(
                "Rank characterizations disagree",
                by_spectrum=by_spectrum, by_derivative=by_derivative, x=[float(v) for v in x],
            )
        return by_spectrum

    @classmethod
    def in_cone(cls, form, x, closed=True, tol=None):
        """lambda_min >= -tol (cerrado) o > tol (abierto)."""
        tol = weaver_setting('CONE_TOL') if tol is None else tol
        eigs = cls.eigenvalues(form, x)
        scale = max(1.0, abs(eigs[0]), abs(eigs[-1]))
        if closed:
            return eigs[-1] >= -tol * scale
        return eigs[-1] > tol * scale

    @classmethod
    def make_cone_vector(cls, form, x, tol=None):
        """ConeVector con espectro, traza verificada por ambos caminos y rango."""
        tol = weaver_setting('CONE_TOL') if tol is None else tol
        x = PolynomialService.as_point(x, form.nvars)
        eigs = cls.eigenvalues(form, x)
        scale = max(1.0, abs(eigs[0]), abs(eigs[-1]))
        if eigs[-1] < -tol * scale:
            raise NotInConeError(
                "Vector is outside the closed hyperbolicity cone",
                lambda_min=eigs[-1], x=[float(v) for v in x],
            )
        trace = math.fsum(eigs)
        derivative_trace = cls.trace_by_derivative(form, x)
        if abs(trace - derivative_trace) > TRACE_AGREEMENT_TOL * max(1.0, math.fsum(abs(v) for v in eigs)):
            raise NotHyperbolicError(
                "Trace routes disagree",
                by_spectrum=trace, by_derivative=derivative_trace,
            )
        coords = x.copy()
        coords.setflags(write=False)
        return ConeVector(coords=coords, eigs=tuple(eigs), trace=trace, rank=cls.rank(form, x, eigs))
