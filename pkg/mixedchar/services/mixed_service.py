"""
Polinomios mixtos y polinomio característico mixto.

El operador (1 - D_w1)...(1 - D_wm) se aplica secuencialmente sobre los
buffers de términos; nunca se expande por inclusión-exclusión.
"""
import logging
import math

import numpy as np
import sympy as sp

from core.utils.conf import weaver_setting
from core.utils.exceptions import (
    BracketError,
    DimensionMismatchError,
    DomainError,
    NotInConeError,
    NotRealRootedError,
)
from hyperbolic.services.spectral_service import SpectralService
from mixedchar.models.mixed_spec import MixedSpec
from polyalg.models.unipoly import UniPoly
from polyalg.services.polynomial_service import PolynomialService
from polyalg.services.roots_service import CLUSTER_BASE, RootService

logger = logging.getLogger(__name__)

MAX_BISECTION_STEPS = 200


class MixedService:

    @staticmethod
    def validate(spec, tol=None):
        """Cada w_j debe estar en el cono cerrado."""
        for index, w in enumerate(spec.vectors):
            if not np.any(w):
                continue
            if not SpectralService.in_cone(spec.form, w, closed=True, tol=tol):
                raise NotInConeError(
                    "Mixed operator vector is outside the closed cone",
                    index=index + 1, lambda_min=SpectralService.lambda_min(spec.form, w),
                )
        return spec

    @staticmethod
    def apply_operators(poly, vectors, sign=-1.0):
        for w in vectors:
            poly = PolynomialService.shift_operator(poly, w, sign)
        return poly

    @classmethod
    def apply_mixed_operator(cls, spec):
        """(1 - D_w1)...(1 - D_wm) h."""
        return cls.apply_operators(spec.form.poly, spec.vectors, -1.0)

    @classmethod
    def along_direction(cls, poly, form, check=True):
        """t -> poly(te) / h(e), verificando raíces reales."""
        q = PolynomialService.restrict_to_line(poly, np.zeros(form.nvars), form.e)
        q = UniPoly.from_coeffs(q.as_array() / form.he)
        if check and not RootService.is_real_rooted(q):
            raise NotRealRootedError(
                "Mixed characteristic polynomial is not real-rooted",
                coeffs=list(q.coeffs),
            )
        return q

    @classmethod
    def mixed_char_poly(cls, spec, check=True):
        """t -> [(1 - D_w1)...(1 - D_wm) h](te), normalizado a mónico."""
        return cls.along_direction(cls.apply_mixed_operator(spec), spec.form, check)

    @classmethod
    def lambda_max_mixed(cls, spec):
        return RootService.largest_root(cls.mixed_char_poly(spec))

    @classmethod
    def smallest_root_mixed(cls, spec):
        return RootService.smallest_root(cls.mixed_char_poly(spec))

    @staticmethod
    def _exact_lifted_along_e(spec):
        """t -> prod(1 + D_wj) h(te) con los datos de punto flotante tomados como racionales exactos."""
        form = spec.form
        symbols = sp.symbols(f'x0:{form.nvars}')
        lifted = sp.Poly.from_dict(
            {exps: sp.Rational(c) for exps, c in form.poly.terms.items()}, *symbols, domain=sp.QQ,
        )
        for w in spec.vectors:
            derivative = sp.Poly(0, *symbols, domain=sp.QQ)
            for value, symbol in zip(w, symbols):
                if value != 0.0:
                    derivative += lifted.diff(symbol).mul_ground(sp.Rational(float(value)))
            lifted += derivative
        e = [sp.Rational(float(v)) for v in form.e]
        by_degree = {}
        for exps, coeff in lifted.terms():
            weight = coeff
            for power, component in zip(exps, e):
                weight *= component ** power
            by_degree[sum(exps)] = by_degree.get(sum(exps), 0) + weight
        return sp.Poly.from_dict({(k,): v for k, v in by_degree.items()}, sp.Symbol('t'), domain=sp.QQ)

    @staticmethod
    def _alternates(coeffs):
        """Coeficientes no nulos de signo alternado: todas las raíces con parte real positiva."""
        if any(c == 0 for c in coeffs):
            return False
        return all((a > 0) != (b > 0) for a, b in zip(coeffs, coeffs[1:]))

    @classmethod
    def _cone_edge(cls, along, order, bound, tol):
        """
        Menor rho con (rho e, 1) en el cono de la derivada `order` en
        dirección (e, 0): los coeficientes a_order..a_d de t -> P(t - rho)
        alternan.
        """
        keep = along.degree() - order + 1

        def inside(rho):
            return cls._alternates(along.shift(-sp.Rational(rho)).all_coeffs()[:keep])

        low, high = -bound, bound
        if inside(low) or not inside(high):
            raise BracketError("Cone bisection bracket failed", low=low, high=high, order=order)
        for _ in range(MAX_BISECTION_STEPS):
            if high - low <= tol * max(1.0, bound):
                break
            middle = 0.5 * (low + high)
            if inside(middle):
                high = middle
            else:
                low = middle
        return 0.5 * (low + high)

    @classmethod
    def lambda_max_via_cone(cls, spec, tol=None):
        """
        Mínimo rho tal que (rho e, 1) está en el cono abierto del polinomio
        extendido prod(1 + y_j D_wj) h, por bisección en aritmética exacta.

        Los autovalores de (rho e, 1) en dirección (e, 0) son las raíces de
        t -> prod(1 + D_wj) h((t - rho) e). Si la raíz mayor es múltiple,
        los conos de las derivadas en (e, 0) comparten el borde dentro del
        radio de agrupamiento y la última que lo comparte da una raíz simple.
        """
        tol = weaver_setting('BISECTION_TOL') if tol is None else tol
        along = cls._exact_lifted_along_e(spec)
        degree = along.degree()
        if degree < 1:
            raise BracketError("Lifted polynomial is constant along e")
        coeffs = along.all_coeffs()
        # cota de Cauchy para las raíces
        bound = 1.0 + max(float(abs(c / coeffs[0])) for c in coeffs[1:])

        edge = cls._cone_edge(along, 0, bound, tol)
        scale = max(1.0, abs(edge))
        best = edge
        for order in range(1, degree):
            candidate = cls._cone_edge(along, order, bound, tol)
            if edge - candidate > scale * CLUSTER_BASE ** (1.0 / (order + 1)):
                break
            best = candidate
        logger.debug("Cone bisection edge %.15g resolved to %.15g", edge, best)
        return best

    @classmethod
    def conditional_expected_poly(cls, form, decided, pending):
        """
        Polinomio característico mixto con los índices decididos fijados a
        su vector elegido y los pendientes reemplazados por su media.

        `decided` y `pending` son mapeos índice -> vector que particionan
        los índices.
        """
        overlap = set(decided) & set(pending)
        if overlap:
            raise DimensionMismatchError(
                "Decided and pending indices overlap", indices=sorted(overlap),
            )
        merged = {**pending, **decided}
        vectors = [merged[index] for index in sorted(merged)]
        return cls.mixed_char_poly(MixedSpec.build(form, vectors))

    @staticmethod
    def shifted_form_poly(poly, shift):
        """h(x - s) por la serie de Taylor sum_k (-1)^k D_s^k h / k!."""
        result = poly
        term = poly
        for k in range(1, poly.degree + 1):
            term = PolynomialService.directional_derivative(term, shift)
            if term.is_zero:
                break
            result = result + term.scale((-1) ** k / math.factorial(k))
        return result

    @classmethod
    def rank_one_identity(cls, spec, rtol=1e-9):
        """Para vectores de rango <= 1 el polinomio mixto coincide con h(x - sum w)."""
        for index, w in enumerate(spec.vectors):
            if np.any(w) and SpectralService.rank(spec.form, w) > 1:
                raise DomainError("Vector has rank above one", index=index + 1)
        expected = cls.shifted_form_poly(spec.form.poly, spec.total)
        return cls.apply_mixed_operator(spec).allclose(expected, rtol=rtol)
