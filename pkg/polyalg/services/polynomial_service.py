import math

import numpy as np

from core.utils.exceptions import DimensionMismatchError
from polyalg.models.multipoly import MultiPoly
from polyalg.models.unipoly import UniPoly


class PolynomialService:
    """Evaluación, derivadas direccionales y restricción a rectas."""

    @staticmethod
    def as_point(x, nvars, name='x'):
        point = np.asarray(x, dtype=float).reshape(-1)
        if point.size != nvars:
            raise DimensionMismatchError(
                f"Length of {name} differs from the number of variables",
                expected=nvars, received=int(point.size),
            )
        return point

    @classmethod
    def poly_eval(cls, p, x):
        """Valor de p en x con suma compensada sobre los términos."""
        x = cls.as_point(x, p.nvars)
        if p.is_zero:
            return 0.0
        monomials = np.prod(np.power(x[None, :], p.exponents), axis=1)
        return math.fsum(p.coeffs * monomials)

    @classmethod
    def _derivative_pieces(cls, p, v):
        exps, cfs = [], []
        for k in np.flatnonzero(v):
            column = p.exponents[:, k]
            mask = column > 0
            if not mask.any():
                continue
            lowered = p.exponents[mask].copy()
            lowered[:, k] -= 1
            exps.append(lowered)
            cfs.append(p.coeffs[mask] * column[mask] * v[k])
        return exps, cfs

    @classmethod
    def directional_derivative(cls, p, v):
        """D_v p = sum_k v_k dp/dx_k."""
        v = cls.as_point(v, p.nvars, 'v')
        exps, cfs = cls._derivative_pieces(p, v)
        if not exps:
            return MultiPoly.zero(p.nvars)
        return MultiPoly.from_arrays(p.nvars, np.vstack(exps), np.concatenate(cfs))

    @classmethod
    def shift_operator(cls, p, v, sign=-1.0):
        """
        Aplica (1 + sign * D_v) en una sola fusión de términos.

        Con sign = -1 es el operador de la polinomial mixta; con +1 el de
        la cota superior por conos.
        """
        v = cls.as_point(v, p.nvars, 'v')
        if not np.any(v):
            return p
        exps, cfs = cls._derivative_pieces(p, v)
        if not exps:
            return p
        return MultiPoly.from_arrays(
            p.nvars,
            np.vstack([p.exponents] + exps),
            np.concatenate([p.coeffs] + [sign * c for c in cfs]),
        )

    @classmethod
    def iterated_derivative(cls, p, v, times):
        result = p
        for _ in range(times):
            if result.is_zero:
                break
            result = cls.directional_derivative(result, v)
        return result

    @classmethod
    def restrict_to_line(cls, p, base, direction, tol_clean=None):
        """t -> p(base + t * direction) como UniPoly."""
        base = cls.as_point(base, p.nvars, 'base')
        direction = cls.as_point(direction, p.nvars, 'dir')
        if p.is_zero:
            return UniPoly.zero()
        degree = p.degree
        if not np.any(base):
            return cls._restrict_through_origin(p, direction, tol_clean)

        # acc[j, s]: coeficiente de t^s aportado por el término j
        acc = np.zeros((p.coeffs.size, degree + 1))
        acc[:, 0] = p.coeffs
        for i in range(p.nvars):
            column = p.exponents[:, i]
            top = int(column.max())
            if top == 0:
                continue
            # powers[a]: coeficientes de (base_i + t dir_i)^a
            powers = np.zeros((top + 1, top + 1))
            powers[0, 0] = 1.0
            for a in range(1, top + 1):
                powers[a, :a + 1] = np.convolve(powers[a - 1, :a], [base[i], direction[i]])
            factor = powers[column]
            updated = np.zeros_like(acc)
            for s in range(top + 1):
                updated[:, s:] += acc[:, :degree + 1 - s] * factor[:, s:s + 1]
            acc = updated
        coeffs = [math.fsum(acc[:, s]) for s in range(degree + 1)]
        return UniPoly.from_coeffs(coeffs, tol_clean)

    @staticmethod
    def _restrict_through_origin(p, direction, tol_clean=None):
        values = p.coeffs * np.prod(np.power(direction[None, :], p.exponents), axis=1)
        degrees = p.degrees
        coeffs = [math.fsum(values[degrees == s]) for s in range(p.degree + 1)]
        return UniPoly.from_coeffs(coeffs, tol_clean)

    @classmethod
    def interpolate_on_line(cls, p, base, direction):
        """Misma restricción obtenida muestreando deg p + 1 puntos de la recta."""
        base = cls.as_point(base, p.nvars, 'base')
        direction = cls.as_point(direction, p.nvars, 'dir')
        if p.is_zero:
            return UniPoly.zero()
        degree = max(p.degree, 0)
        nodes = np.cos(np.pi * (np.arange(degree + 1) + 0.5) / (degree + 1))
        values = [cls.poly_eval(p, base + t * direction) for t in nodes]
        coeffs = np.polynomial.polynomial.polyfit(nodes, values, degree)
        return UniPoly.from_coeffs(coeffs)
