"""
Polinomio multivariado disperso.

Los términos viven en dos arreglos de numpy: `exponents` (T x nvars) y
`coeffs` (T,). Se mantienen en orden lexicográfico canónico y sin
coeficientes despreciables, así las tuberías de operadores trabajan
directamente sobre los buffers sin pasar por diccionarios.
"""
from dataclasses import dataclass

import numpy as np

from core.utils.conf import weaver_setting
from core.utils.exceptions import DimensionMismatchError


def _freeze(array):
    array.setflags(write=False)
    return array


def merge_terms(nvars, exponents, coeffs, tol_clean=None):
    """
    Suma términos repetidos, descarta los despreciables y ordena.

    Devuelve (exponents, coeffs) en orden canónico.
    """
    if tol_clean is None:
        tol_clean = weaver_setting('TOL_CLEAN')
    exponents = np.asarray(exponents, dtype=np.int64).reshape(-1, nvars)
    coeffs = np.asarray(coeffs, dtype=float).reshape(-1)
    if exponents.shape[0] != coeffs.shape[0]:
        raise DimensionMismatchError(
            "Exponent rows and coefficients differ in length",
            rows=int(exponents.shape[0]), coeffs=int(coeffs.shape[0]),
        )
    if coeffs.size == 0:
        return np.zeros((0, nvars), dtype=np.int64), np.zeros(0)
    if np.any(exponents < 0):
        raise DimensionMismatchError("Exponents must be nonnegative")

    if nvars == 0:
        unique = np.zeros((1, 0), dtype=np.int64)
        summed = np.array([coeffs.sum()])
    else:
        radix = exponents.max(axis=0) + 1
        # Clave mixta por fila; si no cabe en int64 se agrupa con np.unique
        if float(np.prod(radix.astype(float))) < 2.0 ** 62:
            weights = np.ones(nvars, dtype=np.int64)
            for i in range(nvars - 2, -1, -1):
                weights[i] = weights[i + 1] * radix[i + 1]
            keys = exponents @ weights
            order_keys, inverse = np.unique(keys, return_inverse=True)
            first = np.zeros(order_keys.size, dtype=np.int64)
            first[inverse[::-1]] = np.arange(keys.size)[::-1]
            unique = exponents[first]
        else:
            unique, inverse = np.unique(exponents, axis=0, return_inverse=True)
        summed = np.bincount(inverse.reshape(-1), weights=coeffs, minlength=unique.shape[0])

    scale = np.max(np.abs(summed)) if summed.size else 0.0
    keep = (summed != 0.0) & (np.abs(summed) > tol_clean * scale)
    return unique[keep], summed[keep]


@dataclass(frozen=True, eq=False)
class MultiPoly:
    nvars: int
    exponents: np.ndarray
    coeffs: np.ndarray

    # ---------- construcción ----------
    @classmethod
    def from_arrays(cls, nvars, exponents, coeffs, tol_clean=None):
        exps, cfs = merge_terms(nvars, exponents, coeffs, tol_clean)
        return cls(nvars, _freeze(exps), _freeze(cfs))

    @classmethod
    def from_terms(cls, nvars, terms, tol_clean=None):
        """Construye desde un mapeo {tupla de exponentes: coeficiente}."""
        items = list(terms.items()) if hasattr(terms, 'items') else list(terms)
        for exponent, _ in items:
            if len(exponent) != nvars:
                raise DimensionMismatchError(
                    "Exponent tuple length differs from nvars",
                    exponent=list(exponent), nvars=nvars,
                )
        exps = [list(e) for e, _ in items]
        cfs = [float(c) for _, c in items]
        return cls.from_arrays(nvars, np.array(exps, dtype=np.int64).reshape(-1, nvars), cfs, tol_clean)

    @classmethod
    def zero(cls, nvars):
        return cls.from_arrays(nvars, np.zeros((0, nvars), dtype=np.int64), [])

    @classmethod
    def constant(cls, nvars, value):
        return cls.from_arrays(nvars, np.zeros((1, nvars), dtype=np.int64), [value])

    @classmethod
    def variable(cls, nvars, index):
        """x_index (índice 0-based)."""
        exps = np.zeros((1, nvars), dtype=np.int64)
        exps[0, index] = 1
        return cls.from_arrays(nvars, exps, [1.0])

    @classmethod
    def linear_form(cls, coefficients):
        coefficients = np.asarray(coefficients, dtype=float)
        n = coefficients.size
        return cls.from_arrays(n, np.eye(n, dtype=np.int64), coefficients)

    # ---------- consultas ----------
    @property
    def terms(self):
        return {tuple(int(a) for a in row): float(c) for row, c in zip(self.exponents, self.coeffs)}

    @property
    def is_zero(self):
        return self.coeffs.size == 0

    @property
    def degrees(self):
        return self.exponents.sum(axis=1)

    @property
    def degree(self):
        """Grado total; -1 para el polinomio cero."""
        if self.is_zero:
            return -1
        return int(self.degrees.max())

    @property
    def is_homogeneous(self):
        if self.is_zero:
            return True
        degrees = self.degrees
        return bool(np.all(degrees == degrees[0]))

    def max_abs_coeff(self):
        return float(np.max(np.abs(self.coeffs))) if self.coeffs.size else 0.0

    def allclose(self, other, rtol=1e-12):
        """Igualdad coeficiente a coeficiente, relativa al mayor coeficiente."""
        if self.nvars != other.nvars:
            return False
        diff = self - other
        scale = max(self.max_abs_coeff(), other.max_abs_coeff(), 1e-300)
        return diff.is_zero or diff.max_abs_coeff() <= rtol * scale

    # ---------- aritmética ----------
    def _check_same_space(self, other):
        if self.nvars != other.nvars:
            raise DimensionMismatchError(
                "Polynomials live in different spaces",
                left=self.nvars, right=other.nvars,
            )

    def __add__(self, other):
        if not isinstance(other, MultiPoly):
            other = MultiPoly.constant(self.nvars, float(other))
        self._check_same_space(other)
        return MultiPoly.from_arrays(
            self.nvars,
            np.vstack([self.exponents, other.exponents]),
            np.concatenate([self.coeffs, other.coeffs]),
        )

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.nvars, self.exponents, _freeze(-self.coeffs))

    def __sub__(self, other):
        if not isinstance(other, MultiPoly):
            other = MultiPoly.constant(self.nvars, float(other))
        return self + (-other)

    def scale(self, factor):
        factor = float(factor)
        if factor == 0.0:
            return MultiPoly.zero(self.nvars)
        return MultiPoly(self.nvars, self.exponents, _freeze(self.coeffs * factor))

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            return self.scale(other)
        self._check_same_space(other)
        if self.is_zero or other.is_zero:
            return MultiPoly.zero(self.nvars)
        exps = (self.exponents[:, None, :] + other.exponents[None, :, :]).reshape(-1, self.nvars)
        cfs = np.outer(self.coeffs, other.coeffs).reshape(-1)
        return MultiPoly.from_arrays(self.nvars, exps, cfs)

    __rmul__ = __mul__

    def __pow__(self, power):
        result = MultiPoly.constant(self.nvars, 1.0)
        for _ in range(int(power)):
            result = result * self
        return result

    def shifted(self, offset, nvars_total):
        """Copia el polinomio al bloque de variables [offset, offset + nvars)."""
        if offset < 0 or offset + self.nvars > nvars_total:
            raise DimensionMismatchError(
                "Variable block does not fit",
                offset=offset, nvars=self.nvars, nvars_total=nvars_total,
            )
        exps = np.zeros((self.exponents.shape[0], nvars_total), dtype=np.int64)
        exps[:, offset:offset + self.nvars] = self.exponents
        return MultiPoly(nvars_total, _freeze(exps), self.coeffs)

    def __repr__(self):
        return f"MultiPoly(nvars={self.nvars}, terms={len(self.coeffs)}, degree={self.degree})"
