from dataclasses import dataclass

import numpy as np
from numpy.polynomial import polynomial as npoly

from core.utils.conf import weaver_setting


@dataclass(frozen=True)
class UniPoly:
    """Polinomio en una variable, coeficientes en orden ascendente de grado."""
    coeffs: tuple

    @classmethod
    def from_coeffs(cls, coeffs, tol_clean=None):
        if tol_clean is None:
            tol_clean = weaver_setting('TOL_CLEAN')
        values = np.asarray(coeffs, dtype=float).reshape(-1)
        if values.size == 0:
            return cls(())
        scale = np.max(np.abs(values))
        values = np.where(np.abs(values) <= tol_clean * scale, 0.0, values)
        nonzero = np.flatnonzero(values)
        if nonzero.size == 0:
            return cls(())
        return cls(tuple(float(c) for c in values[:nonzero[-1] + 1]))

    @classmethod
    def from_roots(cls, roots, leading=1.0):
        return cls.from_coeffs(leading * npoly.polyfromroots(list(roots)))

    @classmethod
    def zero(cls):
        return cls(())

    @property
    def is_zero(self):
        return len(self.coeffs) == 0

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def leading(self):
        return self.coeffs[-1] if self.coeffs else 0.0

    def as_array(self):
        return np.array(self.coeffs, dtype=float)

    def __call__(self, t):
        if self.is_zero:
            return 0.0 * np.asarray(t, dtype=float)
        return npoly.polyval(t, self.as_array())

    def derivative(self, order=1):
        if self.degree < order:
            return UniPoly.zero()
        return UniPoly.from_coeffs(npoly.polyder(self.as_array(), order))

    def monic(self):
        if self.is_zero:
            return self
        return UniPoly.from_coeffs(self.as_array() / self.leading)

    def scale(self, factor):
        return UniPoly.from_coeffs(self.as_array() * float(factor))

    def _aligned(self, other):
        a, b = self.as_array(), other.as_array()
        size = max(a.size, b.size)
        return np.pad(a, (0, size - a.size)), np.pad(b, (0, size - b.size))

    def __add__(self, other):
        a, b = self._aligned(other)
        return UniPoly.from_coeffs(a + b)

    def __sub__(self, other):
        a, b = self._aligned(other)
        return UniPoly.from_coeffs(a - b)

    def __mul__(self, other):
        if not isinstance(other, UniPoly):
            return self.scale(other)
        if self.is_zero or other.is_zero:
            return UniPoly.zero()
        return UniPoly.from_coeffs(npoly.polymul(self.as_array(), other.as_array()))

    def allclose(self, other, rtol=1e-9):
        a, b = self._aligned(other)
        scale = max(np.max(np.abs(a), initial=0.0), np.max(np.abs(b), initial=0.0), 1e-300)
        return bool(np.all(np.abs(a - b) <= rtol * scale))
