"""
Raíces reales de polinomios en una variable.

Las raíces salen de los autovalores de la matriz compañera balanceada.
Un grupo de m autovalores cercanos se toma como raíz real múltiple sólo
si, en el cero de q^(m-1) junto al grupo, las derivadas de orden menor a
m - 1 son del tamaño del redondeo. Si no se confirma, cada autovalor
queda como raíz propia y la regla |Im| <= tol (1 + |lambda|) decide.
"""
import logging
from dataclasses import dataclass

import numpy as np
import sympy as sp
from numpy.polynomial import polynomial as npoly
from scipy import linalg

from core.utils.conf import weaver_setting
from core.utils.exceptions import NotRealRootedError, ZeroPolynomialError

logger = logging.getLogger(__name__)

# Un grupo de tamaño m es candidato si su dispersión no supera
# escala * CLUSTER_BASE ** (1 / m).
CLUSTER_BASE = 1e-12
# Cota relativa, por unidad de grado, para q^(j)(centro) en una raíz
# múltiple confirmada.
CLUSTER_NOISE = 1.5e-14
NEWTON_STEPS = 8
STURM_GRID = 10 ** 12


@dataclass(frozen=True)
class RootCluster:
    value: complex
    multiplicity: int


class RootService:

    @staticmethod
    def _newton(coeffs, x0, radius):
        """Pule x0 como raíz de coeffs; descarta pasos que salen del radio."""
        derivative = npoly.polyder(coeffs)
        x = x0
        for _ in range(NEWTON_STEPS):
            slope = npoly.polyval(x, derivative)
            if slope == 0.0:
                break
            step = npoly.polyval(x, coeffs) / slope
            candidate = x - step
            if not np.isfinite(candidate) or abs(candidate - x0) > radius:
                break
            if abs(npoly.polyval(candidate, coeffs)) > abs(npoly.polyval(x, coeffs)):
                break
            x = candidate
            if abs(step) <= 1e-16 * max(1.0, abs(x)):
                break
        return x

    @staticmethod
    def _taylor_confirms(coeffs, center, size):
        """q^(j)(center) ~ 0 para j < size - 1, frente al mismo valor con |coeficientes|."""
        magnitude = np.abs(coeffs)
        bound = CLUSTER_NOISE * (coeffs.size - 1)
        at = max(1.0, abs(center))
        for order in range(size - 1):
            value = abs(npoly.polyval(center, npoly.polyder(coeffs, order)))
            noise = npoly.polyval(at, npoly.polyder(magnitude, order))
            if value > bound * noise:
                return False
        return True

    @classmethod
    def _confirmed_cluster(cls, coeffs, group, scale):
        """Centro real de `group` si forma una raíz múltiple; None si no."""
        size = group.size
        radius = scale * CLUSTER_BASE ** (1.0 / size)
        center = group.mean()
        if np.max(np.abs(group - center)) > radius or abs(center.imag) > radius:
            return None
        value = cls._newton(npoly.polyder(coeffs, size - 1), center.real, radius)
        if not cls._taylor_confirms(coeffs, value, size):
            return None
        return value

    @classmethod
    def clusters(cls, q):
        """Raíces complejas agrupadas por multiplicidad confirmada."""
        if q.is_zero:
            raise ZeroPolynomialError("Roots of the zero polynomial are undefined")
        coeffs = q.as_array()
        coeffs = coeffs / np.max(np.abs(coeffs))
        found = []

        # ceros exactos: coeficientes bajos nulos
        leading_zeros = int(np.flatnonzero(coeffs)[0])
        if leading_zeros:
            found.append(RootCluster(0j, leading_zeros))
            coeffs = coeffs[leading_zeros:]
        degree = coeffs.size - 1
        if degree == 0:
            return found
        if degree == 1:
            found.append(RootCluster(complex(-coeffs[0] / coeffs[1]), 1))
            return found

        companion = npoly.polycompanion(coeffs)
        balanced, _ = linalg.matrix_balance(companion, permute=True, scale=True)
        eigen = linalg.eigvals(balanced)
        eigen = eigen[np.lexsort((eigen.imag, eigen.real))]
        scale = max(1.0, float(np.max(np.abs(eigen))))
        distances = np.abs(eigen[:, None] - eigen[None, :])
        np.fill_diagonal(distances, np.inf)
        gaps = distances.min(axis=1)

        i = 0
        while i < eigen.size:
            cluster = None
            for size in range(eigen.size - i, 1, -1):
                value = cls._confirmed_cluster(coeffs, eigen[i:i + size], scale)
                if value is not None:
                    cluster = RootCluster(complex(value), size)
                    break
            if cluster is None:
                value = eigen[i]
                if value.imag == 0.0:
                    # el pulido no puede cruzar hacia la raíz vecina
                    radius = min(scale * CLUSTER_BASE ** 0.5, 0.5 * gaps[i])
                    value = complex(cls._newton(coeffs, value.real, radius))
                cluster = RootCluster(value, 1)
            found.append(cluster)
            i += cluster.multiplicity
        return found

    @classmethod
    def _is_real(cls, value, tol):
        return abs(value.imag) <= tol * (1.0 + abs(value))

    @classmethod
    def real_roots(cls, q, tol=None):
        """Raíces reales con multiplicidad, en orden descendente."""
        if tol is None:
            tol = weaver_setting('REAL_ROOT_TOL')
        roots = []
        for cluster in cls.clusters(q):
            if cls._is_real(cluster.value, tol):
                roots.extend([float(cluster.value.real)] * cluster.multiplicity)
        return sorted(roots, reverse=True)

    @classmethod
    def is_real_rooted(cls, q, tol=None, exact=False):
        if q.is_zero or q.degree == 0:
            return True
        if exact:
            if q.degree <= weaver_setting('STURM_MAX_DEGREE'):
                return cls._sturm_real_rooted(q)
            logger.warning("Degree %s exceeds the Sturm limit; using eigenvalues", q.degree)
        if tol is None:
            tol = weaver_setting('REAL_ROOT_TOL')
        return all(cls._is_real(cluster.value, tol) for cluster in cls.clusters(q))

    @classmethod
    def _require_real_rooted(cls, q):
        if q.is_zero or q.degree < 1:
            raise NotRealRootedError("Polynomial has no roots", degree=q.degree)
        tol = weaver_setting('REAL_ROOT_TOL')
        clusters = cls.clusters(q)
        complex_part = [c.value for c in clusters if not cls._is_real(c.value, tol)]
        if complex_part:
            worst = max(complex_part, key=lambda z: abs(z.imag))
            raise NotRealRootedError(
                "Polynomial has non-real roots",
                root=[worst.real, worst.imag], coeffs=list(q.coeffs),
            )
        return sorted((float(c.value.real) for c in clusters), reverse=True)

    @classmethod
    def largest_root(cls, q):
        return cls._require_real_rooted(q)[0]

    @classmethod
    def smallest_root(cls, q):
        return cls._require_real_rooted(q)[-1]

    # ---------- conteo exacto ----------
    @staticmethod
    def _rational_poly(q):
        t = sp.Symbol('t')
        scale = max(abs(c) for c in q.coeffs)
        rationals = [
            sp.Rational(int(round(c / scale * STURM_GRID)), STURM_GRID) for c in reversed(q.coeffs)
        ]
        return sp.Poly(rationals, t)

    @classmethod
    def sturm_root_count(cls, q):
        """Número de raíces reales distintas, por secuencia de Sturm exacta."""
        if q.is_zero:
            raise ZeroPolynomialError("Sturm count of the zero polynomial is undefined")
        poly = cls._rational_poly(q)
        if poly.degree() <= 0:
            return 0
        sequence = sp.sturm(poly)
        degree = poly.degree()

        def sign_changes(signs):
            signs = [s for s in signs if s != 0]
            return sum(1 for a, b in zip(signs, signs[1:]) if a != b)

        at_plus = [sp.sign(p.LC()) for p in sequence]
        at_minus = [sp.sign(p.LC()) * (-1) ** p.degree() for p in sequence]
        logger.debug("Sturm sequence of length %s for degree %s", len(sequence), degree)
        return sign_changes(at_minus) - sign_changes(at_plus)

    @classmethod
    def _sturm_real_rooted(cls, q):
        poly = cls._rational_poly(q)
        if poly.degree() <= 0:
            return True
        distinct = poly.sqf_part().degree()
        return cls.sturm_root_count(q) == distinct
