"""
Construcción de formas hiperbólicas.

Formas incorporadas: producto, determinante simétrico, Lorentz y
simétricas elementales. Las formas `custom` deben pasar un certificado
muestreado antes de usarse.
"""
import itertools
import logging
from dataclasses import dataclass

import numpy as np

from core.utils.conf import weaver_setting
from core.utils.exceptions import DimensionMismatchError, DomainError, NotHyperbolicError
from hyperbolic.models.form import HyperbolicForm
from polyalg.models.multipoly import MultiPoly
from polyalg.services.polynomial_service import PolynomialService
from polyalg.services.roots_service import RootService

logger = logging.getLogger(__name__)

SYMDET_MAX_ORDER = 6


@dataclass(frozen=True)
class Certificate:
    ok: bool
    samples: int
    witness: list = None
    reason: str = ''


def _frozen_point(values):
    point = np.array(values, dtype=float).reshape(-1)
    point.setflags(write=False)
    return point


class FormService:

    # ---------- codificación de matrices simétricas ----------
    @staticmethod
    def symdet_pairs(n):
        """Pares (i, j), i < j, en el orden de las coordenadas fuera de la diagonal."""
        return [(i, j) for i in range(n) for j in range(i + 1, n)]

    @classmethod
    def symdet_encode(cls, matrix):
        """Matriz simétrica -> coordenadas (diagonal primero, luego i < j por filas)."""
        matrix = np.asarray(matrix, dtype=float)
        n = matrix.shape[0]
        if matrix.shape != (n, n):
            raise DimensionMismatchError("Matrix must be square", shape=list(matrix.shape))
        diagonal = [matrix[i, i] for i in range(n)]
        upper = [matrix[i, j] for i, j in cls.symdet_pairs(n)]
        return np.array(diagonal + upper)

    @classmethod
    def symdet_decode(cls, coords, n):
        coords = np.asarray(coords, dtype=float)
        if coords.size != n * (n + 1) // 2:
            raise DimensionMismatchError(
                "Coordinate count does not match n(n+1)/2",
                n=n, received=int(coords.size),
            )
        matrix = np.diag(coords[:n])
        for offset, (i, j) in enumerate(cls.symdet_pairs(n)):
            matrix[i, j] = matrix[j, i] = coords[n + offset]
        return matrix

    # ---------- formas incorporadas ----------
    @staticmethod
    def _product_poly(n):
        return MultiPoly.from_terms(n, {(1,) * n: 1.0})

    @staticmethod
    def _lorentz_poly(n):
        terms = {}
        for i in range(n):
            exps = [0] * n
            exps[i] = 2
            terms[tuple(exps)] = 1.0 if i == 0 else -1.0
        return MultiPoly.from_terms(n, terms)

    @staticmethod
    def _elemsym_poly(n, k):
        exps = []
        for subset in itertools.combinations(range(n), k):
            row = [0] * n
            for i in subset:
                row[i] = 1
            exps.append(row)
        return MultiPoly.from_arrays(n, np.array(exps, dtype=np.int64).reshape(-1, n), np.ones(len(exps)))

    @classmethod
    def _symdet_poly(cls, n):
        """Determinante por la expansión de Leibniz; cada entrada es una variable."""
        nvars = n * (n + 1) // 2
        index = {(i, i): i for i in range(n)}
        for offset, (i, j) in enumerate(cls.symdet_pairs(n)):
            index[(i, j)] = index[(j, i)] = n + offset
        exps, coeffs = [], []
        for perm in itertools.permutations(range(n)):
            inversions = sum(1 for a, b in itertools.combinations(perm, 2) if a > b)
            row = [0] * nvars
            for i, j in enumerate(perm):
                row[index[(i, j)]] += 1
            exps.append(row)
            coeffs.append(-1.0 if inversions % 2 else 1.0)
        return MultiPoly.from_arrays(nvars, np.array(exps, dtype=np.int64), coeffs)

    @classmethod
    def _assemble(cls, poly, e, kind, params, certify):
        e = _frozen_point(e)
        if e.size != poly.nvars:
            raise DimensionMismatchError(
                "Direction e does not match the number of variables",
                expected=poly.nvars, received=int(e.size),
            )
        if poly.is_zero or not poly.is_homogeneous:
            raise NotHyperbolicError("Polynomial must be nonzero and homogeneous", kind=kind)
        he = PolynomialService.poly_eval(poly, e)
        if he == 0.0:
            raise NotHyperbolicError("h(e) vanishes", kind=kind, e=list(e))
        if certify:
            certificate = cls.certify_hyperbolic(poly, e)
            if not certificate.ok:
                raise NotHyperbolicError(
                    "Sampled hyperbolicity certificate failed",
                    witness=certificate.witness, reason=certificate.reason,
                )
        return HyperbolicForm(poly=poly, e=e, he=he, degree=poly.degree, kind=kind, params=params)

    @classmethod
    def builtin_form(cls, descriptor):
        """Forma a partir de un descriptor {"kind": ..., ...} ya validado."""
        kind = descriptor.get('kind')
        if kind == 'product':
            n = int(descriptor['n'])
            return cls._assemble(cls._product_poly(n), np.ones(n), kind, {'n': n}, False)
        if kind == 'lorentz':
            n = int(descriptor['n'])
            if n < 2:
                raise DomainError("Lorentz form needs n >= 2", n=n)
            e = np.zeros(n)
            e[0] = 1.0
            return cls._assemble(cls._lorentz_poly(n), e, kind, {'n': n}, False)
        if kind == 'symdet':
            n = int(descriptor['n'])
            if n > SYMDET_MAX_ORDER:
                raise DomainError("symdet order too large", n=n, limit=SYMDET_MAX_ORDER)
            e = np.concatenate([np.ones(n), np.zeros(n * (n - 1) // 2)])
            return cls._assemble(cls._symdet_poly(n), e, kind, {'n': n}, False)
        if kind == 'elemsym':
            n, k = int(descriptor['n']), int(descriptor['k'])
            if not 1 <= k <= n:
                raise DomainError("elemsym needs 1 <= k <= n", n=n, k=k)
            return cls._assemble(cls._elemsym_poly(n, k), np.ones(n), kind, {'n': n, 'k': k}, False)
        if kind == 'custom':
            e = np.asarray(descriptor['e'], dtype=float)
            terms = [(tuple(int(a) for a in exps), float(coeff)) for exps, coeff in descriptor['terms']]
            poly = MultiPoly.from_terms(e.size, terms)
            return cls._assemble(poly, e, kind, {}, True)
        raise DomainError("Unknown form kind", kind=kind)

    @classmethod
    def certify_hyperbolic(cls, poly, e, samples=None, seed=None):
        """
        Certificado muestreado: para direcciones x aleatorias,
        t -> h(te - x) debe tener exactamente deg h raíces reales.
        """
        samples = weaver_setting('CERT_SAMPLES') if samples is None else samples
        seed = weaver_setting('SEED') if seed is None else seed
        rng = np.random.default_rng(seed)
        e = np.asarray(e, dtype=float)
        degree = poly.degree
        for _ in range(samples):
            x = rng.normal(size=poly.nvars)
            q = PolynomialService.restrict_to_line(poly, -x, e)
            if q.degree != degree:
                return Certificate(False, samples, [float(v) for v in x], 'degree drop along e')
            if not RootService.is_real_rooted(q):
                logger.warning("Hyperbolicity witness found after sampling")
                return Certificate(False, samples, [float(v) for v in x], 'non-real roots')
        return Certificate(True, samples)

    # ---------- espacio producto ----------
    @classmethod
    def product_form(cls, form, k):
        """g(y) = h(y^1) ... h(y^k) con dirección e repetida k veces."""
        if k < 1:
            raise DomainError("Part count must be at least 1", k=k)
        n = form.nvars
        poly = MultiPoly.constant(n * k, 1.0)
        for p in range(k):
            poly = poly * form.poly.shifted(p * n, n * k)
        e = _frozen_point(np.tile(form.e, k))
        return HyperbolicForm(
            poly=poly, e=e, he=form.he ** k, degree=form.degree * k,
            kind='product_space', params={'base': form.descriptor(), 'k': k},
        )

    @staticmethod
    def embed_block(x, block, k):
        """Coloca x en el bloque `block` (1..k) del espacio k-veces; ceros fuera."""
        if not 1 <= block <= k:
            raise DomainError("Block index out of range", block=block, k=k)
        x = np.asarray(x, dtype=float).reshape(-1)
        out = np.zeros(x.size * k)
        out[(block - 1) * x.size:block * x.size] = x
        return out
