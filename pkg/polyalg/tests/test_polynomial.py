import numpy as np
from django.test import SimpleTestCase

from core.utils.exceptions import DimensionMismatchError
from polyalg.models import MultiPoly, UniPoly
from polyalg.services import PolynomialService


def lorentz3():
    return MultiPoly.from_terms(3, {(2, 0, 0): 1.0, (0, 2, 0): -1.0, (0, 0, 2): -1.0})


def random_poly(rng, nvars=3, terms=6, max_exp=3):
    exps = rng.integers(0, max_exp + 1, size=(terms, nvars))
    return MultiPoly.from_arrays(nvars, exps, rng.normal(size=terms))


class MultiPolyTest(SimpleTestCase):
    """Construcción canónica y aritmética de MultiPoly."""

    def test_duplicate_terms_are_merged(self):
        p = MultiPoly.from_terms(2, [((1, 0), 2.0), ((1, 0), -0.5), ((0, 1), 1.0)])
        self.assertEqual(p.terms, {(0, 1): 1.0, (1, 0): 1.5})

    def test_cancelled_terms_are_dropped(self):
        p = MultiPoly.from_terms(2, [((1, 1), 1.0), ((1, 1), -1.0)])
        self.assertTrue(p.is_zero)
        self.assertEqual(p.degree, -1)

    def test_tiny_terms_cleaned_relative_to_largest(self):
        p = MultiPoly.from_terms(1, {(2,): 1.0, (1,): 1e-14})
        self.assertEqual(p.terms, {(2,): 1.0})

    def test_wrong_tuple_length(self):
        with self.assertRaises(DimensionMismatchError):
            MultiPoly.from_terms(2, {(1, 0, 0): 1.0})

    def test_product_and_degree(self):
        x1 = MultiPoly.variable(2, 0)
        x2 = MultiPoly.variable(2, 1)
        p = (x1 + x2) * (x1 - x2)
        self.assertEqual(p.terms, {(0, 2): -1.0, (2, 0): 1.0})
        self.assertTrue(p.is_homogeneous)
        self.assertEqual(p.degree, 2)

    def test_shifted_block(self):
        p = MultiPoly.from_terms(2, {(1, 1): 3.0}).shifted(2, 4)
        self.assertEqual(p.terms, {(0, 0, 1, 1): 3.0})


class PolyEvalTest(SimpleTestCase):

    def test_monomial(self):
        p = MultiPoly.from_terms(2, {(1, 1): 1.0})
        self.assertEqual(PolynomialService.poly_eval(p, [2, 3]), 6.0)

    def test_lorentz_at_direction(self):
        self.assertEqual(PolynomialService.poly_eval(lorentz3(), [1, 0, 0]), 1.0)

    def test_zero_polynomial(self):
        self.assertEqual(PolynomialService.poly_eval(MultiPoly.zero(3), [4, 5, 6]), 0.0)

    def test_dimension_mismatch(self):
        with self.assertRaises(DimensionMismatchError):
            PolynomialService.poly_eval(lorentz3(), [1, 0])


class DirectionalDerivativeTest(SimpleTestCase):

    def test_product_along_ones(self):
        p = MultiPoly.from_terms(2, {(1, 1): 1.0})
        d = PolynomialService.directional_derivative(p, [1, 1])
        self.assertEqual(d.terms, {(0, 1): 1.0, (1, 0): 1.0})

    def test_rank_one_direction_annihilated(self):
        p = MultiPoly.from_terms(2, {(1, 1): 1.0})
        d = PolynomialService.iterated_derivative(p, [1, 0], 2)
        self.assertTrue(d.is_zero)

    def test_lorentz(self):
        d = PolynomialService.directional_derivative(lorentz3(), [0, 1, 0])
        self.assertEqual(d.terms, {(0, 1, 0): -2.0})

    def test_linearity(self):
        rng = np.random.default_rng(7)
        for _ in range(20):
            p = random_poly(rng)
            u, v = rng.normal(size=3), rng.normal(size=3)
            a, b = rng.normal(size=2)
            left = PolynomialService.directional_derivative(p, a * u + b * v)
            right = (PolynomialService.directional_derivative(p, u).scale(a)
                     + PolynomialService.directional_derivative(p, v).scale(b))
            self.assertTrue(left.allclose(right, rtol=1e-12))

    def test_degree_plus_one_derivatives_vanish(self):
        rng = np.random.default_rng(11)
        for _ in range(10):
            p = random_poly(rng)
            v = rng.normal(size=3)
            self.assertTrue(PolynomialService.iterated_derivative(p, v, p.degree + 1).is_zero)

    def test_shift_operator_matches_subtraction(self):
        p = lorentz3()
        w = [0.3, 0.1, -0.2]
        expected = p - PolynomialService.directional_derivative(p, w)
        self.assertTrue(PolynomialService.shift_operator(p, w).allclose(expected))


class RestrictToLineTest(SimpleTestCase):

    def test_product_gives_eigenvalue_polynomial(self):
        p = MultiPoly.from_terms(3, {(1, 1, 1): 1.0})
        q = PolynomialService.restrict_to_line(p, [-1, -2, -3], [1, 1, 1])
        self.assertTrue(q.allclose(UniPoly.from_roots([1, 2, 3])))

    def test_lorentz(self):
        q = PolynomialService.restrict_to_line(lorentz3(), [-2, -1, -1], [1, 0, 0])
        self.assertTrue(q.allclose(UniPoly.from_coeffs([2.0, -4.0, 1.0])))

    def test_through_origin(self):
        q = PolynomialService.restrict_to_line(lorentz3(), [0, 0, 0], [2, 1, 1])
        self.assertTrue(q.allclose(UniPoly.from_coeffs([0.0, 0.0, 2.0])))

    def test_agrees_with_evaluation(self):
        rng = np.random.default_rng(3)
        for _ in range(100):
            p = random_poly(rng)
            base, direction = rng.normal(size=3), rng.normal(size=3)
            t = rng.uniform(-2, 2)
            q = PolynomialService.restrict_to_line(p, base, direction)
            value = PolynomialService.poly_eval(p, base + t * direction)
            scale = max(1.0, np.sum(np.abs(p.coeffs)) * (1 + np.abs(base).max() + 2 * np.abs(direction).max()) ** p.degree)
            self.assertLessEqual(abs(q(t) - value), 1e-9 * scale)

    def test_agrees_with_interpolation(self):
        rng = np.random.default_rng(5)
        for _ in range(20):
            p = random_poly(rng)
            base, direction = rng.normal(size=3), rng.normal(size=3)
            by_terms = PolynomialService.restrict_to_line(p, base, direction)
            by_samples = PolynomialService.interpolate_on_line(p, base, direction)
            self.assertTrue(by_terms.allclose(by_samples, rtol=1e-9))
