import math

import numpy as np
from django.test import SimpleTestCase

from core.utils.exceptions import NotRealRootedError, ZeroPolynomialError
from polyalg.models import UniPoly
from polyalg.services import RootService


class RealRootsTest(SimpleTestCase):
    """Raíces reales vía matriz compañera balanceada."""

    def test_double_root(self):
        roots = RootService.real_roots(UniPoly.from_coeffs([1, -2, 1]))
        self.assertEqual(len(roots), 2)
        for root in roots:
            self.assertAlmostEqual(root, 1.0, places=7)

    def test_quadratic_formula(self):
        roots = RootService.real_roots(UniPoly.from_coeffs([0.5, -2, 1]))
        self.assertAlmostEqual(roots[0], 1 + 1 / math.sqrt(2), places=10)
        self.assertAlmostEqual(roots[1], 1 - 1 / math.sqrt(2), places=10)

    def test_descending_order(self):
        roots = RootService.real_roots(UniPoly.from_roots([1, 2, 3]))
        np.testing.assert_allclose(roots, [3, 2, 1], atol=1e-10)

    def test_exact_zero_roots(self):
        roots = RootService.real_roots(UniPoly.from_coeffs([0, 0, -1, 1]))
        self.assertEqual(roots[1:], [0.0, 0.0])
        self.assertAlmostEqual(roots[0], 1.0)

    def test_triple_root(self):
        roots = RootService.real_roots(UniPoly.from_roots([2, 2, 2, -1]))
        self.assertEqual(len(roots), 4)
        np.testing.assert_allclose(roots, [2, 2, 2, -1], atol=1e-4)

    def test_complex_roots_excluded(self):
        q = UniPoly.from_roots([1]) * UniPoly.from_coeffs([1, 0, 1])
        self.assertEqual(len(RootService.real_roots(q)), 1)

    def test_zero_polynomial_rejected(self):
        with self.assertRaises(ZeroPolynomialError):
            RootService.real_roots(UniPoly.zero())

    def test_random_separated_roots(self):
        rng = np.random.default_rng(17)
        for _ in range(50):
            degree = int(rng.integers(2, 9))
            while True:
                roots = np.sort(rng.uniform(-10, 10, size=degree))
                if np.min(np.diff(roots)) >= 1e-3:
                    break
            found = RootService.real_roots(UniPoly.from_roots(roots))
            np.testing.assert_allclose(sorted(found), roots, atol=1e-7)


    def test_close_roots_stay_separate(self):
        roots = [3.0, 1.0 + 1e-5, 1.0]
        found = RootService.real_roots(UniPoly.from_roots(roots))
        np.testing.assert_allclose(found, roots, atol=1e-9)

    def test_roots_rebuild_the_polynomial(self):
        q = UniPoly.from_roots([2, 2, 0.5, 0.5, 0.5, -1])
        found = RootService.real_roots(q)
        np.testing.assert_allclose(np.polynomial.polynomial.polyfromroots(found), q.as_array(), atol=1e-10)


class RealRootednessTest(SimpleTestCase):

    def test_no_real_roots(self):
        self.assertFalse(RootService.is_real_rooted(UniPoly.from_coeffs([1, 0, 1])))

    def test_zero_polynomial(self):
        self.assertTrue(RootService.is_real_rooted(UniPoly.zero()))

    def test_tiny_complex_pair_is_not_a_double_root(self):
        # (t - 1)^2 + 2.5e-13: raíces 1 +- 5e-7 i
        self.assertFalse(RootService.is_real_rooted(UniPoly.from_coeffs([1 + 2.5e-13, -2, 1])))

    def test_complex_pair_next_to_real_root(self):
        # (t - 1)((t - 1)^2 + 1e-10)
        q = UniPoly.from_coeffs([-1 - 1e-10, 3 + 1e-10, -3, 1])
        self.assertFalse(RootService.is_real_rooted(q, tol=1e-7))
        self.assertEqual(len(RootService.real_roots(q, tol=1e-7)), 1)

    def test_real_quadratic(self):
        self.assertTrue(RootService.is_real_rooted(UniPoly.from_coeffs([0.5, -2, 1])))

    def test_exact_mode_agrees(self):
        self.assertTrue(RootService.is_real_rooted(UniPoly.from_roots([1, 2, 3]), exact=True))
        self.assertFalse(RootService.is_real_rooted(UniPoly.from_coeffs([1, 0, 1]), exact=True))

    def test_sturm_count(self):
        self.assertEqual(RootService.sturm_root_count(UniPoly.from_roots([-1, 0.5, 4])), 3)
        self.assertEqual(RootService.sturm_root_count(UniPoly.from_coeffs([1, 0, 1])), 0)
        self.assertEqual(RootService.sturm_root_count(UniPoly.from_coeffs([1, -2, 1])), 1)


class ExtremeRootTest(SimpleTestCase):

    def test_largest(self):
        self.assertAlmostEqual(RootService.largest_root(UniPoly.from_coeffs([1, -2, 1])), 1.0, places=7)
        self.assertAlmostEqual(RootService.largest_root(UniPoly.from_coeffs([0.5, -2, 1])), 1.70710678, places=8)
        self.assertAlmostEqual(RootService.largest_root(UniPoly.from_roots([1, 2, 3])), 3.0, places=10)

    def test_smallest(self):
        self.assertAlmostEqual(RootService.smallest_root(UniPoly.from_roots([1, 2, 3])), 1.0, places=10)

    def test_constant_rejected(self):
        with self.assertRaises(NotRealRootedError):
            RootService.largest_root(UniPoly.from_coeffs([3.0]))

    def test_complex_rejected(self):
        with self.assertRaises(NotRealRootedError):
            RootService.largest_root(UniPoly.from_coeffs([1, 0, 1]))
