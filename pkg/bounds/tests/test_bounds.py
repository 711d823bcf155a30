import math

import numpy as np
from django.test import SimpleTestCase

from bounds.models import INF, BoundQuery
from bounds.serializers import BoundQuerySerializer, DeltaResultSerializer
from bounds.services import DeltaService, RegionService
from core.utils.exceptions import DomainError

EPS_GRID = (0.05, 0.1, 0.25, 0.5, 0.7, 1.0)


def delta(eps, m=INF, r=INF):
    return DeltaService.delta_bound(BoundQuery(eps=eps, m=m, r=r))


class RegionTest(SimpleTestCase):
    """Pertenencia a U_r."""

    def test_rank_two_reduction(self):
        self.assertTrue(RegionService.in_U_r(1.5, 1.6, 2))
        self.assertFalse(RegionService.in_U_r(1.5, 1.4, 2))

    def test_rank_two_matches_reduced_inequality(self):
        for d in np.linspace(1.05, 1.95, 10):
            for mu in np.linspace(0.1, 5, 25):
                reduced = mu >= 1 / (d - 1) - (d - 1)
                if abs(mu - (1 / (d - 1) - (d - 1))) < 1e-9:
                    continue
                self.assertEqual(RegionService.in_U_r(d, mu, 2), reduced)

    def test_unbounded_rank_boundary(self):
        self.assertTrue(RegionService.in_U_r(3, 1.5, INF))
        self.assertFalse(RegionService.in_U_r(3, 1.49, INF))

    def test_nonpositive_inputs(self):
        with self.assertRaises(DomainError):
            RegionService.in_U_r(0, 1, 2)
        with self.assertRaises(DomainError):
            RegionService.in_U_r(1.5, -1, 2)

    def test_nesting(self):
        deltas = np.linspace(1.01, 4.0, 30)
        mus = np.geomspace(0.05, 20, 30)
        for r in range(1, 6):
            for d in deltas:
                for mu in mus:
                    if RegionService.in_U_r(d, mu, r + 1):
                        self.assertTrue(RegionService.in_U_r(d, mu, r), (d, mu, r))
                    if RegionService.in_U_r(d, mu, INF):
                        self.assertTrue(RegionService.in_U_r(d, mu, r), (d, mu, r))

    def test_stable_rhs_matches_direct_formula(self):
        for r in (2, 3, 7):
            for d, mu in ((1.3, 0.7), (1.8, 2.5), (3.0, 10.0)):
                x = d / (r * mu)
                direct = d / mu * ((1 + x) ** (r - 1) - x ** (r - 1)) / ((1 + x) ** r - x ** r)
                self.assertAlmostEqual(float(RegionService.dura_rhs(d, mu, r)), direct, places=12)

    def test_stayabove_margin(self):
        self.assertAlmostEqual(RegionService.stayabove_margin(1.5, 2.0, 1), 1.25)
        self.assertAlmostEqual(RegionService.stayabove_margin(1.5, 2.0, 2), 1.203125)


class DeltaBoundTest(SimpleTestCase):

    def test_unbounded_closed_form(self):
        self.assertAlmostEqual(delta(0.25).value, 2.25, delta=1e-6)
        for eps in EPS_GRID:
            self.assertAlmostEqual(delta(eps).value, (1 + math.sqrt(eps)) ** 2, delta=1e-6)

    def test_rank_two_closed_form(self):
        self.assertAlmostEqual(delta(0.5, r=2).value, 2.0, delta=1e-6)
        for eps in EPS_GRID:
            expected = DeltaService.delta_closed_form(BoundQuery(eps=eps, r=2))
            self.assertAlmostEqual(delta(eps, r=2).value, expected, delta=1e-6)

    def test_finite_m_closed_form(self):
        self.assertAlmostEqual(delta(0.25, m=4).value, 1.0, delta=1e-6)
        for eps in (0.25, 0.5, 0.7, 1.0):
            expected = DeltaService.delta_closed_form(BoundQuery(eps=eps, m=4))
            self.assertAlmostEqual(delta(eps, m=4).value, expected, delta=1e-6)
        expected = DeltaService.delta_closed_form(BoundQuery(eps=0.5, m=10))
        self.assertAlmostEqual(delta(0.5, m=10).value, expected, delta=1e-6)

    def test_witness_is_feasible(self):
        for query in ((0.3, INF, 3), (0.25, 4, INF), (0.7, INF, 2), (0.1, 10, 4)):
            result = delta(*query)
            self.assertTrue(RegionService.in_U_r(result.delta, result.mu, query[2]))
            self.assertAlmostEqual(
                DeltaService.objective(BoundQuery(*query), result.delta, result.mu), result.value, places=12,
            )

    def test_upper_bound_holds(self):
        for r in (2, 3, 4, 5, 8):
            for eps in (0.1, 0.3, 0.6, 0.9):
                self.assertLessEqual(delta(eps, r=r).value, DeltaService.delta_upper_r(eps, r) + 1e-6)

    def test_nondecreasing_in_r(self):
        values = [delta(0.3, r=r).value for r in (1, 2, 3, 5, INF)]
        for smaller, larger in zip(values, values[1:]):
            self.assertLessEqual(smaller, larger + 1e-7)

    def test_nondecreasing_in_eps(self):
        values = [delta(eps, r=3).value for eps in (0.1, 0.2, 0.4, 0.8)]
        for low, high in zip(values, values[1:]):
            self.assertLessEqual(low, high + 1e-7)


class ClosedFormTest(SimpleTestCase):

    def test_rank_two(self):
        self.assertAlmostEqual(DeltaService.delta_closed_form(BoundQuery(eps=0.25, r=2)), 1.866025, places=6)
        self.assertEqual(DeltaService.delta_closed_form(BoundQuery(eps=0.7, r=2)), 2.0)

    def test_unbounded(self):
        self.assertAlmostEqual(DeltaService.delta_closed_form(BoundQuery(eps=0.09)), 1.69, places=12)

    def test_finite_m_domain(self):
        with self.assertRaises(DomainError):
            DeltaService.delta_closed_form(BoundQuery(eps=0.1, m=4))
        self.assertIsNone(DeltaService.delta_closed_form(BoundQuery(eps=0.2, m=4)))

    def test_not_available(self):
        self.assertIsNone(DeltaService.delta_closed_form(BoundQuery(eps=0.3, m=5, r=3)))

    def test_upper_r(self):
        self.assertAlmostEqual(DeltaService.delta_upper_r(0.3, 3), 2.23923, places=5)
        self.assertAlmostEqual(DeltaService.delta_upper_r(0.9, 3), 2.3, places=12)


class MssComparisonTest(SimpleTestCase):

    def test_mss_value(self):
        self.assertAlmostEqual(DeltaService.mss_bound(0.125, 2), 1.125, places=12)

    def test_partition_bound_recovers_mss(self):
        for eps in (0.05, 0.1, 0.25):
            for k in (2, 3):
                self.assertAlmostEqual(
                    DeltaService.partition_bound(eps, INF, INF, k), DeltaService.mss_bound(eps, k), delta=1e-6,
                )

    def test_rank_one_improvement(self):
        for k in (3, 4):
            self.assertLess(DeltaService.partition_bound(0.1, INF, 1, k), DeltaService.mss_bound(0.1, k) - 1e-6)


class BoundQuerySerializerTest(SimpleTestCase):

    def test_infinity_token(self):
        serializer = BoundQuerySerializer(data={'eps': 0.25, 'm': 'inf', 'r': 2})
        self.assertTrue(serializer.is_valid(), serializer.errors)
        query = serializer.save()
        self.assertEqual(query.m, INF)
        self.assertEqual(query.r, 2)

    def test_invalid_counts(self):
        for bad in (0, -2, 'many', True, 1.5):
            serializer = BoundQuerySerializer(data={'eps': 0.25, 'r': bad})
            self.assertFalse(serializer.is_valid())
            self.assertIn('r', serializer.errors)

    def test_nonpositive_eps(self):
        serializer = BoundQuerySerializer(data={'eps': 0})
        self.assertFalse(serializer.is_valid())
        self.assertIn('eps', serializer.errors)

    def test_delta_result_representation(self):
        data = DeltaResultSerializer(delta(0.25)).data
        self.assertAlmostEqual(data['value'], 2.25, delta=1e-6)
        self.assertEqual(set(data), {'value', 'delta', 'mu', 'branch', 'width', 'boundary_hit', 'monotone'})
