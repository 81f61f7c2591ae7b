import numpy as np
import sympy
from django.test import SimpleTestCase

from ..frobenius import det_truncation
from ..holography import (
    MetricModel, effective_potential, incoming_condition,
    leading_coefficient, matsubara_dictionary, r, series_potential,)
from ..utils.exceptions import HorizonDegeneracy, NonPositiveMatsubaraIndex
from .utils import ComplexAssertions


class MetricTestCase(ComplexAssertions, SimpleTestCase):
    def test_btz_temperature(self):
        metric = MetricModel.btz_like()
        self.assertAlmostEqual(float(metric.T), 1 / (2 * np.pi))

    def test_numeric_metric(self):
        metric = MetricModel(F=lambda point: point * point - 1)
        self.assertAlmostEqual(complex(metric.T).real, 1 / (2 * np.pi), places=8)

    def test_horizon_must_sit_at_one(self):
        with self.assertRaises(ValueError):
            MetricModel(F=r**2 - 4)

    def test_extremal_horizon(self):
        with self.assertRaises(HorizonDegeneracy):
            MetricModel(F=(r - 1)**2)

    def test_temperature_mismatch(self):
        with self.assertRaises(ValueError):
            MetricModel(F=2 * (r - 1), T=1)


class EffectivePotentialTestCase(ComplexAssertions, SimpleTestCase):
    def test_btz_exponent(self):
        problem = effective_potential(MetricModel.btz_like(), -0.5j)
        self.assertComplexAlmostEqual(problem.nu, -0.25, 1e-12)
        self.assertComplexAlmostEqual(incoming_condition(problem), 0.25, 1e-12)
        self.assertComplexAlmostEqual(leading_coefficient(problem), -0.1875, 1e-4)

    def test_rindler_exponent(self):
        problem = effective_potential(MetricModel.rindler(), -2j)
        self.assertComplexAlmostEqual(problem.nu, -1, 1e-12)
        self.assertComplexAlmostEqual(leading_coefficient(problem), 0.75, 1e-4)

    def test_leading_coefficient_for_random_frequencies(self):
        rng = np.random.default_rng(3)
        metric = MetricModel.btz_like()
        for _ in range(10):
            omega = complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
            problem = effective_potential(metric, omega)
            nu = -1j * omega / (4 * np.pi * float(metric.T))
            self.assertComplexAlmostEqual(leading_coefficient(problem), nu * nu - 0.25, 1e-6, f"omega = {omega}")

    def test_numeric_metric_matches_symbolic(self):
        problem = effective_potential(MetricModel(F=lambda point: point * point - 1), -0.5j)
        self.assertComplexAlmostEqual(problem.nu, -0.25, 1e-6)
        self.assertComplexAlmostEqual(leading_coefficient(problem), -0.1875, 1e-3)


class MatsubaraTestCase(ComplexAssertions, SimpleTestCase):
    def test_dictionary(self):
        T = 0.3
        omega, nu = matsubara_dictionary(1, T)
        self.assertComplexAlmostEqual(omega, -2j * np.pi * T, 1e-12)
        self.assertEqual(nu, -0.5)

    def test_first_matsubara_frequency_has_the_btz_exponent(self):
        metric = MetricModel.btz_like()
        omega, nu = matsubara_dictionary(2, float(metric.T))
        problem = effective_potential(metric, omega)
        self.assertComplexAlmostEqual(problem.nu, nu, 1e-12)

    def test_index_must_be_positive(self):
        with self.assertRaises(NonPositiveMatsubaraIndex):
            matsubara_dictionary(0, 1.0)


class SeriesHandoffTestCase(SimpleTestCase):
    m2, w = sympy.symbols('m2 w')

    def test_horizon_coefficient(self):
        problem = effective_potential(MetricModel.btz_like(mass2=self.m2), self.w)
        pot = series_potential(problem, order=2)
        expected = self.m2 / 2 + self.w**2 / 4 + sympy.Rational(1, 4)
        self.assertEqual(sympy.simplify(pot.v[-1] - expected), 0)

    def test_first_determinant(self):
        problem = effective_potential(MetricModel.btz_like(mass2=self.m2), self.w)
        value = det_truncation(series_potential(problem, order=2), 1)
        self.assertEqual(sympy.simplify(value - self.m2 / 2), 0)

    def test_numeric_metric_has_no_series(self):
        problem = effective_potential(MetricModel(F=lambda point: point * point - 1), -0.5j)
        with self.assertRaises(ValueError):
            series_potential(problem)
