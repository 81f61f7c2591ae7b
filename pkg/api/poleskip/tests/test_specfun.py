import cmath

import mpmath
import numpy as np
from django.test import SimpleTestCase

from ..specfun import (
    gamma, gamma_ratio, hyp2f1, hyp2f1_connection,
    nonpositive_integer_index, whittaker_m,)
from ..types import WHITTAKER_BRANCH, BranchConvention
from ..utils.exceptions import (
    ConnectionDegenerate, IllDefinedC, IllDefinedOrder,
    IndeterminateRatio, PoleAtNonpositiveInteger,)
from .utils import ComplexAssertions


def mp(value) -> complex:
    return complex(value)


class GammaTestCase(ComplexAssertions, SimpleTestCase):
    def test_matches_mpmath(self):
        for z in (1, 0.5, 0.5 + 1j, -2.5 + 1j, 4 - 2j, 20 + 30j):
            with mpmath.workdps(50):
                expected = mp(mpmath.gamma(z))
            self.assertLess(abs(gamma(z) - expected), 1e-12 * abs(expected), f"z = {z}")

    def test_reflection(self):
        for z in (0.3 + 0.2j, -1.7 + 0.5j, 2.2 - 1.1j):
            self.assertComplexAlmostEqual(gamma(z) * gamma(1 - z), cmath.pi / cmath.sin(cmath.pi * z), 1e-12)

    def test_duplication(self):
        for z in (0.3 + 0.2j, 1.7 - 0.5j, 3.1 + 2j):
            expected = 2**(1 - 2 * z) * cmath.sqrt(cmath.pi) * gamma(2 * z)
            self.assertComplexAlmostEqual(gamma(z) * gamma(z + 0.5), expected, 1e-12)

    def test_pole_reports_its_index(self):
        with self.assertRaises(PoleAtNonpositiveInteger) as context:
            gamma(-2 + 1e-14j)
        self.assertEqual(context.exception.n, 2)

    def test_nonpositive_integer_index(self):
        self.assertEqual(nonpositive_integer_index(0), 0)
        self.assertEqual(nonpositive_integer_index(-3.0), 3)
        self.assertIsNone(nonpositive_integer_index(1.0))
        self.assertIsNone(nonpositive_integer_index(-0.5))

    def test_ratio(self):
        self.assertComplexAlmostEqual(gamma_ratio([5], [3]), 12, 1e-12)
        self.assertEqual(gamma_ratio([1.5], [-1]), 0)
        with self.assertRaises(PoleAtNonpositiveInteger):
            gamma_ratio([-1], [1.5])
        with self.assertRaises(IndeterminateRatio):
            gamma_ratio([0], [-2])


class Hyp2f1TestCase(ComplexAssertions, SimpleTestCase):
    a, b, c = 0.3 + 0.2j, 1.1, 2.5

    def test_every_branch_matches_mpmath(self):
        # plain series, Pfaff, connection, a point beyond the series radius and the unit circle
        for z in (0.3, -0.9, 0.85 + 0.1j, 0.5 + 0.5j, 0.3 + 0.9j, cmath.exp(1j * cmath.pi / 3)):
            expected = mp(mpmath.hyp2f1(self.a, self.b, self.c, z))
            self.assertComplexAlmostEqual(hyp2f1(self.a, self.b, self.c, z), expected, 1e-9, f"z = {z}")

    def test_unit_circle(self):
        for z in (cmath.exp(1j * cmath.pi / 3), cmath.exp(-1j * cmath.pi / 3), cmath.exp(2j)):
            expected = mp(mpmath.hyp2f1(0.5, 0.25 + 0.5j, 2.2, z))
            self.assertComplexAlmostEqual(hyp2f1(0.5, 0.25 + 0.5j, 2.2, z), expected, 1e-9, f"z = {z}")

    def test_connection_on_random_parameters(self):
        rng = np.random.default_rng(12)
        draws = 0
        while draws < 50:
            a = complex(rng.uniform(-1.5, 1.5), rng.uniform(-1, 1))
            b = complex(rng.uniform(-1.5, 1.5), rng.uniform(-1, 1))
            c = complex(rng.uniform(0.5, 3), rng.uniform(-1, 1))
            s = c - a - b
            if abs(s - round(s.real)) < 0.05:
                continue
            draws += 1
            z = 2.0
            while abs(z) > 0.95:
                z = 1 - 0.5 * rng.uniform(0, 1) * cmath.exp(1j * rng.uniform(-np.pi, np.pi))
            expected = mp(mpmath.hyp2f1(a, b, c, z))
            self.assertComplexAlmostEqual(hyp2f1_connection(a, b, c, z), expected, 1e-8,
                                          f"(a, b, c, z) = {(a, b, c, z)}")

    def test_degenerate_connection_is_extrapolated(self):
        with self.assertRaises(ConnectionDegenerate):
            hyp2f1_connection(0.3, 0.7, 2, 0.9)
        expected = mp(mpmath.hyp2f1(0.3, 0.7, 2, 0.9))
        self.assertComplexAlmostEqual(hyp2f1(0.3, 0.7, 2, 0.9), expected, 1e-7)

    def test_nonpositive_c(self):
        with self.assertRaises(IllDefinedC):
            hyp2f1(0.5, 0.5, -1, 0.2)

    def test_outside_unit_disk(self):
        with self.assertRaises(ValueError):
            hyp2f1(0.5, 0.5, 1.5, -3)


class WhittakerTestCase(ComplexAssertions, SimpleTestCase):
    def test_matches_mpmath_on_the_principal_sheet(self):
        for kappa, mu, zeta in ((0.3j, 1.5, 0.8 + 0.4j), (-0.5, 0.25, -1.2 + 0.3j), (1 + 1j, 0.5, 1.4j)):
            expected = mp(mpmath.whitm(kappa, mu, zeta))
            self.assertComplexAlmostEqual(whittaker_m(kappa, mu, zeta), expected, 1e-10)

    def test_solves_whittaker_equation(self):
        h = 1e-2
        for kappa, mu, zeta in ((0.3j, 1.5, 0.8 + 0.4j), (-0.5, 0.25, -1.2 + 0.3j), (1 + 1j, 0.5, 1.4j)):
            def m(z):
                return whittaker_m(kappa, mu, z)

            second = (-m(zeta + 2 * h) + 16 * m(zeta + h) - 30 * m(zeta)
                      + 16 * m(zeta - h) - m(zeta - 2 * h)) / (12 * h * h)
            residual = second + (-0.25 + kappa / zeta + (0.25 - mu * mu) / zeta**2) * m(zeta)
            self.assertLess(abs(residual), 1e-6 * max(1.0, abs(m(zeta))))

    def test_branch_of_the_power(self):
        # arg zeta lives in (-pi/2, 3pi/2], the principal log in (-pi, pi]
        self.assertAlmostEqual(WHITTAKER_BRANCH.log(-1 - 1j).imag, 5 * cmath.pi / 4)
        self.assertAlmostEqual(BranchConvention().log(-1 - 1j).imag, -3 * cmath.pi / 4)
        self.assertAlmostEqual(WHITTAKER_BRANCH.log(2j), BranchConvention().log(2j))

    def test_negative_integer_order(self):
        with self.assertRaises(IllDefinedOrder) as context:
            whittaker_m(0.2, -1, 0.5)
        self.assertEqual(context.exception.two_nu, -2)

    def test_origin(self):
        self.assertEqual(whittaker_m(0.2, 1.0, 0), 0)
