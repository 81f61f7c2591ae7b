import cmath

import numpy as np
from django.test import SimpleTestCase

from ..analytic import pt1_jost_plus, pt1_regular, pt1_s, pt2_jost_plus
from ..locator import count_winding
from ..solver import (
    CutoffSpec, NumericalPotential, integrate_jost, integrate_regular, ir_cutoff_s,
    jost_functions, numeric_s, uv_cutoff_jost, uv_cutoff_s, wronskian,)
from ..utils.exceptions import IndeterminateRatio, OriginSingularityTooStrong
from .utils import ComplexAssertions


class FreeSolverTestCase(ComplexAssertions, SimpleTestCase):
    def test_free_scattering(self):
        pair = jost_functions(NumericalPotential.free(), 0.7)
        self.assertComplexAlmostEqual(pair.f_plus, 1, 1e-8)
        self.assertComplexAlmostEqual(pair.s, 1, 1e-8)

    def test_free_jost_solution_is_a_plane_wave(self):
        f, fp = integrate_jost(NumericalPotential.free(), 0.7, [1.0, 2.0])
        self.assertComplexAlmostEqual(f[1], np.exp(1.4j), 1e-10)
        self.assertComplexAlmostEqual(fp[0], 0.7j * np.exp(0.7j), 1e-10)


class SinhSqSolverTestCase(ComplexAssertions, SimpleTestCase):
    def test_regular_solution(self):
        phi, _ = integrate_regular(NumericalPotential.sinh_sq(1.5), 0.8, [1.0])
        self.assertComplexAlmostEqual(phi[0], pt1_regular(0.8, 1.5, 1.0), 1e-7)

    def test_numeric_s_matches_closed_form(self):
        pot = NumericalPotential.sinh_sq(1.5)
        self.assertComplexAlmostEqual(numeric_s(pot, 0.8), pt1_s(0.8, 1.5), 1e-6)
        self.assertComplexAlmostEqual(jost_functions(pot, 0.8).f_plus, pt1_jost_plus(0.8, 1.5), 1e-6)

    def test_deep_in_the_upper_half_plane(self):
        k = 0.1 + 2j
        pair = jost_functions(NumericalPotential.sinh_sq(1.5), k)
        self.assertComplexAlmostEqual(pair.f_plus, pt1_jost_plus(k, 1.5), 1e-5)

    def test_nu_must_match_the_potential(self):
        with self.assertRaises(ValueError):
            integrate_regular(NumericalPotential.sinh_sq(1.5), 0.8, [1.0], nu=0.7)

    def test_origin_singularity_without_series(self):
        pot = NumericalPotential(sampler=lambda x: 1 / x**3, nu=0.5, decay_rate=None)
        with self.assertRaises(OriginSingularityTooStrong):
            integrate_regular(pot, 0.5, [1.0])


WAVE_GRID = [complex(re, im) for re in (0.2, 0.6, 1.0, 1.5, 2.5) for im in (-0.4, -0.1, 0.1, 0.4)]


class JostGridTestCase(ComplexAssertions, SimpleTestCase):
    def test_sinh_sq_grid(self):
        for nu in (0.6, 1.0, 2.3):
            pot = NumericalPotential.sinh_sq(nu)
            for k in WAVE_GRID:
                expected = pt1_jost_plus(k, nu)
                self.assertLess(abs(jost_functions(pot, k).f_plus - expected), 1e-6 * abs(expected), f"nu = {nu}, k = {k}")

    def test_cosh_sq_grid(self):
        for kappa in (0.8, 1.5, 3.0):
            pot = NumericalPotential.cosh_sq(kappa)
            for k in WAVE_GRID:
                expected = pt2_jost_plus(k, kappa)
                self.assertLess(abs(jost_functions(pot, k).f_plus - expected), 1e-6 * abs(expected),
                                f"kappa = {kappa}, k = {k}")


class IdentityTestCase(ComplexAssertions, SimpleTestCase):
    pot = NumericalPotential.sinh_sq(1.5)
    k = 0.8 + 0.1j

    def test_wronskian_of_jost_solutions(self):
        points = [0.3, 0.6, 1.0, 2.0, 3.0]
        f_plus, f_plus_p = integrate_jost(self.pot, self.k, points, sign=1)
        f_minus, f_minus_p = integrate_jost(self.pot, self.k, points, sign=-1)
        for values in zip(f_plus, f_plus_p, f_minus, f_minus_p):
            self.assertComplexAlmostEqual(wronskian(*values), -2j * self.k, 1e-8)

    def test_regular_solution_from_jost_functions(self):
        pair = jost_functions(self.pot, self.k)
        phi, _ = integrate_regular(self.pot, self.k, [2.0])
        f_plus, _ = integrate_jost(self.pot, self.k, [2.0], sign=1)
        f_minus, _ = integrate_jost(self.pot, self.k, [2.0], sign=-1)
        expected = pair.f_plus * f_minus[0] - pair.f_minus * f_plus[0]
        self.assertComplexAlmostEqual(-2j * self.k * phi[0], expected, 1e-7)

    def test_unitarity(self):
        for k in (0.3, 0.8, 2.0):
            self.assertAlmostEqual(abs(numeric_s(self.pot, k)), 1, delta=1e-7)


class CutoffTestCase(ComplexAssertions, SimpleTestCase):
    def test_truncation_radius(self):
        pot = NumericalPotential.sinh_sq(1.5).truncated(3.0)
        self.assertEqual(pot(3.5), 0)
        self.assertNotEqual(pot(2.5), 0)
        with self.assertRaises(ValueError):
            pot.truncated(0)
        with self.assertRaises(ValueError):
            CutoffSpec(ir_radius=-1)

    def test_ir_cutoff_keeps_the_pole(self):
        truncated = NumericalPotential.sinh_sq(0.2).truncated(20.0)
        winding = count_winding(lambda k: jost_functions(truncated, k).f_plus, -0.7j, 0.05, n_points=64)
        self.assertEqual(winding, 1)

    def test_ir_cutoff_of_free_potential(self):
        cutoff = CutoffSpec(ir_radius=5.0)
        self.assertComplexAlmostEqual(ir_cutoff_s(NumericalPotential.free(), cutoff, 0.6), 1, 1e-8)

    def test_uv_cutoff_of_free_potential(self):
        cutoff = CutoffSpec(uv_radius=0.1)
        self.assertComplexAlmostEqual(uv_cutoff_jost(NumericalPotential.free(), cutoff, 0.6), 1, 1e-9)
        self.assertComplexAlmostEqual(uv_cutoff_s(NumericalPotential.free(), cutoff, 0.6), 1, 1e-9)

    def test_uv_cutoff_of_singular_potential_converges(self):
        pot = NumericalPotential.sinh_sq(1.5)

        def spread(a: float) -> float:
            ratios = [uv_cutoff_jost(pot, CutoffSpec(uv_radius=a), k) / jost_functions(pot, k).f_plus
                      for k in (0.3, 0.6, 0.9)]
            return max(abs(ratio / ratios[0] - 1) for ratio in ratios)

        coarse, fine = spread(0.1), spread(0.05)
        self.assertLess(fine, coarse / 4)
        self.assertLess(fine, 1e-4)

    def test_uv_cutoff_resolves_skips(self):
        cutoff = CutoffSpec(uv_radius=0.1)
        for nu, k in ((-1, 0.5j), (-2, 0.5j), (-2, 1.5j)):
            with self.assertRaises(IndeterminateRatio):
                pt1_s(k, nu)
            value = uv_cutoff_s(NumericalPotential.sinh_sq(nu), cutoff, k)
            self.assertTrue(cmath.isfinite(value), f"nu = {nu}, k = {k}")
            self.assertGreater(abs(value), 1e-6)

    def test_uv_cutoff_converges(self):
        pot = NumericalPotential.cosh_sq(3)

        def spread(a: float) -> float:
            ratios = [uv_cutoff_jost(pot, CutoffSpec(uv_radius=a), k) / jost_functions(pot, k).f_plus
                      for k in (0.3, 0.6, 0.9)]
            return max(abs(ratio - ratios[0]) for ratio in ratios)

        coarse, fine = spread(0.1), spread(0.05)
        self.assertLess(fine, coarse)
        self.assertLess(fine, 1e-2)
