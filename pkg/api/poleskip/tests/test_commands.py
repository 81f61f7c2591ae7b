import csv
import io
import json
import os
import tempfile

from django.core.management.base import CommandError
from django.test import SimpleTestCase

from .utils import run_test_command, run_test_command_json


class CatalogCommandTestCase(SimpleTestCase):
    def test_json(self):
        data = run_test_command_json('catalog', '--model', 'pt1', '--n-max', '2')
        self.assertEqual(data['model'], 'pt1')
        self.assertEqual(len(data['points']), 11)
        self.assertIn('class', data['points'][0])

    def test_csv(self):
        text = run_test_command('catalog', '--model', 'pt2', '--n-max', '2', '--format', 'csv')
        rows = list(csv.DictReader(io.StringIO(text)))
        self.assertEqual(len(rows), 5)
        self.assertEqual(set(rows[0]), {'n', 'param_re', 'param_im', 'k_re', 'k_im', 'class', 'redundant', 'state'})

    def test_out_file(self):
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, 'catalog.json')
            self.assertEqual(run_test_command('catalog', '--model', 'onepole', '--out', path), '')
            with open(path, encoding='utf-8') as stream:
                self.assertEqual(len(json.load(stream)['points']), 1)

    def test_bad_parameter(self):
        with self.assertRaises(CommandError) as context:
            run_test_command('catalog', '--model', 'pt1', '--param', 'nu')
        self.assertEqual(context.exception.returncode, 2)


class LocateCommandTestCase(SimpleTestCase):
    def test_refines_the_seed(self):
        data = run_test_command_json('locate', '--model', 'pt1', '--at', 'nu=-1.05,k=0+0.52i')
        self.assertAlmostEqual(data['param']['re'], -1, places=9)
        self.assertAlmostEqual(data['k']['im'], 0.5, places=9)
        self.assertEqual(data['class'], 'Pole1-Zero1')

    def test_pair(self):
        data = run_test_command_json('locate', '--model', 'pt1', '--at', 'nu=-1,k=0+0.5i', '--pair')
        self.assertAlmostEqual(data['partner']['k']['im'], -0.5, places=9)

    def test_double_zero(self):
        with self.assertRaises(CommandError) as context:
            run_test_command('locate', '--model', 'pt1', '--at', 'nu=-1.5,k=0+1i')
        self.assertEqual(context.exception.returncode, 3)

    def test_seed_needs_both_axes(self):
        with self.assertRaises(CommandError) as context:
            run_test_command('locate', '--model', 'pt1', '--at', 'nu=-1')
        self.assertEqual(context.exception.returncode, 2)

    def test_tolerance_range(self):
        with self.assertRaises(CommandError) as context:
            run_test_command('locate', '--model', 'pt1', '--at', 'nu=-1,k=0+0.5i', '--tol', '1')
        self.assertEqual(context.exception.returncode, 2)


class SlopeCommandTestCase(SimpleTestCase):
    def test_slope(self):
        data = run_test_command_json('slope', '--model', 'pt1', '--at', 'nu=-1,k=0+0.5i')
        self.assertEqual(data['point']['class'], 'Pole1-Zero1')
        self.assertAlmostEqual(data['fit']['ratios']['b/a']['im'], -1, places=2)
        self.assertAlmostEqual(data['fit']['ratios']['c/a']['re'], 0.5, places=2)

    def test_regular_point(self):
        with self.assertRaises(CommandError) as context:
            run_test_command('slope', '--model', 'pt1', '--at', 'nu=2,k=0.5')
        self.assertEqual(context.exception.returncode, 4)


class ScanCommandTestCase(SimpleTestCase):
    def test_closed_form(self):
        text = run_test_command('scan', '--model', 'pt2', '--param', 'kappa=1', '--grid', 'k:0.1:0.9:5')
        rows = list(csv.DictReader(io.StringIO(text)))
        self.assertEqual(len(rows), 5)
        for row in rows:
            self.assertEqual(row['status'], 'ok')
            self.assertAlmostEqual(float(row['s_re']), 1, places=10)
            self.assertAlmostEqual(float(row['s_im']), 0, places=10)

    def test_two_axes(self):
        text = run_test_command('scan', '--model', 'onepole', '--grid', 'c:0.1:0.5:2', '--grid', 'k:0.2:1:3')
        rows = list(csv.DictReader(io.StringIO(text)))
        self.assertEqual(len(rows), 6)
        self.assertEqual(list(rows[0])[:4], ['c_re', 'c_im', 'k_re', 'k_im'])

    def test_failed_nodes_are_reported(self):
        text = run_test_command('scan', '--model', 'onepole', '--param', 'c=0', '--grid', 'k:0:1:2')
        rows = list(csv.DictReader(io.StringIO(text)))
        self.assertEqual(rows[0]['status'], 'IndeterminateRatio')
        self.assertEqual(rows[1]['status'], 'ok')

    def test_numeric_potential(self):
        data = run_test_command_json('scan', '--potential', 'free', '--grid', 'k:0.2:1.0:3', '--format', 'json')
        self.assertEqual(data['columns'][-1], 'status')
        for row in data['rows']:
            self.assertEqual(row[-1], 'ok')
            self.assertAlmostEqual(float(row[2]), 1, places=6)

    def test_grid_limit(self):
        with self.assertRaises(CommandError) as context:
            run_test_command('scan', '--model', 'pt1', '--param', 'nu=2', '--grid', 'k:0:1:2000000')
        self.assertEqual(context.exception.returncode, 2)

    def test_unknown_axis(self):
        with self.assertRaises(CommandError) as context:
            run_test_command('scan', '--model', 'pt1', '--grid', 'x:0:1:3')
        self.assertEqual(context.exception.returncode, 2)


class CutoffCommandTestCase(SimpleTestCase):
    def test_ir_cutoff_removes_redundant_pole(self):
        data = run_test_command_json('cutoff', '--model', 'pt1', '--nu', '2', '--ir', '12', '--probe', 'k=0+1i')
        self.assertEqual(data['winding_before'], -1)
        self.assertEqual(data['poles_after'], 0)
        self.assertEqual(data['message'], 'no pole within 0.2')

    def test_needs_one_cutoff(self):
        with self.assertRaises(CommandError) as context:
            run_test_command('cutoff', '--model', 'pt1', '--nu', '2', '--probe', 'k=0+1i')
        self.assertEqual(context.exception.returncode, 2)

    def test_closed_form_only_models(self):
        with self.assertRaises(CommandError) as context:
            run_test_command('cutoff', '--model', 'onepole', '--param', 'c=1', '--ir', '5', '--probe', 'k=0+1i')
        self.assertEqual(context.exception.returncode, 2)


class HoloCommandTestCase(SimpleTestCase):
    def test_btz_first_matsubara_point(self):
        data = run_test_command_json('holo', '--metric', 'btz-like', '--omega', '0-1i', '--T', '0.159154943')
        self.assertAlmostEqual(data['nu']['re'], -0.5, places=6)
        self.assertEqual(data['leading_coefficient'], {'re': 0.0, 'im': 0.0})
        self.assertAlmostEqual(data['exponent']['re'], 0, places=6)

    def test_rindler(self):
        data = run_test_command_json('holo', '--metric', 'rindler', '--omega', '0-2i')
        self.assertAlmostEqual(data['nu']['re'], -1, places=9)
        self.assertAlmostEqual(data['leading_coefficient']['re'], 0.75, places=4)
        self.assertAlmostEqual(data['expected']['re'], 0.75, places=9)

    def test_bad_frequency(self):
        with self.assertRaises(CommandError) as context:
            run_test_command('holo', '--metric', 'rindler', '--omega', 'w')
        self.assertEqual(context.exception.returncode, 2)
