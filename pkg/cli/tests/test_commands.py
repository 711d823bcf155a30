import csv
import io
import json
import tempfile
from pathlib import Path
from unittest import mock

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase

from bounds.services import DeltaService
from cli.models import RunConfig
from cli.services import OutputService
from core.utils.exceptions import DomainError

HALVES = {
    'form': {'kind': 'product', 'n': 2},
    'vectors': [[0.5, 0], [0.5, 0], [0, 0.5], [0, 0.5]],
    'k': 2,
    'eps': 0.5,
    'r': 1,
}


class CommandTestCase(SimpleTestCase):

    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.addCleanup(self.tmp.cleanup)

    def write_json(self, name, data):
        path = Path(self.tmp.name) / name
        path.write_text(json.dumps(data), encoding='utf-8')
        return str(path)

    def call(self, *args, **kwargs):
        out = io.StringIO()
        call_command(*args, stdout=out, **kwargs)
        return out.getvalue()


class BoundsCommandTest(CommandTestCase):

    def test_mss_row(self):
        text = self.call('bounds', '--eps', '0.125', '--m', 'inf', '--r', '1', '--k', '2')
        rows = list(csv.DictReader(io.StringIO(text)))
        self.assertEqual(len(rows), 1)
        row = rows[0]
        self.assertEqual(row['m'], 'inf')
        self.assertAlmostEqual(float(row['mss']), 1.125)
        self.assertAlmostEqual(float(row['partition_bound']), 0.9330127, places=5)

    def test_finite_m_closed_form(self):
        text = self.call('bounds', '--eps', '0.25', '--m', '4', '--r', 'inf', '--k', '2')
        row = next(csv.DictReader(io.StringIO(text)))
        self.assertAlmostEqual(float(row['delta_closed']), 1.0)
        self.assertAlmostEqual(float(row['delta_numeric']), 1.0, delta=1e-6)

    def test_empty_range(self):
        text = self.call('bounds')
        self.assertEqual(text.strip(), 'eps,m,r,k,delta_numeric,delta_closed,delta_upper_a3,mss,partition_bound')

    def test_json_grid_input(self):
        path = self.write_json('grid.json', {'eps': [0.25, 0.5], 'r': ['inf', 2], 'k': [2]})
        report = json.loads(self.call('bounds', '--input', path, '--format', 'json'))
        self.assertEqual(len(report['rows']), 4)
        self.assertEqual(report['rows'][0]['r'], 'inf')
        self.assertAlmostEqual(report['rows'][0]['delta_closed'], 2.25)

    def test_nonpositive_eps(self):
        with self.assertRaises(CommandError) as ctx:
            self.call('bounds', '--eps', '-1')
        self.assertEqual(ctx.exception.returncode, 2)
        self.assertIn('eps', str(ctx.exception))


class EigenCommandTest(CommandTestCase):

    def test_lorentz_point(self):
        path = self.write_json('eigen.json', {'form': {'kind': 'lorentz', 'n': 3}, 'points': [[2, 1, 1]]})
        report = json.loads(self.call('eigen', '--input', path))
        point = report['points'][0]
        self.assertAlmostEqual(point['eigenvalues'][0], 3.41421, places=5)
        self.assertAlmostEqual(point['eigenvalues'][1], 0.58579, places=5)
        self.assertEqual(point['rank'], 2)
        self.assertTrue(point['in_cone'])

    def test_missing_input(self):
        with self.assertRaises(CommandError) as ctx:
            self.call('eigen')
        self.assertEqual(ctx.exception.returncode, 2)

    def test_malformed_json_reports_position(self):
        path = Path(self.tmp.name) / 'broken.json'
        path.write_text('{"form": {"kind": "lorentz",\n  "n": 3,}', encoding='utf-8')
        with self.assertRaises(CommandError) as ctx:
            self.call('eigen', '--input', str(path))
        self.assertEqual(ctx.exception.returncode, 2)
        self.assertIn('"line": 2', str(ctx.exception))

    def test_schema_error_names_field(self):
        path = self.write_json('eigen.json', {'form': {'kind': 'lorentz'}, 'points': [[2, 1, 1]]})
        with self.assertRaises(CommandError) as ctx:
            self.call('eigen', '--input', path)
        self.assertEqual(ctx.exception.returncode, 2)
        self.assertIn('form.n', str(ctx.exception))


class PartitionCommandTest(CommandTestCase):

    def test_halves_instance(self):
        path = self.write_json('halves.json', HALVES)
        report = json.loads(self.call('partition', '--input', path, '--brute-force'))
        self.assertEqual(report['partition']['parts'], [[1, 3], [2, 4]])
        for norm in report['partition']['norms']:
            self.assertAlmostEqual(norm, 0.5, places=6)
        self.assertTrue(report['verification']['passed'])
        self.assertAlmostEqual(report['brute_force']['norm'], 0.5)
        self.assertIsNone(report['partition']['wall_time'])

    def test_output_is_stable(self):
        path = self.write_json('halves.json', HALVES)
        self.assertEqual(self.call('partition', '--input', path), self.call('partition', '--input', path))

    def test_failed_hypothesis_is_input_error(self):
        path = self.write_json('bad.json', {**HALVES, 'eps': 0.25})
        with self.assertRaises(CommandError) as ctx:
            self.call('partition', '--input', path)
        self.assertEqual(ctx.exception.returncode, 2)
        self.assertIn('trace', str(ctx.exception))

    def test_bound_violation_is_check_failure(self):
        path = self.write_json('halves.json', HALVES)
        with mock.patch.object(DeltaService, 'partition_bound', return_value=0.1):
            with self.assertRaises(CommandError) as ctx:
                self.call('partition', '--input', path)
        self.assertEqual(ctx.exception.returncode, 1)

    def test_csv_not_available(self):
        path = self.write_json('halves.json', HALVES)
        with self.assertRaises(CommandError) as ctx:
            self.call('partition', '--input', path, '--format', 'csv')
        self.assertEqual(ctx.exception.returncode, 2)


class GenCommandTest(CommandTestCase):

    def test_round_trip_into_partition(self):
        for family, n, m, seed in (('symdet', 2, 6, 7), ('product', 3, 6, 1)):
            output = str(Path(self.tmp.name) / f'{family}.json')
            self.call('gen', '--family', family, '--n', str(n), '--m', str(m), '--eps', '0.9',
                      '--seed', str(seed), '--output', output)
            report = json.loads(self.call('partition', '--input', output))
            self.assertTrue(report['validation']['passed'])
            self.assertTrue(report['verification']['passed'])

    def test_same_seed_same_bytes(self):
        args = ('gen', '--family', 'symdet', '--n', '2', '--m', '6', '--eps', '0.9', '--seed', '3')
        self.assertEqual(self.call(*args), self.call(*args))

    def test_infeasible_spec(self):
        with self.assertRaises(CommandError) as ctx:
            self.call('gen', '--family', 'product', '--n', '3', '--m', '2', '--eps', '0.5')
        self.assertEqual(ctx.exception.returncode, 2)


class VerifyCommandTest(CommandTestCase):

    def test_small_sweep(self):
        report = json.loads(self.call('verify', '--lemma', 'trec', '--lemma', 'newton', '--contexts', '5'))
        self.assertEqual(report['failed'], 0)
        self.assertEqual(set(report['by_lemma']), {'trec', 'newton'})
        self.assertEqual(report['contexts'], 5)

    def test_bad_jobs(self):
        with self.assertRaises(CommandError) as ctx:
            self.call('verify', '--contexts', '1', '--jobs', '0')
        self.assertEqual(ctx.exception.returncode, 2)


class OutputServiceTest(SimpleTestCase):

    def test_infinity_token_and_sorting(self):
        text = OutputService.dumps({'r': float('inf'), 'a': (1, 2)})
        self.assertEqual(json.loads(text), {'a': [1, 2], 'r': 'inf'})
        self.assertLess(text.index('"a"'), text.index('"r"'))

    def test_csv_blank_for_missing(self):
        text = OutputService.csv_text(('eps', 'delta_closed'), [{'eps': 0.5, 'delta_closed': None}])
        self.assertEqual(text, 'eps,delta_closed\n0.5,\n')

    def test_run_config_rejects_bad_tolerance(self):
        with self.assertRaises(DomainError):
            RunConfig(subcommand='verify', tol=0.0)
