"""Tests for the command line."""
import io
import json
import os
import shutil
import sys
import tempfile
import unittest
from contextlib import redirect_stdout

# Add parent directory to path for imports
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from app import main
from routes import EXIT_ERROR, EXIT_OK, EXIT_VERIFICATION_FAILED


def run(*argv):
    """Run the tool and return (exit code, parsed stdout)."""
    buffer = io.StringIO()
    with redirect_stdout(buffer):
        status = main(list(argv))
    return status, json.loads(buffer.getvalue())


class CliTestCase(unittest.TestCase):
    """Fixtures written into a temporary directory."""

    def setUp(self):
        """Set up test fixtures."""
        self.tmp = tempfile.mkdtemp()
        self.assertEqual(run('fixtures', 'emit', 'klein4', '--dir', self.tmp)[0], EXIT_OK)
        self.assertEqual(run('fixtures', 'emit', 'kronecker', '--dir', self.tmp)[0], EXIT_OK)

    def tearDown(self):
        shutil.rmtree(self.tmp, ignore_errors=True)

    def path(self, name):
        return os.path.join(self.tmp, name)


class TestFixturesAndAlgebra(CliTestCase):
    """Test fixtures emit and the algebra group."""

    def test_emit_lists_files(self):
        """Test the file names written for each fixture."""
        status, payload = run('fixtures', 'emit', 'atilde(2,1)', '--dir', self.tmp)
        self.assertEqual(status, EXIT_OK)
        self.assertEqual(payload['files'], ['atilde_2_1.json', 'atilde_2_1_e3.json'])
        for name in ('klein4.json', 'band_ab_l3.json', 'kronecker.json', 'kronecker_e3.json'):
            self.assertTrue(os.path.exists(self.path(name)), name)

    def test_unknown_fixture(self):
        """Test that an unknown fixture name is an error."""
        status, payload = run('fixtures', 'emit', 'octahedron', '--dir', self.tmp)
        self.assertEqual(status, EXIT_ERROR)
        self.assertEqual(payload['error']['kind'], 'unknown-fixture')

    def test_validate(self):
        """Test the structure report of the Klein-four algebra."""
        status, payload = run('algebra', 'validate', '--algebra', self.path('klein4.json'))
        self.assertEqual(status, EXIT_OK)
        self.assertTrue(payload['valid'])
        self.assertEqual(payload['dimension'], 4)
        self.assertEqual(payload['nilpotency_degree'], 3)
        self.assertFalse(payload['hereditary'])

    def test_basis_of_path_algebra(self):
        """Test the Cartan matrix and null root of the Kronecker algebra."""
        status, payload = run('algebra', 'basis', '--algebra', self.path('kronecker.json'))
        self.assertEqual(status, EXIT_OK)
        self.assertEqual(payload['cartan'], [[1, 0], [2, 1]])
        self.assertEqual(payload['null_root'], [1, 1])

    def test_missing_file(self):
        """Test that a missing AlgebraFile is reported as JSON."""
        status, payload = run('algebra', 'validate', '--algebra', self.path('absent.json'))
        self.assertEqual(status, EXIT_ERROR)
        self.assertEqual(payload['error']['kind'], 'not-found')

    def test_usage_errors(self):
        """Test unknown groups and missing options."""
        status, payload = run('sheaf', 'check')
        self.assertEqual(status, EXIT_ERROR)
        self.assertEqual(payload['error']['kind'], 'usage')
        status, payload = run('module', 'check', '--algebra', self.path('klein4.json'))
        self.assertEqual(status, EXIT_ERROR)
        self.assertIn('--module', payload['error']['detail'])


class TestModuleCommands(CliTestCase):
    """Test the module, band and tau groups."""

    def test_check_and_brick(self):
        """Test a valid band module that is not a brick."""
        options = ['--algebra', self.path('klein4.json'), '--module', self.path('band_ab_l3.json')]
        self.assertEqual(run('module', 'check', *options)[0], EXIT_OK)
        status, payload = run('module', 'brick', *options)
        self.assertEqual(status, EXIT_OK)
        self.assertFalse(payload['brick'])
        self.assertEqual(payload['end']['dim_end'], 2)

    def test_invalid_module_exits_two(self):
        """Test that a relation violation is a failed verification."""
        bad = self.path('bad.json')
        with open(bad, 'w', encoding='utf-8') as fh:
            json.dump({'dims': {'0': 1}, 'action': {'a': [['1']], 'b': [['0']]}}, fh)
        status, payload = run('module', 'check', '--algebra', self.path('klein4.json'), '--module', bad)
        self.assertEqual(status, EXIT_VERIFICATION_FAILED)
        self.assertFalse(payload['valid'])

    def test_band_parse(self):
        """Test canonical forms and named syntax errors."""
        status, payload = run('band', 'parse', 'b^- a', '--algebra', self.path('klein4.json'))
        self.assertEqual(status, EXIT_OK)
        self.assertEqual(payload['canonical'], 'a b^-')
        status, payload = run('band', 'parse', 'a a^-', '--algebra', self.path('klein4.json'))
        self.assertEqual(status, EXIT_ERROR)
        self.assertEqual(payload['error']['kind'], 'immediate-inverse')

    def test_band_ses(self):
        """Test the sequence for V(ab⁻, 2, 3)."""
        status, payload = run('band', 'ses', 'a b^-', '--algebra', self.path('klein4.json'),
                              '--lambda', '2', '--m', '3')
        self.assertEqual(status, EXIT_OK)
        self.assertTrue(payload['verified'])
        self.assertEqual(payload['dims'], [4, 6, 2])

    def test_coxeter(self):
        """Test the Coxeter check on E^(3)."""
        status, payload = run('tau', 'coxeter', '--algebra', self.path('kronecker.json'),
                              '--module', self.path('kronecker_e3.json'))
        self.assertEqual(status, EXIT_OK)
        self.assertEqual(payload['predicted'], [1, 1])

    def test_euclid_build(self):
        """Test the null root reported for D̃4."""
        status, payload = run('euclid', 'build', 'dtilde4')
        self.assertEqual(status, EXIT_OK)
        self.assertEqual(payload['null_root'], [1, 1, 2, 1, 1])


class TestDeformCommands(CliTestCase):
    """Test deform certify and deform recheck."""

    def test_certify_and_recheck(self):
        """Test a certificate written with --out and re-verified from disk."""
        report = self.path('report.json')
        status, payload = run('deform', 'certify', '--algebra', self.path('klein4.json'),
                              '--module', self.path('band_ab_l3.json'), '--levels', '3', '--out', report)
        self.assertEqual(status, EXIT_OK)
        self.assertEqual(payload['verdict']['status'], 'certified')
        self.assertEqual(payload['provenance']['seed'], 0)
        self.assertEqual(payload['tower']['mode'], 'band')
        with open(report, encoding='utf-8') as fh:
            self.assertEqual(json.load(fh), payload)
        status, payload = run('deform', 'recheck', '--report', report)
        self.assertEqual(status, EXIT_OK)
        self.assertTrue(payload['agrees'])

    def test_certify_kronecker(self):
        """Test pushout towers chosen for a module without a band."""
        status, payload = run('deform', 'certify', '--algebra', self.path('kronecker.json'),
                              '--module', self.path('kronecker_e3.json'), '--levels', '3')
        self.assertEqual(status, EXIT_OK)
        self.assertEqual(payload['tower']['mode'], 'ext-pushout')
        self.assertEqual(payload['verdict']['certified_to_level'], 3)

    def write_module(self, name, doc):
        target = self.path(name)
        with open(target, 'w', encoding='utf-8') as fh:
            json.dump(doc, fh)
        return target

    def test_certify_projective_is_rigid(self):
        """Test that P(1) exits 2 with a rigid verdict and a tangent failure."""
        module = self.write_module('p1.json', {'dims': {'0': 2, '1': 1},
                                                  'action': {'a': [['1'], ['0']], 'b': [['0'], ['1']]}})
        status, payload = run('deform', 'certify', '--algebra', self.path('kronecker.json'),
                              '--module', module, '--levels', '3')
        self.assertEqual(status, EXIT_VERIFICATION_FAILED)
        self.assertEqual(payload['verdict']['status'], 'rigid')
        self.assertIn('tangent', payload['verdict']['failures'])
        self.assertIsNone(payload['tower'])

    def test_certify_direct_sum_names_indecomposable(self):
        """Test that E^(3) ⊕ E^(3) exits 2 naming the indecomposable hypothesis."""
        module = self.write_module('e3_e3.json', {'dims': {'0': 2, '1': 2},
                                                     'action': {'a': [['1', '0'], ['0', '1']],
                                                                'b': [['3', '0'], ['0', '3']]}})
        status, payload = run('deform', 'certify', '--algebra', self.path('kronecker.json'),
                              '--module', module, '--levels', '3')
        self.assertEqual(status, EXIT_VERIFICATION_FAILED)
        self.assertEqual(payload['verdict']['status'], 'not-certified')
        self.assertIn('indecomposable', payload['verdict']['failures'])
        self.assertEqual(payload['hypotheses']['indecomposable']['verdict'], 'inconclusive')

    def test_levels_out_of_range(self):
        """Test that --levels 1 is rejected."""
        status, payload = run('deform', 'certify', '--algebra', self.path('klein4.json'),
                              '--module', self.path('band_ab_l3.json'), '--levels', '1')
        self.assertEqual(status, EXIT_ERROR)
        self.assertEqual(payload['error']['kind'], 'out-of-range')


if __name__ == '__main__':
    unittest.main(verbosity=2)
