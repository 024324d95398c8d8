"""Tests for the emitted fixture documents against the checked-in golden files."""
import unittest
import os
import shutil
import sys
import tempfile

# Add parent directory to path for imports
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from engine.fixtures import fixtures_emit, write_fixtures
from utils.errors import UnknownFixtureError
from utils.helpers import algebra_from_doc, dump_json, module_from_doc

GOLDEN_DIR = os.path.join(os.path.dirname(__file__), 'golden')


def golden(name):
    with open(os.path.join(GOLDEN_DIR, name), encoding='utf-8') as fh:
        return fh.read()


class TestGoldenFixtures(unittest.TestCase):
    """Test byte-identical output for the Kronecker and Klein-four fixtures."""

    def test_kronecker_documents(self):
        """Test kronecker.json and kronecker_e3.json."""
        docs = fixtures_emit('kronecker')
        self.assertEqual(list(docs), ['kronecker.json', 'kronecker_e3.json'])
        for name, doc in docs.items():
            self.assertEqual(dump_json(doc), golden(name), name)

    def test_klein4_documents(self):
        """Test klein4.json and band_ab_l3.json."""
        docs = fixtures_emit('klein4')
        self.assertEqual(list(docs), ['klein4.json', 'band_ab_l3.json'])
        for name, doc in docs.items():
            self.assertEqual(dump_json(doc), golden(name), name)

    def test_golden_files_load(self):
        """Test that the golden module files parse against their algebras."""
        alg = algebra_from_doc(fixtures_emit('klein4')['klein4.json'])
        v = module_from_doc(fixtures_emit('klein4')['band_ab_l3.json'], alg)
        self.assertEqual(v.dim_vector, [2])
        self.assertIsNotNone(v.band)


class TestWriteFixtures(unittest.TestCase):
    """Test writing fixtures to disk."""

    def setUp(self):
        """Set up test fixtures."""
        self.tmp = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.tmp, ignore_errors=True)

    def test_written_files_match(self):
        """Test that the written text equals the golden text."""
        paths = write_fixtures('kronecker', os.path.join(self.tmp, 'out'))
        self.assertEqual([os.path.basename(p) for p in paths], ['kronecker.json', 'kronecker_e3.json'])
        with open(paths[1], encoding='utf-8') as fh:
            self.assertEqual(fh.read(), golden('kronecker_e3.json'))

    def test_path_algebras_without_modules(self):
        """Test that D̃ and Ẽ fixtures carry only the algebra."""
        self.assertEqual(list(fixtures_emit('dtilde4')), ['dtilde4.json'])
        self.assertEqual(list(fixtures_emit('etilde7')), ['etilde7.json'])

    def test_unknown_name(self):
        """Test that unknown names raise."""
        with self.assertRaises(UnknownFixtureError):
            fixtures_emit('btilde2')


if __name__ == '__main__':
    unittest.main(verbosity=2)
