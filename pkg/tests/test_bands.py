"""Tests for band words and band modules."""
import unittest
import os
import sys

# Add parent directory to path for imports
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from engine.bands import (band_module, brick_band_search, enumerate_bands, jordan_block, jordan_tower_ses,
                          parse_band)
from engine.euclidean import euclidean_algebra
from engine.fixtures import klein4_algebra
from engine.representations import is_morphism
from models.band import BandModuleSpec
from models.euclidean import EuclideanSpec
from utils.errors import BandSyntaxError, FormatError, InvalidBandError, OutOfRangeError


class TestBandWords(unittest.TestCase):
    """Test parsing and validation of band words."""

    def setUp(self):
        """Set up test fixtures."""
        self.alg = klein4_algebra()

    def test_canonical_form(self):
        """Test that rotations and inverses share one canonical word."""
        for text in ('a b^-', 'b^- a', 'b a^-', 'a^- b'):
            self.assertEqual(str(parse_band(text, self.alg)), 'a b^-')

    def test_syntax_errors(self):
        """Test the named band-syntax error kinds."""
        cases = {
            'a a^-': 'immediate-inverse',
            'a b': 'single-direction',
            'a b^- a b^-': 'proper-power',
            'a c^-': 'unknown-arrow',
        }
        for text, kind in cases.items():
            with self.assertRaises(BandSyntaxError) as ctx:
                parse_band(text, self.alg)
            self.assertEqual(ctx.exception.kind, kind, text)

    def test_zero_path_is_invalid(self):
        """Test that a walk through a² is rejected."""
        with self.assertRaises(InvalidBandError):
            parse_band('a a b^-', self.alg)

    def test_malformed_text(self):
        """Test that malformed tokens do not parse."""
        with self.assertRaises(FormatError):
            parse_band('a^^- b', self.alg)
        with self.assertRaises(FormatError):
            parse_band('   ', self.alg)

    def test_non_composable_letters(self):
        """Test letters that do not meet on the Kronecker quiver."""
        alg = euclidean_algebra(EuclideanSpec.from_name('kronecker'))
        with self.assertRaises(BandSyntaxError) as ctx:
            parse_band('a b', alg)
        self.assertEqual(ctx.exception.kind, 'non-composable')


class TestBandModules(unittest.TestCase):
    """Test V(b, λ, m) and the sequence V(m-1) -> V(m) -> V(1)."""

    def setUp(self):
        """Set up test fixtures."""
        self.alg = klein4_algebra()
        self.word = parse_band('a b^-', self.alg)

    def test_jordan_block(self):
        """Test J_3(2) with the subdiagonal convention."""
        block = jordan_block(3, 2, self.alg.field)
        self.assertEqual(block.to_ints(), [[2, 0, 0], [1, 2, 0], [0, 1, 2]])

    def test_module_matrices(self):
        """Test the matrices of V(ab⁻, 3, 2)."""
        rep = band_module(self.alg, BandModuleSpec(self.word, self.alg.field.convert(3), 2))
        self.assertEqual(rep.dim_vector, [4])
        self.assertEqual(rep.action['a'].to_strings(),
                         [['0', '0', '0', '0'], ['0', '0', '0', '0'], ['1', '0', '0', '0'], ['0', '1', '0', '0']])
        self.assertEqual(rep.action['b'].to_strings(),
                         [['0', '0', '0', '0'], ['0', '0', '0', '0'], ['1/3', '0', '0', '0'], ['1', '1/3', '0', '0']])

    def test_kronecker_band(self):
        """Test that ab⁻ over the Kronecker quiver puts λ^{-1} on b."""
        alg = euclidean_algebra(EuclideanSpec.from_name('kronecker'))
        rep = band_module(alg, BandModuleSpec(parse_band('a b^-', alg), alg.field.convert(3), 1))
        self.assertEqual(rep.action['a'].to_strings(), [['1']])
        self.assertEqual(rep.action['b'].to_strings(), [['1/3']])

    def test_zero_lambda_is_rejected(self):
        """Test that λ = 0 and m = 0 are out of range."""
        with self.assertRaises(OutOfRangeError):
            band_module(self.alg, BandModuleSpec(self.word, self.alg.field.zero, 1))
        with self.assertRaises(OutOfRangeError):
            band_module(self.alg, BandModuleSpec(self.word, self.alg.field.one, 0))

    def test_short_exact_sequences(self):
        """Test 0 -> V(m-1) -> V(m) -> V(1) -> 0 for m = 2, 3, 4."""
        for m in (2, 3, 4):
            spec = BandModuleSpec(self.word, self.alg.field.convert(3), m)
            result = jordan_tower_ses(self.alg, spec)
            self.assertTrue(result['verified'], m)
            self.assertTrue(is_morphism(result['f']))
            self.assertTrue(is_morphism(result['g']))
            self.assertEqual(result['dims'], [2 * (m - 1), 2 * m, 2])

    def test_sequence_needs_m_at_least_two(self):
        """Test that m = 1 has no sequence."""
        with self.assertRaises(OutOfRangeError):
            jordan_tower_ses(self.alg, BandModuleSpec(self.word, self.alg.field.one, 1))


class TestBandEnumeration(unittest.TestCase):
    """Test bounded enumeration and the brick search."""

    def setUp(self):
        """Set up test fixtures."""
        self.alg = klein4_algebra()

    def test_enumerate_short_bands(self):
        """Test that ab⁻ is the only band of length 2."""
        result = enumerate_bands(self.alg, max_length=2)
        self.assertEqual([str(w) for w in result['bands']], ['a b^-'])
        self.assertFalse(result['truncated'])
        self.assertEqual(result['verified_by'], 'verification')
        self.assertTrue(result['special_biserial'])

    def test_brick_search(self):
        """Test that V(ab⁻, λ, 1) is a stable brick but not a brick."""
        result = brick_band_search(self.alg, max_length=2, lambdas=[1, 2, 3])
        self.assertEqual(len(result['results']), 3)
        self.assertFalse(result['brick_found'])
        self.assertIsNone(result['witness'])
        self.assertTrue(all(r['stable_brick'] for r in result['results']))

    def test_parallel_search_matches(self):
        """Test that worker threads give the same records."""
        serial = brick_band_search(self.alg, max_length=2, lambdas=[2, 5])
        parallel = brick_band_search(self.alg, max_length=2, lambdas=[2, 5], jobs=2)
        self.assertEqual(serial['results'], parallel['results'])


if __name__ == '__main__':
    unittest.main(verbosity=2)
