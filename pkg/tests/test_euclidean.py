"""Tests for Euclidean quivers and their mouth modules."""
import unittest
import os
import sys

# Add parent directory to path for imports
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from engine.algebra_builder import cartan_euler
from engine.euclidean import (build_euclidean, euclidean_algebra, euclidean_fixture_name, lambda_arrow,
                              simple_regular_A, simple_regular_search)
from engine.representations import check_module, is_brick
from models.euclidean import EuclideanSpec
from models.field import FieldSpec
from utils.errors import OutOfRangeError, UnknownFixtureError, UsageError


class TestEuclideanNames(unittest.TestCase):
    """Test parsing of Euclidean quiver names."""

    def test_parse_names(self):
        """Test every accepted spelling."""
        self.assertEqual(EuclideanSpec.from_name('kronecker'), EuclideanSpec.a_tilde(1, 1))
        self.assertEqual(EuclideanSpec.from_name('Atilde(2, 3)'), EuclideanSpec.a_tilde(2, 3))
        self.assertEqual(EuclideanSpec.from_name('dtilde5'), EuclideanSpec.d_tilde(5))
        self.assertEqual(EuclideanSpec.from_name('etilde8').name, 'etilde8')
        self.assertEqual(euclidean_fixture_name(EuclideanSpec.a_tilde(2, 1)), 'atilde_2_1')
        self.assertEqual(euclidean_fixture_name(EuclideanSpec.d_tilde(4)), 'dtilde4')

    def test_rejected_names(self):
        """Test unknown names and parameters out of range."""
        with self.assertRaises(UnknownFixtureError):
            EuclideanSpec.from_name('btilde3')
        with self.assertRaises(OutOfRangeError):
            EuclideanSpec.from_name('dtilde3')
        with self.assertRaises(OutOfRangeError):
            EuclideanSpec.from_name('etilde9')
        with self.assertRaises(OutOfRangeError):
            EuclideanSpec.a_tilde(0, 2)


class TestEuclideanQuivers(unittest.TestCase):
    """Test the canonical orientations."""

    def test_a_tilde_shape(self):
        """Test Ã(2,1): two upper arrows and one lower arrow."""
        spec = EuclideanSpec.a_tilde(2, 1)
        quiver = build_euclidean(spec)
        self.assertEqual(quiver.vertices, ('0', '1', '2'))
        self.assertEqual([(a.id, a.source, a.target) for a in quiver.arrows],
                         [('a1', '2', '1'), ('a2', '1', '0'), ('b', '2', '0')])
        self.assertEqual(lambda_arrow(spec), 'b')
        self.assertEqual(lambda_arrow(EuclideanSpec.a_tilde(1, 2)), 'b1')

    def test_d_tilde_shape(self):
        """Test D̃4: five vertices, four arrows, centre at vertex 3."""
        quiver = build_euclidean(EuclideanSpec.d_tilde(4))
        self.assertEqual(len(quiver.vertices), 5)
        self.assertEqual(len(quiver.arrows), 4)
        for arrow in quiver.arrows:
            self.assertIn('3', (arrow.source, arrow.target))

    def test_e_tilde_shapes(self):
        """Test that Ẽ(n) has n + 1 vertices and n arrows."""
        for n in (6, 7, 8):
            quiver = build_euclidean(EuclideanSpec.e_tilde(n))
            self.assertEqual(len(quiver.vertices), n + 1)
            self.assertEqual(len(quiver.arrows), n)

    def test_null_root_of_a_tilde(self):
        """Test that δ is all ones on Ã(2,3)."""
        alg = euclidean_algebra(EuclideanSpec.a_tilde(2, 3))
        self.assertEqual(cartan_euler(alg)['null_root'], [1] * 5)


class TestMouthModules(unittest.TestCase):
    """Test E^(λ) on Ã(p,q) and the seeded search elsewhere."""

    def test_a_tilde_module(self):
        """Test that E^(λ) over Ã(1,2) is a brick with λ on b1."""
        spec = EuclideanSpec.a_tilde(1, 2)
        alg = euclidean_algebra(spec)
        e = simple_regular_A(alg, spec, 5)
        self.assertEqual(e.dim_vector, [1, 1, 1])
        self.assertEqual(e.action['b1'].to_strings(), [['5']])
        self.assertEqual(e.action['b2'].to_strings(), [['1']])
        self.assertTrue(check_module(e)['valid'])
        self.assertTrue(is_brick(e))

    def test_a_tilde_errors(self):
        """Test λ = 0 and non-Ã families."""
        spec = EuclideanSpec.from_name('kronecker')
        alg = euclidean_algebra(spec)
        with self.assertRaises(OutOfRangeError):
            simple_regular_A(alg, spec, 0)
        d4 = EuclideanSpec.d_tilde(4)
        with self.assertRaises(UsageError):
            simple_regular_A(euclidean_algebra(d4), d4, 1)
        with self.assertRaises(UsageError):
            simple_regular_search(alg, spec)

    def test_over_finite_field(self):
        """Test E^(λ) with λ reduced modulo 5."""
        spec = EuclideanSpec.from_name('kronecker')
        alg = euclidean_algebra(spec, FieldSpec.prime(5))
        e = simple_regular_A(alg, spec, 7)
        self.assertEqual(e.action['b'].to_strings(), [['2']])

    def test_d_tilde_search(self):
        """Test the seeded search for a mouth module of dimension δ on D̃4."""
        spec = EuclideanSpec.d_tilde(4)
        alg = euclidean_algebra(spec)
        result = simple_regular_search(alg, spec, seed=0)
        self.assertEqual(result['null_root'], [1, 1, 2, 1, 1])
        self.assertEqual(result['module'].dim_vector, [1, 1, 2, 1, 1])
        self.assertTrue(result['certificates']['brick'])
        self.assertEqual(result['certificates']['ext1_dim'], 1)
        self.assertEqual(result['certificates']['tau_periodic']['verdict'], 'yes')
        self.assertEqual(result['statistics']['attempts'], result['attempt'] + 1)

    def test_e_tilde_six_search(self):
        """Test a mouth module of dimension δ = (3, 2, 1, 2, 1, 2, 1) on Ẽ6."""
        spec = EuclideanSpec.e_tilde(6)
        alg = euclidean_algebra(spec)
        result = simple_regular_search(alg, spec, seed=0)
        self.assertEqual(result['null_root'], [3, 2, 1, 2, 1, 2, 1])
        self.assertEqual(result['module'].dim_vector, [3, 2, 1, 2, 1, 2, 1])
        self.assertEqual(result['certificates']['ext1_dim'], 1)
        self.assertEqual(result['certificates']['tau_periodic']['verdict'], 'yes')
        self.assertEqual(result['certificates']['end']['dim_end'], 1)

    def test_search_is_reproducible(self):
        """Test that the same seed finds the same module."""
        spec = EuclideanSpec.d_tilde(4)
        alg = euclidean_algebra(spec)
        first = simple_regular_search(alg, spec, seed=7)
        second = simple_regular_search(alg, spec, seed=7)
        self.assertEqual(first['attempt'], second['attempt'])
        self.assertTrue(first['module'].same_data(second['module']))


if __name__ == '__main__':
    unittest.main(verbosity=2)
