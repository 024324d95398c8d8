"""Tests for the Auslander-Reiten translate."""
import unittest
import os
import sys

# Add parent directory to path for imports
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from engine.ar_translate import (coxeter_check, coxeter_matrix, dual_representation, homogeneous_tube_membership,
                                 tau, transpose)
from engine.euclidean import euclidean_algebra, simple_regular_A
from engine.fixtures import klein4_algebra, klein4_band_module
from engine.homological import indecomposable_projective, syzygy
from engine.representations import is_isomorphic, make_representation
from models.euclidean import EuclideanSpec
from utils.errors import UnsupportedError


class TestKroneckerTranslate(unittest.TestCase):
    """Test τ on the Kronecker quiver 1 ⇉ 0."""

    def setUp(self):
        """Set up test fixtures."""
        self.spec = EuclideanSpec.from_name('kronecker')
        self.alg = euclidean_algebra(self.spec)
        self.s1 = make_representation(self.alg, {'0': 0, '1': 1}, {})

    def test_coxeter_matrix(self):
        """Test Φ = -C·C^{-T} for the Kronecker Cartan matrix."""
        self.assertEqual(coxeter_matrix(self.alg).to_ints(), [[-1, 2], [-2, 3]])

    def test_transpose_and_translate_of_simple(self):
        """Test Tr S(1) has dimension 5 and τS(1) has dimension vector (2, 3)."""
        self.assertEqual(transpose(self.s1).representation.total_dim, 5)
        self.assertEqual(tau(self.s1).dim_vector, [2, 3])

    def test_coxeter_check(self):
        """Test dimvec τV = Φ·dimvec V on non-projective modules."""
        report = coxeter_check(self.alg, self.s1)
        self.assertTrue(report['agrees'])
        self.assertEqual(report['predicted'], [2, 3])
        self.assertTrue(coxeter_check(self.alg, simple_regular_A(self.alg, self.spec, 3))['agrees'])

    def test_projective_input(self):
        """Test that τ of a projective vanishes and the Coxeter check refuses it."""
        p1 = indecomposable_projective(self.alg, '1')
        self.assertTrue(tau(p1).is_zero())
        self.assertEqual(homogeneous_tube_membership(p1)['verdict'], 'no')
        with self.assertRaises(UnsupportedError):
            coxeter_check(self.alg, p1)

    def test_mouth_module_is_tau_periodic(self):
        """Test τE^(3) ≅ E^(3)."""
        e3 = simple_regular_A(self.alg, self.spec, 3)
        result = homogeneous_tube_membership(e3)
        self.assertEqual(result['verdict'], 'yes')
        self.assertEqual(result['evidence']['tau_dims'], [1, 1])


class TestKleinFourTranslate(unittest.TestCase):
    """Test τ = Ω² on the symmetric Klein-four algebra."""

    def setUp(self):
        """Set up test fixtures."""
        self.alg = klein4_algebra()
        self.v = klein4_band_module(self.alg)

    def test_tau_is_second_syzygy(self):
        """Test τV ≅ Ω²V ≅ V."""
        translated = tau(self.v)
        self.assertEqual(is_isomorphic(translated, syzygy(self.v, 2)).verdict, 'yes')
        self.assertEqual(homogeneous_tube_membership(self.v)['verdict'], 'yes')

    def test_tau_is_second_syzygy_across_parameters(self):
        """Test τV ≅ Ω²V for V(ab⁻, λ, m) with λ = 1, 2, 3 and m = 1, 2."""
        for lam in (1, 2, 3):
            for m in (1, 2):
                v = klein4_band_module(self.alg, lam=lam, m=m)
                translated = tau(v)
                self.assertEqual(translated.dim_vector, [2 * m], (lam, m))
                self.assertEqual(is_isomorphic(translated, syzygy(v, 2)).verdict, 'yes', (lam, m))

    def test_double_dual(self):
        """Test that D D V has the data of V."""
        self.assertTrue(dual_representation(dual_representation(self.v)).same_data(self.v))

    def test_coxeter_needs_path_algebra(self):
        """Test that the Coxeter check refuses algebras with relations."""
        with self.assertRaises(UnsupportedError):
            coxeter_check(self.alg, self.v)


if __name__ == '__main__':
    unittest.main(verbosity=2)
