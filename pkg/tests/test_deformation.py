"""Tests for tube towers and deformation certificates."""
import json
import unittest
import os
import sys

# Add parent directory to path for imports
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from engine.deformation import build_tower, certify, lift_certificate, recheck, resolve_mode, tangent_dimension
from engine.euclidean import euclidean_algebra, simple_regular_A
from engine.fixtures import klein4_algebra, klein4_band_module
from engine.homological import indecomposable_projective
from engine.representations import direct_sum, is_isomorphic
from models.certificate import BAND_MODE, EXT_PUSHOUT_MODE
from models.euclidean import EuclideanSpec
from utils.errors import OutOfRangeError, UsageError
from utils.helpers import dump_json


class TestKleinFourCertificate(unittest.TestCase):
    """Test the band tower over V(ab⁻, 3, 1)."""

    def setUp(self):
        """Set up test fixtures."""
        self.alg = klein4_algebra()
        self.v = klein4_band_module(self.alg)

    def test_tangent_dimension(self):
        """Test dim Ext¹(V, V) = 1 for λ = 1, 2, 3."""
        for lam in (1, 2, 3):
            self.assertEqual(tangent_dimension(klein4_band_module(self.alg, lam=lam)), 1, lam)

    def test_mode_defaults_to_band(self):
        """Test that a band module of size 1 selects band towers."""
        self.assertEqual(resolve_mode(self.v), BAND_MODE)
        with self.assertRaises(UsageError):
            resolve_mode(self.v, 'sideways')

    def test_certified_to_level_four(self):
        """Test rank profiles 2(ℓ - s) at every level."""
        certificate = certify(self.v, levels=4)
        self.assertEqual(certificate.status, 'certified')
        self.assertEqual(certificate.certified_to_level, 4)
        self.assertEqual(certificate.failures, [])
        self.assertEqual([lift.level for lift in certificate.lifts], [2, 3, 4])
        for lift in certificate.lifts:
            self.assertEqual(lift.rank_profile, [2 * (lift.level - s) for s in range(lift.level + 1)])
            self.assertTrue(lift.passed)
        self.assertIn('finite level 4', certificate.conclusion)

    def test_certified_to_level_five(self):
        """Test V(ab⁻, 3, 1) up to level 5 with rank profile 2(5 - s)."""
        certificate = certify(self.v, levels=5)
        self.assertTrue(certificate.certified)
        self.assertEqual(certificate.lifts[-1].rank_profile, [10, 8, 6, 4, 2, 0])
        self.assertEqual(certificate.tower.module(5).dim_vector, [10])

    def test_prefix_property(self):
        """Test that a level-4 certificate extends the level-3 one."""
        short = certify(self.v, levels=3)
        long = certify(self.v, levels=4)
        for level in (2, 3):
            self.assertTrue(short.tower.module(level).same_data(long.tower.module(level)))
            self.assertEqual(short.lifts[level - 2].rank_profile, long.lifts[level - 2].rank_profile)

    def test_band_and_pushout_towers_agree(self):
        """Test that both constructions give isomorphic V[ℓ] for ℓ <= 4."""
        band = build_tower(self.v, 4, mode=BAND_MODE)
        pushout = build_tower(self.v, 4, mode=EXT_PUSHOUT_MODE)
        for level in (2, 3, 4):
            self.assertEqual(pushout.module(level).dim_vector, [2 * level])
            self.assertEqual(is_isomorphic(band.module(level), pushout.module(level)).verdict, 'yes', level)

    def test_level_bounds(self):
        """Test that levels below 2 are rejected."""
        with self.assertRaises(OutOfRangeError):
            certify(self.v, levels=1)
        tower = build_tower(self.v, 2)
        with self.assertRaises(OutOfRangeError):
            lift_certificate(tower, 3)

    def test_recheck_agrees(self):
        """Test that a serialized certificate re-verifies from its matrices."""
        report = json.loads(dump_json(certify(self.v, levels=3).to_dict({'seed': 0})))
        result = recheck(report)
        self.assertTrue(result['agrees'])
        self.assertEqual(result['recomputed_status'], 'certified')
        self.assertEqual([r['level'] for r in result['lifts']], [2, 3])

    def test_recheck_detects_tampering(self):
        """Test that a corrupted tower no longer re-verifies."""
        report = json.loads(dump_json(certify(self.v, levels=3).to_dict({'seed': 0})))
        proj = report['tower']['levels'][1]['proj']['0']
        proj[0] = ['0'] * len(proj[0])
        result = recheck(report)
        self.assertFalse(result['agrees'])
        self.assertEqual(result['recomputed_status'], 'not-certified')

    def test_recheck_ignores_stored_status(self):
        """Test that a certified report relabelled not-certified is caught."""
        report = json.loads(dump_json(certify(self.v, levels=3).to_dict({'seed': 0})))
        report['verdict']['status'] = 'not-certified'
        result = recheck(report)
        self.assertEqual(result['recomputed_status'], 'certified')
        self.assertFalse(result['agrees'])
        self.assertTrue(all(result['checks'].values()))

    def test_recheck_recomputes_hypotheses(self):
        """Test that a stored hypothesis verdict differing from the recomputed one fails."""
        report = json.loads(dump_json(certify(self.v, levels=3).to_dict({'seed': 0})))
        report['hypotheses']['indecomposable']['verdict'] = 'inconclusive'
        result = recheck(report)
        self.assertFalse(result['checks']['indecomposable'])
        self.assertFalse(result['agrees'])
        self.assertEqual(result['failures'], [])


class TestKroneckerCertificate(unittest.TestCase):
    """Test pushout towers over the Kronecker algebra."""

    def setUp(self):
        """Set up test fixtures."""
        self.spec = EuclideanSpec.from_name('kronecker')
        self.alg = euclidean_algebra(self.spec)
        self.e3 = simple_regular_A(self.alg, self.spec, 3)

    def test_tower_dimensions(self):
        """Test V[ℓ] of dimension vector (ℓ, ℓ)."""
        tower = build_tower(self.e3, 3)
        self.assertEqual(tower.mode, EXT_PUSHOUT_MODE)
        self.assertEqual([tower.module(level).dim_vector for level in (1, 2, 3)], [[1, 1], [2, 2], [3, 3]])

    def test_certified_to_level_five(self):
        """Test the certificate for E^(3) up to level 5."""
        certificate = certify(self.e3, levels=5)
        self.assertTrue(certificate.certified)
        self.assertEqual(certificate.lifts[-1].rank_profile, [10, 8, 6, 4, 2, 0])

    def test_projective_is_rigid(self):
        """Test that P(1) has no tangent space and no tower."""
        certificate = certify(indecomposable_projective(self.alg, '1'), levels=3)
        self.assertEqual(certificate.status, 'rigid')
        self.assertIsNone(certificate.tower)
        self.assertIn('rigid projective', certificate.conclusion)
        self.assertEqual(certificate.to_dict()['verdict']['certified_to_level'], 0)

    def test_decomposable_fails(self):
        """Test that E ⊕ E fails the indecomposability hypothesis."""
        certificate = certify(direct_sum(self.e3, self.e3), levels=3)
        self.assertEqual(certificate.status, 'not-certified')
        self.assertIn('indecomposable', certificate.failures)
        self.assertIn('tangent', certificate.failures)
        self.assertIsNone(certificate.tower)


if __name__ == '__main__':
    unittest.main(verbosity=2)
