"""Tube towers, free-lift certificates and the deformation-ring verdict.

For a module V at the mouth of a homogeneous tube the tower
V = V[1] ⊂ V[2] ⊂ ... carries t = incl ∘ proj, and V[ℓ] is free over
k[t]/(t^ℓ) exactly when rank(t^s) = d(ℓ - s) with d = dim V. Together
with dim Ext¹(V, V) = 1 this certifies R(Λ, V) ≅ k[[t]] up to level L.
"""
import logging
from typing import List, Optional

import numpy as np

from config import Config
from engine import linalg
from engine.ar_translate import homogeneous_tube_membership
from engine.bands import jordan_tower_ses
from engine.finite_algebra import division_evidence
from engine.homological import ext_dim, ext_group, realize_extension, stable_end_table
from engine.representations import (compose, hom_basis, hom_size, is_indecomposable, is_invertible, is_isomorphic,
                                     is_morphism, is_surjective, kernel_of, linear_combination,
                                     morphisms_to_columns, quotient_data, verify_short_exact, zero_morphism)
from models.band import BandModuleSpec
from models.certificate import (BAND_MODE, EXT_PUSHOUT_MODE, MODES, DeformationCertificate, LiftCertificate,
                                TowerLevel, TubeTower)
from models.field import Matrix
from models.representation import Morphism, Representation
from utils.errors import (CertificateFailure, OutOfRangeError, SurjectionSearchError, TubeHypothesisError,
                          UsageError)
from utils.helpers import algebra_from_doc, module_from_doc, morphism_from_doc

logger = logging.getLogger(__name__)


def tangent_dimension(v: Representation) -> int:
    """dim Ext¹(v, v), the dimension of the tangent space of the deformation functor."""
    return ext_dim(v, v, 1)


# ---------------------------------------------------------------------------
# towers
# ---------------------------------------------------------------------------

def _band_spec(v: Representation) -> Optional[BandModuleSpec]:
    spec = v.band
    if spec is None or spec.m != 1:
        return None
    return spec


def resolve_mode(v: Representation, mode: str = None) -> str:
    """Band towers when v records a band of size 1, pushout towers otherwise."""
    if mode is None:
        return BAND_MODE if _band_spec(v) is not None else EXT_PUSHOUT_MODE
    if mode not in MODES:
        raise UsageError(f'unknown tower mode {mode!r}; use one of {", ".join(MODES)}')
    if mode == BAND_MODE and _band_spec(v) is None:
        raise UsageError('band mode needs a module carrying a band V(b, λ, 1)')
    return mode


def _truncation(source: Representation, target: Representation, level: int) -> Morphism:
    """V(b,λ,ℓ) -> V(b,λ,ℓ-1) dropping the last Jordan coordinate of every copy."""
    field_spec = source.field
    blocks = {}
    for u in source.algebra.vertices:
        rows = [[field_spec.zero] * source.dims[u] for _ in range(target.dims[u])]
        for copy in range(source.dims[u] // level):
            for i in range(level - 1):
                rows[copy * (level - 1) + i][copy * level + i] = field_spec.one
        blocks[u] = Matrix(rows, (target.dims[u], source.dims[u]), field_spec)
    return Morphism(source, target, blocks)


def _acceptable(pi: Morphism, incl_prev: Morphism, mesh: Morphism, base: Representation, seed: int) -> bool:
    if not is_morphism(pi) or not is_surjective(pi):
        return False
    if compose(pi, incl_prev).blocks != mesh.blocks:
        return False
    kernel, _ = kernel_of(pi)
    return is_isomorphic(kernel, base, seed=seed).verdict == 'yes'


def _find_surjection(module: Representation, previous: Representation, incl: Morphism, mesh: Morphism,
                     base: Representation, level: int, seed: int, samples: int = None) -> Morphism:
    """π: V[ℓ] -> V[ℓ-1], surjective with kernel ≅ V[1] and π ∘ incl = mesh.

    The solutions of π ∘ incl = mesh form an affine subspace of Hom(V[ℓ], V[ℓ-1]);
    a particular solution is tried first, then seeded random points.
    """
    if samples is None:
        samples = Config.SURJECTION_SAMPLES
    field_spec = module.field
    basis = hom_basis(module, previous)
    size = hom_size(previous, previous)
    restricted = morphisms_to_columns([compose(h, incl) for h in basis], size, field_spec)
    rhs = morphisms_to_columns([mesh], size, field_spec)
    particular = linalg.solve(restricted, rhs) if basis else None
    if particular is None:
        raise SurjectionSearchError(f'no map V[{level}] -> V[{level - 1}] satisfies the mesh relation')
    directions = linalg.kernel_basis(restricted)
    rng = np.random.default_rng([seed, level])
    base_coeffs = particular.column(0)
    for attempt in range(samples):
        coeffs = list(base_coeffs)
        if attempt and directions.cols:
            shift = linalg.combine_columns(directions, linalg.random_vector(directions.cols, field_spec, rng))
            coeffs = [c + s for c, s in zip(coeffs, shift)]
        pi = linear_combination(basis, coeffs)
        if _acceptable(pi, incl, mesh, base, seed):
            logger.debug('surjection V[%d] -> V[%d] after %d samples', level, level - 1, attempt + 1)
            return pi
        if not directions.cols:
            break
    logger.warning('no surjection V[%d] -> V[%d] among %d samples', level, level - 1, samples)
    raise SurjectionSearchError(f'no surjection V[{level}] -> V[{level - 1}] with kernel ≅ V[1] '
                                f'after {samples} samples')


def build_tower(v: Representation, levels: int, mode: str = None, seed: int = 0) -> TubeTower:
    """V[1] = v, ..., V[L] with inclusions, quotients onto V[1] and surjections onto the previous level."""
    if levels < 2:
        raise OutOfRangeError(f'levels must be at least 2, got {levels}')
    mode = resolve_mode(v, mode)
    alg = v.algebra
    spec = _band_spec(v)
    built: List[TowerLevel] = []
    previous = v
    mesh = zero_morphism(v, v)
    for level in range(2, levels + 1):
        if mode == BAND_MODE:
            ses = jordan_tower_ses(alg, spec.with_size(level), seed=seed)
            module = ses['f'].source
            incl = Morphism(previous, module, ses['g'].blocks)
            quotient = Morphism(module, v, ses['f'].blocks)
            pi = _truncation(module, previous, level)
            if not _acceptable(pi, incl, mesh, v, seed):
                logger.info('truncation rejected at level %d; searching Hom', level)
                pi = _find_surjection(module, previous, incl, mesh, v, level, seed)
        else:
            group = ext_group(v, previous, 1)
            if group['dim'] != 1:
                raise TubeHypothesisError(f'dim Ext¹(V[1], V[{level - 1}]) = {group["dim"]} at level {level}')
            module, incl, quotient = realize_extension(group['classes'][0])
            pi = _find_surjection(module, previous, incl, mesh, v, level, seed)
        checks = verify_short_exact(incl, quotient)
        if not checks['exact'] or module.total_dim != level * v.total_dim:
            raise CertificateFailure(f'level {level} sequence is not exact: {checks}')
        built.append(TowerLevel(level, module, incl, pi, quotient))
        mesh = compose(incl, pi)
        previous = module
    logger.info('✓ Built %s tower to level %d', mode, levels)
    return TubeTower(v, tuple(built), mode)


# ---------------------------------------------------------------------------
# certificates
# ---------------------------------------------------------------------------

def _vertex_rank(f: Morphism, power: int) -> int:
    return sum(linalg.rank_of_power(m, power) for m in f.blocks.values())


def lift_certificate(tower: TubeTower, level: int) -> LiftCertificate:
    """Check that N = incl ∘ proj makes V[ℓ] free over k[t]/(t^ℓ) with V[ℓ]/N ≅ V[1]."""
    if not 2 <= level <= tower.top:
        raise OutOfRangeError(f'level must lie in 2..{tower.top}, got {level}')
    step = tower.level(level)
    base = tower.base
    d = base.total_dim
    nilpotent = compose(step.incl, step.proj)
    profile = [_vertex_rank(nilpotent, s) for s in range(level + 1)]
    expected = [d * (level - s) for s in range(level + 1)]

    mesh = compose(tower.level(level - 1).incl, tower.level(level - 1).proj) if level > 2 else None
    cokernel, _, sections = quotient_data(nilpotent)
    witness = Morphism(cokernel, base, {u: step.quotient.blocks[u] @ sections[u] for u in base.algebra.vertices})
    checks = {
        'sequence_exact': verify_short_exact(step.incl, step.quotient)['exact'],
        'proj_surjective': is_morphism(step.proj) and is_surjective(step.proj),
        'mesh_relation': (compose(step.proj, step.incl).blocks == mesh.blocks) if mesh is not None
        else all(m.is_zero() for m in compose(step.proj, step.incl).blocks.values()),
        'nilpotent_is_morphism': is_morphism(nilpotent),
        'nilpotent_vanishes': profile[-1] == 0,
        'rank_profile': profile == expected,
        'cokernel_is_base': is_morphism(witness) and is_invertible(witness),
    }
    failed = [name for name, ok in checks.items() if not ok]
    if failed:
        raise CertificateFailure(f'level {level} fails {", ".join(failed)}; rank profile {profile}, '
                                 f'expected {expected}')
    return LiftCertificate(level, nilpotent, profile, expected, witness, checks)


def _hypotheses(v: Representation, seed: int) -> dict:
    indecomposable = is_indecomposable(v, seed=seed)
    stable_table = stable_end_table(v)
    stable = {'dim': stable_table.dim, 'division_evidence': division_evidence(stable_table, seed=seed)}
    periodic = homogeneous_tube_membership(v, seed=seed)
    return {'indecomposable': indecomposable, 'stable_end': stable, 'tau_periodic': periodic}


def _failures(hypotheses: dict, tangent: int) -> List[str]:
    failures = []
    if hypotheses['indecomposable']['verdict'] != 'yes':
        failures.append('indecomposable')
    if hypotheses['stable_end']['division_evidence']['verdict'] != 'yes':
        failures.append('stable-end')
    if hypotheses['tau_periodic']['verdict'] != 'yes':
        failures.append('tau-periodic')
    if tangent != 1:
        failures.append('tangent')
    return failures


def conclusion_text(levels: int) -> str:
    return (f'dim Ext¹ = 1 and free lifts exist over k[t]/(t^ℓ) for all ℓ ≤ {levels}; R(Λ,V) is therefore a '
            f'quotient of k[[t]], and every surjection k[[t]] ↠ R(Λ,V) compatible with the level-ℓ lifts is an '
            f'isomorphism modulo t^{levels}; the identification R(Λ,V) ≅ k[[t]] itself is verified here only '
            f'at finite level {levels}.')


def certify(v: Representation, levels: int = None, mode: str = None, seed: int = 0) -> DeformationCertificate:
    """Check the tube-mouth hypotheses, build the tower and certify every lift up to ``levels``."""
    if levels is None:
        levels = Config.DEFAULT_LEVELS
    if levels < 2:
        raise OutOfRangeError(f'levels must be at least 2, got {levels}')
    hypotheses = _hypotheses(v, seed)
    tangent = tangent_dimension(v)
    tangent_doc = {'ext1_dim': tangent}
    failures = _failures(hypotheses, tangent)

    if tangent == 0:
        projective = hypotheses['tau_periodic']['evidence']['tau_dims'] == [0] * len(v.dim_vector)
        kind = 'rigid projective' if projective else 'rigid'
        text = f'dim Ext¹ = 0: {kind}; R(Λ,V) ≅ k is universal and no lifts are needed.'
        logger.info('module is rigid; no tower built')
        return DeformationCertificate(v, levels, seed, hypotheses, tangent_doc, 'rigid', text, failures)
    if failures:
        text = 'not certified: failing hypotheses ' + ', '.join(failures)
        return DeformationCertificate(v, levels, seed, hypotheses, tangent_doc, 'not-certified', text, failures)

    tower = build_tower(v, levels, mode=mode, seed=seed)
    lifts = []
    try:
        for level in range(2, levels + 1):
            lifts.append(lift_certificate(tower, level))
    except CertificateFailure as exc:
        logger.warning('lift certificate failed: %s', exc.detail)
        return DeformationCertificate(v, levels, seed, hypotheses, tangent_doc, 'not-certified',
                                      f'not certified: {exc.detail}', [f'lift: {exc.detail}'], tower, lifts)
    logger.info('✓ Certified to level %d', levels)
    return DeformationCertificate(v, levels, seed, hypotheses, tangent_doc, 'certified',
                                  conclusion_text(levels), [], tower, lifts)


def recheck(report: dict) -> dict:
    """Re-verify a serialized certificate from its stored matrices.

    The tower is read back, not rebuilt. The hypotheses and the tangent
    dimension are recomputed from the embedded algebra and module, and the
    recomputed status never consults the stored one.
    """
    alg = algebra_from_doc(report['algebra'])
    v = module_from_doc(report['module'], alg)
    stored = report['verdict']['status']
    seed = report.get('provenance', {}).get('seed', 0)
    hypotheses = _hypotheses(v, seed)
    tangent = tangent_dimension(v)
    failures = _failures(hypotheses, tangent)
    stored_hypotheses = report['hypotheses']
    checks = {
        'tangent': tangent == report['tangent']['ext1_dim'],
        'indecomposable': (hypotheses['indecomposable']['verdict']
                           == stored_hypotheses['indecomposable']['verdict']),
        'stable_end': (hypotheses['stable_end']['division_evidence']['verdict']
                       == stored_hypotheses['stable_end']['division_evidence']['verdict']),
        'tau_periodic': (hypotheses['tau_periodic']['verdict']
                         == stored_hypotheses['tau_periodic']['verdict']),
    }

    levels_doc = (report.get('tower') or {}).get('levels', [])
    lift_results = []
    if levels_doc:
        built, previous = [], v
        for doc in levels_doc:
            module = module_from_doc(doc['module'], alg)
            built.append(TowerLevel(doc['level'], module,
                                    morphism_from_doc(doc['incl'], previous, module),
                                    morphism_from_doc(doc['proj'], module, previous),
                                    morphism_from_doc(doc['quotient'], module, v)))
            previous = module
        tower = TubeTower(v, tuple(built), report['tower']['mode'])
        for level in range(2, tower.top + 1):
            try:
                lift = lift_certificate(tower, level)
                lift_results.append({'level': level, 'passed': True, 'rank_profile': lift.rank_profile})
            except CertificateFailure as exc:
                lift_results.append({'level': level, 'passed': False, 'detail': exc.detail})
    lifts_pass = bool(lift_results) and all(r['passed'] for r in lift_results)

    if tangent == 0:
        recomputed = 'rigid'
    elif not failures and lifts_pass:
        recomputed = 'certified'
    else:
        recomputed = 'not-certified'
    return {
        'stored_status': stored,
        'recomputed_status': recomputed,
        'agrees': stored == recomputed and all(checks.values()),
        'checks': checks,
        'failures': failures,
        'lifts': lift_results,
    }
