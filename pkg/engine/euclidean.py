"""Canonical Euclidean quivers and mouth modules of their homogeneous tubes."""
import logging
from typing import List, Tuple

import numpy as np

from config import Config
from engine import linalg
from engine.algebra_builder import build_algebra, cartan_euler
from engine.ar_translate import homogeneous_tube_membership
from engine.deformation import tangent_dimension
from engine.representations import check_module, end_structure, is_brick
from models.algebra import BoundAlgebra
from models.euclidean import A_TILDE, D_TILDE, EuclideanSpec
from models.field import FieldSpec, Matrix
from models.quiver import Arrow, Quiver
from models.representation import Representation
from utils.errors import NotFoundError, OutOfRangeError, UsageError

logger = logging.getLogger(__name__)


def _chain(vertices: List[int], prefix: str) -> List[Tuple[str, int, int]]:
    """Arrows along consecutive vertices; a single arrow is named by the prefix alone."""
    steps = list(zip(vertices, vertices[1:]))
    if len(steps) == 1:
        return [(prefix, steps[0][0], steps[0][1])]
    return [(f'{prefix}{k + 1}', s, t) for k, (s, t) in enumerate(steps)]


def _arm(vertices: List[int]) -> List[Tuple[str, int, int]]:
    return [(f'a{s}_{t}', s, t) for s, t in zip(vertices, vertices[1:])]


def build_euclidean(spec: EuclideanSpec) -> Quiver:
    """The canonical orientation of Ã(p,q), D̃(m) or Ẽ(6|7|8)."""
    if spec.family == A_TILDE:
        p, q = spec.p, spec.q
        top = p + q - 1
        vertices = [str(v) for v in range(p + q)]
        upper = [top] + list(range(p - 1, -1, -1))
        lower = list(range(top, p - 1, -1)) + [0]
        arrows = _chain(upper, 'a') + _chain(lower, 'b')
    elif spec.family == D_TILDE:
        m = spec.m
        vertices = [str(v) for v in range(1, m + 2)]
        arrows = _arm([3, 1]) + _arm([3, 2])
        arrows += [(f'a{i + 1}_{i}', i + 1, i) for i in range(3, m - 1)]
        arrows += _arm([m, m - 1]) + _arm([m + 1, m - 1])
    else:
        n = spec.m
        vertices = [str(v) for v in range(1, n + 2)]
        if n == 6:
            arms = [[5, 4, 1], [3, 2, 1], [7, 6, 1]]
        elif n == 7:
            arms = [[5, 1], [4, 3, 2, 1], [8, 7, 6, 1]]
        else:
            arms = [[5, 1], [4, 3, 2, 1], [9, 8, 7, 6, 1]]
        arrows = [a for arm in arms for a in _arm(arm)]
    return Quiver(tuple(vertices), tuple(Arrow(name, str(s), str(t)) for name, s, t in arrows))


def euclidean_algebra(spec: EuclideanSpec, field_spec: FieldSpec = None) -> BoundAlgebra:
    """The path algebra of ``build_euclidean(spec)``."""
    if field_spec is None:
        field_spec = FieldSpec.rationals()
    return build_algebra(build_euclidean(spec), (), field_spec)


def euclidean_fixture_name(spec: EuclideanSpec) -> str:
    """Stem of fixture and Graphviz names: ``atilde_p_q``, ``dtilde4``, ``etilde6``..."""
    if spec.family == A_TILDE:
        return f'atilde_{spec.p}_{spec.q}'
    return spec.name


def lambda_arrow(spec: EuclideanSpec) -> str:
    """The first arrow of the lower branch of Ã(p,q), which carries λ."""
    return 'b' if spec.q == 1 else 'b1'


def simple_regular_A(alg: BoundAlgebra, spec: EuclideanSpec, lam) -> Representation:
    """E^(λ) over Ã(p,q): k at every vertex, identities, λ on the first lower arrow."""
    if spec.family != A_TILDE:
        raise UsageError(f'{spec.name} is not of type Ã; use simple_regular_search')
    field_spec = alg.field
    lam = field_spec.convert(lam)
    if field_spec.is_zero(lam):
        raise OutOfRangeError('λ must be nonzero')
    special = lambda_arrow(spec)
    action = {a.id: Matrix([[lam if a.id == special else field_spec.one]], (1, 1), field_spec)
              for a in alg.quiver.arrows}
    return Representation(alg, {v: 1 for v in alg.vertices}, action)


def simple_regular_search(alg: BoundAlgebra, spec: EuclideanSpec, seed: int = 0, attempts: int = None) -> dict:
    """Seeded search for a brick E of dimension vector δ with τE ≅ E and dim Ext¹(E, E) = 1.

    Attempt i draws every arrow matrix from a generator seeded by (seed, i).
    """
    if spec.family == A_TILDE:
        raise UsageError('Ã(p,q) mouth modules are built directly by simple_regular_A')
    if attempts is None:
        attempts = Config.SEARCH_ATTEMPTS
    delta = cartan_euler(alg)['null_root']
    if delta is None:
        raise NotFoundError(f'{spec.name} has no one-dimensional radical of the Euler form')
    dims = dict(zip(alg.vertices, delta))
    stats = {'attempts': 0, 'not_brick': 0, 'not_periodic': 0, 'tangent_not_one': 0}
    field_spec = alg.field
    for attempt in range(attempts):
        stats['attempts'] += 1
        rng = np.random.default_rng([seed, attempt])
        action = {a.id: linalg.random_matrix(dims[a.target], dims[a.source], field_spec, rng=rng,
                                             bound=Config.SEARCH_ENTRY_BOUND)
                  for a in alg.quiver.arrows}
        candidate = Representation(alg, dims, action)
        if not check_module(candidate)['valid'] or not is_brick(candidate):
            stats['not_brick'] += 1
            continue
        periodic = homogeneous_tube_membership(candidate, seed=seed)
        if periodic['verdict'] != 'yes':
            stats['not_periodic'] += 1
            continue
        tangent = tangent_dimension(candidate)
        if tangent != 1:
            stats['tangent_not_one'] += 1
            continue
        logger.info('✓ Found mouth module for %s after %d attempts', spec.name, attempt + 1)
        return {
            'module': candidate,
            'attempt': attempt,
            'null_root': delta,
            'certificates': {
                'brick': True,
                'end': end_structure(candidate),
                'tau_periodic': periodic,
                'ext1_dim': tangent,
            },
            'statistics': stats,
        }
    logger.warning('no mouth module for %s in %d attempts', spec.name, attempts)
    raise NotFoundError(f'no certified mouth module for {spec.name} after {attempts} attempts: {stats}')
