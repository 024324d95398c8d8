"""Named example algebras and modules, emitted as JSON documents."""
import logging
import os
from typing import Dict, List

from engine.algebra_builder import build_algebra
from engine.bands import band_module, parse_band
from engine.euclidean import euclidean_algebra, euclidean_fixture_name, simple_regular_A
from models.algebra import BoundAlgebra
from models.band import BandModuleSpec
from models.euclidean import A_TILDE, EuclideanSpec
from models.field import FieldSpec
from models.quiver import Arrow, Quiver, Relation
from utils.errors import TubedefError, UnknownFixtureError
from utils.helpers import write_json

logger = logging.getLogger(__name__)

FIXTURE_NAMES = ('kronecker', 'klein4', 'dtilde4', 'etilde6', 'etilde7', 'etilde8', 'atilde(p,q)')
FIXTURE_LAMBDA = 3
KLEIN4_BAND = 'a b^-'


def klein4_algebra(field_spec: FieldSpec = None) -> BoundAlgebra:
    """k[a, b]/(a², b², ab - ba): one vertex, two loops."""
    if field_spec is None:
        field_spec = FieldSpec.rationals()
    quiver = Quiver(('0',), (Arrow('a', '0', '0'), Arrow('b', '0', '0')))
    one = field_spec.one
    relations = (
        Relation(((one, quiver.path(['a', 'a'])),)),
        Relation(((one, quiver.path(['b', 'b'])),)),
        Relation(((one, quiver.path(['a', 'b'])), (-one, quiver.path(['b', 'a'])))),
    )
    return build_algebra(quiver, relations, field_spec)


def klein4_band_module(alg: BoundAlgebra, lam=FIXTURE_LAMBDA, m: int = 1):
    return band_module(alg, BandModuleSpec(parse_band(KLEIN4_BAND, alg), alg.field.convert(lam), m))


def fixtures_emit(name: str) -> Dict[str, dict]:
    """File name -> document for the named fixture, algebra file first."""
    text = name.strip().lower().replace(' ', '')
    if text == 'klein4':
        alg = klein4_algebra()
        return {
            'klein4.json': alg.to_dict(),
            f'band_ab_l{FIXTURE_LAMBDA}.json': klein4_band_module(alg).to_dict(),
        }
    try:
        spec = EuclideanSpec.from_name(text)
    except TubedefError as exc:
        raise UnknownFixtureError(f'unknown fixture {name!r}; expected one of {", ".join(FIXTURE_NAMES)}') from exc
    alg = euclidean_algebra(spec)
    stem = 'kronecker' if text == 'kronecker' else euclidean_fixture_name(spec)
    files = {f'{stem}.json': alg.to_dict()}
    if spec.family == A_TILDE:
        files[f'{stem}_e{FIXTURE_LAMBDA}.json'] = simple_regular_A(alg, spec, FIXTURE_LAMBDA).to_dict()
    return files


def write_fixtures(name: str, directory: str) -> List[str]:
    """Write every document of the fixture into ``directory``; returns the paths."""
    os.makedirs(directory, exist_ok=True)
    paths = []
    for filename, doc in fixtures_emit(name).items():
        path = os.path.join(directory, filename)
        write_json(path, doc)
        paths.append(path)
    logger.info('✓ Wrote fixture %s: %s', name, ', '.join(os.path.basename(p) for p in paths))
    return paths
