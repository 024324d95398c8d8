"""Band words, band modules V(b, λ, m) and bounded band enumeration."""
import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Dict, Iterable, List, Optional, Sequence

import numpy as np

from config import Config
from engine.algebra_builder import normal_form, validate_special_biserial
from engine.homological import stable_hom_dim
from engine.representations import (check_module, compose, is_brick, is_isomorphic, is_morphism,
                                     is_surjective, kernel_of, morphism_violations, verify_short_exact)
from models.algebra import BoundAlgebra
from models.band import INVERSE_SUFFIX, BandModuleSpec, BandWord, Letter
from models.field import FieldSpec, Matrix
from models.representation import Morphism, Representation
from utils.errors import (BandSyntaxError, ConstructionConventionError, FormatError, InvalidBandError,
                          OutOfRangeError, TubedefError)

logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# words
# ---------------------------------------------------------------------------

def _tokenize(text: str) -> List[Letter]:
    letters = []
    for token in text.split():
        if token.endswith(INVERSE_SUFFIX):
            name, inverse = token[:-len(INVERSE_SUFFIX)], True
        else:
            name, inverse = token, False
        if not name or '^' in name:
            raise FormatError(f'malformed band letter {token!r}')
        letters.append(Letter(name, inverse))
    if not letters:
        raise FormatError('empty band word')
    return letters


def _adjacency_problem(alg: BoundAlgebra, first: Letter, second: Letter) -> Optional[TubedefError]:
    """Local condition between consecutive letters, or None when they may follow each other."""
    quiver = alg.quiver
    if first.end(quiver) != second.start(quiver):
        return BandSyntaxError(f'{first} ends at {first.end(quiver)} but {second} starts at '
                               f'{second.start(quiver)}', kind='non-composable')
    if first.inverse != second.inverse:
        if first.arrow == second.arrow:
            return BandSyntaxError(f'{first} is immediately followed by its inverse', kind='immediate-inverse')
        return None
    if first.inverse:
        path = quiver.path([second.arrow, first.arrow])
    else:
        path = quiver.path([first.arrow, second.arrow])
    if not normal_form(alg, [(1, path)]):
        return InvalidBandError(f'{first} {second} runs through the zero path {path}')
    return None


def validate_band(alg: BoundAlgebra, word: BandWord):
    """Raise the first violated band condition."""
    for x in word.letters:
        if not alg.quiver.has_arrow(x.arrow):
            raise BandSyntaxError(f'unknown arrow {x.arrow!r}', kind='unknown-arrow')
    r = word.length
    for k in range(r):
        problem = _adjacency_problem(alg, word.letters[k], word.letters[(k + 1) % r])
        if problem is not None:
            raise problem
    directions = {x.inverse for x in word.letters}
    if len(directions) < 2:
        raise BandSyntaxError(f'{word} uses only {"inverse" if True in directions else "direct"} letters',
                              kind='single-direction')
    if word.is_proper_power():
        raise BandSyntaxError(f'{word} is a proper power of a shorter word', kind='proper-power')


def parse_band(text: str, alg: BoundAlgebra) -> BandWord:
    """Parse "a b^- ...", validate it and return its canonical rotation."""
    report = validate_special_biserial(alg)
    if not report['is_special_biserial']:
        logger.warning('algebra is not special biserial: %s', '; '.join(report['violations']))
    word = BandWord(tuple(_tokenize(text)))
    validate_band(alg, word)
    return word.canonical(alg.quiver)


# ---------------------------------------------------------------------------
# modules
# ---------------------------------------------------------------------------

def jordan_block(m: int, mu, field_spec: FieldSpec) -> Matrix:
    """J_m(μ): μ on the diagonal, 1 on the subdiagonal."""
    mu = field_spec.convert(mu)
    rows = [[field_spec.zero] * m for _ in range(m)]
    for i in range(m):
        rows[i][i] = mu
        if i + 1 < m:
            rows[i + 1][i] = field_spec.one
    return Matrix(rows, (m, m), field_spec)


def _positions(alg: BoundAlgebra, word: BandWord, m: int) -> Dict[int, tuple]:
    """Position k -> (vertex, first coordinate) with copies in position order."""
    quiver = alg.quiver
    used = {v: 0 for v in alg.vertices}
    placement = {}
    for k, x in enumerate(word.letters):
        v = x.start(quiver)
        placement[k] = (v, used[v])
        used[v] += m
    return placement


def band_module(alg: BoundAlgebra, spec: BandModuleSpec, verify: bool = True) -> Representation:
    """V(b, λ, m): one copy of k^m per position, identity maps along the word,
    J_m(λ) on a direct last letter and J_m(λ^{-1}) on an inverse one."""
    field_spec = alg.field
    lam = field_spec.convert(spec.lam)
    if field_spec.is_zero(lam):
        raise OutOfRangeError('λ must be nonzero')
    if spec.m < 1:
        raise OutOfRangeError(f'm must be positive, got {spec.m}')
    word, m = spec.band, spec.m
    r = word.length
    placement = _positions(alg, word, m)
    dims = {v: 0 for v in alg.vertices}
    for v, start in placement.values():
        dims[v] = max(dims[v], start + m)
    rows = {a.id: [[field_spec.zero] * dims[a.source] for _ in range(dims[a.target])] for a in alg.quiver.arrows}

    for k, x in enumerate(word.letters):
        last = k == r - 1
        if x.inverse:
            block = jordan_block(m, field_spec.inverse(lam), field_spec) if last else Matrix.identity(m, field_spec)
            (_, src), (_, dst) = placement[(k + 1) % r], placement[k]
        else:
            block = jordan_block(m, lam, field_spec) if last else Matrix.identity(m, field_spec)
            (_, src), (_, dst) = placement[k], placement[(k + 1) % r]
        target = rows[x.arrow]
        for i in range(m):
            for j in range(m):
                target[dst + i][src + j] += block[i, j]

    action = {a: Matrix(data, (len(data), dims[alg.quiver.arrow(a).source]), field_spec) for a, data in rows.items()}
    rep = Representation(alg, dims, action, band=BandModuleSpec(word, lam, m))
    if verify:
        report = check_module(rep)
        if not report['valid']:
            bad = ', '.join(str(v['relation']) for v in report['violations'])
            raise InvalidBandError(f'V({word}, {field_spec.to_str(lam)}, {m}) violates relations {bad}')
    return rep


def _row_blocks(alg: BoundAlgebra, spec: BandModuleSpec, source: Representation, target: Representation,
                coordinate: int) -> Morphism:
    """V(b,λ,m) -> V(b,λ,1) taking ``coordinate`` of every copy."""
    field_spec = alg.field
    m = spec.m
    blocks = {}
    for v in alg.vertices:
        rows = [[field_spec.zero] * source.dims[v] for _ in range(target.dims[v])]
        for copy in range(target.dims[v]):
            rows[copy][copy * m + coordinate] = field_spec.one
        blocks[v] = Matrix(rows, (target.dims[v], source.dims[v]), field_spec)
    return Morphism(source, target, blocks)


def jordan_tower_ses(alg: BoundAlgebra, spec: BandModuleSpec, seed: int = 0) -> dict:
    """0 -> V(b,λ,m-1) -g-> V(b,λ,m) -f-> V(b,λ,1) -> 0.

    f takes the first Jordan coordinate of every copy; if that is not a
    morphism the last coordinate is tried. g is the kernel inclusion
    composed with an isomorphism V(b,λ,m-1) ≅ ker f.
    """
    if spec.m < 2:
        raise OutOfRangeError(f'the sequence needs m >= 2, got {spec.m}')
    big = band_module(alg, spec)
    small = band_module(alg, spec.with_size(1))
    f = _row_blocks(alg, spec, big, small, 0)
    if not is_morphism(f):
        retry = _row_blocks(alg, spec, big, small, spec.m - 1)
        if not is_morphism(retry):
            bad = morphism_violations(f)
            raise ConstructionConventionError(f'row-vector map fails to commute with arrow {bad[0]}')
        logger.info('first-coordinate map failed; using the last Jordan coordinate')
        f = retry
    if not is_surjective(f):
        raise ConstructionConventionError('row-vector map is not surjective')
    previous = band_module(alg, spec.with_size(spec.m - 1))
    kernel, inclusion = kernel_of(f)
    iso = is_isomorphic(previous, kernel, seed=seed)
    if iso.verdict != 'yes':
        raise ConstructionConventionError(f'kernel of f is not isomorphic to V(b,λ,{spec.m - 1}): {iso.reason}')
    g = compose(inclusion, iso.witness)
    checks = verify_short_exact(g, f)
    return {'f': f, 'g': g, 'verified': checks['exact'], 'checks': checks,
            'dims': [previous.total_dim, big.total_dim, small.total_dim]}


# ---------------------------------------------------------------------------
# enumeration and brick search
# ---------------------------------------------------------------------------

def _letters(alg: BoundAlgebra) -> List[Letter]:
    out = []
    for a in alg.quiver.arrows:
        out.append(Letter(a.id, False))
        out.append(Letter(a.id, True))
    return out


def lambda_samples(field_spec: FieldSpec, seed: int = 0, extra: int = None) -> List:
    """The fixed list {1, 2, 3, 5, 7} of units plus seeded random units."""
    if extra is None:
        extra = Config.RANDOM_LAMBDAS
    values = []
    for x in Config.LAMBDA_SAMPLES:
        c = field_spec.convert(x)
        if field_spec.is_unit(c) and c not in values:
            values.append(c)
    rng = np.random.default_rng(seed)
    attempts = 0
    while extra > 0 and attempts < 64:
        attempts += 1
        c = field_spec.random_element(rng, Config.RANDOM_BOUND)
        if field_spec.is_unit(c) and c not in values:
            values.append(c)
            extra -= 1
    return values


def _verified(alg: BoundAlgebra, word: BandWord, lambdas: Sequence) -> bool:
    for lam in lambdas:
        try:
            band_module(alg, BandModuleSpec(word, lam, 1))
        except InvalidBandError:
            return False
    return True


def enumerate_bands(alg: BoundAlgebra, max_length: int = None, limit: int = None, seed: int = 0) -> dict:
    """Canonical bands of length <= max_length, ordered by (length, letter keys).

    Words are grown depth first with the local walk conditions checked as
    letters are appended; only canonical representatives are kept. With
    non-monomial relations each word is confirmed by building V(b, λ, 1).
    """
    if max_length is None:
        max_length = Config.MAX_BAND_LENGTH
    if limit is None:
        limit = Config.BAND_LIMIT
    report = validate_special_biserial(alg)
    if not report['is_special_biserial']:
        logger.warning('algebra is not special biserial; enumeration may be incomplete')
    quiver = alg.quiver
    letters = _letters(alg)
    monomial = all(r.is_monomial for r in alg.relations)
    lambdas = lambda_samples(alg.field, seed)
    found = []

    def grow(word: List[Letter]):
        r = len(word)
        if r >= 2:
            band = BandWord(tuple(word))
            if _adjacency_problem(alg, word[-1], word[0]) is None \
                    and len({x.inverse for x in word}) == 2 \
                    and not band.is_proper_power() \
                    and band.canonical(quiver) == band:
                found.append(band)
        if r == max_length:
            return
        for x in letters:
            if _adjacency_problem(alg, word[-1], x) is None:
                word.append(x)
                grow(word)
                word.pop()

    for first in letters:
        grow([first])

    found.sort(key=lambda w: (w.length, w.key(quiver)))
    if not monomial:
        found = [w for w in found if _verified(alg, w, lambdas)]
    truncated = len(found) > limit
    bands = found[:limit]
    logger.info('✓ Enumerated %d bands up to length %d', len(bands), max_length)
    return {'bands': bands, 'truncated': truncated,
            'verified_by': 'syntax' if monomial else 'verification',
            'special_biserial': report['is_special_biserial']}


def _brick_record(alg: BoundAlgebra, word: BandWord, lam) -> dict:
    rep = band_module(alg, BandModuleSpec(word, lam, 1))
    stable = stable_hom_dim(rep, rep)
    return {
        'band': str(word),
        'lambda': alg.field.to_str(lam),
        'brick': is_brick(rep),
        'stable_brick': stable['stable_dim'] == 1,
        'end_dim': stable['hom_dim'],
        'stable_end_dim': stable['stable_dim'],
    }


def brick_band_search(alg: BoundAlgebra, max_length: int = None, seed: int = 0, jobs: int = 1,
                      lambdas: Iterable = None) -> dict:
    """Build V(b, λ, 1) for every enumerated band and sampled λ and record brick-ness."""
    enumeration = enumerate_bands(alg, max_length=max_length, seed=seed)
    if lambdas is None:
        lambdas = lambda_samples(alg.field, seed)
    lambdas = [alg.field.convert(x) for x in lambdas]
    tasks = [(w, lam) for w in enumeration['bands'] for lam in lambdas]
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(lambda t: _brick_record(alg, *t), tasks))
    else:
        records = [_brick_record(alg, w, lam) for w, lam in tasks]
    witness = next((r for r in records if r['brick']), None)
    return {
        'results': records,
        'brick_found': witness is not None,
        'witness': witness,
        'truncated': enumeration['truncated'],
        'verified_by': enumeration['verified_by'],
    }
